#pragma once

#include <string>

#include <json.hpp>

#include "sel/cycles.hpp"
#include "sel/search.hpp"
#include "sel/spectral.hpp"
#include "sel/thresholds.hpp"

namespace sel {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Serializer with every double printed at 17 significant digits, so equal
// reports are byte-identical and every value round-trips exactly.
std::string dump_json_17(const nlohmann::json& j, int indent = 2);

nlohmann::json to_json(const PerronResult& p);
nlohmann::json to_json(const PackingResult& p);
nlohmann::json to_json(const DisjointCyclesResult& r, int k);
nlohmann::json to_json(const LemmaReport& rep);
nlohmann::json to_json(const ThresholdSets& t, bool include_members);
nlohmann::json to_json(const SplitThresholdStructure& s);
nlohmann::json to_json(const EnumStats& s);
nlohmann::json to_json(const ExtremalRecord& rec);

// Standard envelope; wall_time_s is the only field allowed to vary between
// identical runs.
nlohmann::json make_report(const std::string& command,
                           nlohmann::json parameters, nlohmann::json results,
                           double wall_time_s);

}  // namespace sel
