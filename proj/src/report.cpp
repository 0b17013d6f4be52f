#include "sel/report.hpp"

#include <cmath>
#include <cstdio>

namespace sel {

namespace {

void dump_rec(const nlohmann::json& j, std::string& out, int indent,
              int depth) {
  auto pad = [&](int d) { out.append(static_cast<std::size_t>(indent * d), ' '); };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += ": ";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      out += "\n";
      pad(depth);
      out += "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& el : j) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        dump_rec(el, out, indent, depth + 1);
      }
      out += "\n";
      pad(depth);
      out += "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += nlohmann::json(v > 0 ? "inf" : (v < 0 ? "-inf" : "nan")).dump();
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

nlohmann::json vertex_list(const VertexSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  s.for_each([&](int v) { arr.push_back(v); });
  return arr;
}

}  // namespace

std::string dump_json_17(const nlohmann::json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  return out;
}

nlohmann::json to_json(const PerronResult& p) {
  nlohmann::json comps = nlohmann::json::array();
  for (const ComponentSpectrum& c : p.components) {
    comps.push_back({{"vertices", vertex_list(c.vertices)},
                     {"rho", c.rho},
                     {"iterations", c.iterations},
                     {"converged", c.converged}});
  }
  return {{"rho", p.rho},
          {"residual", p.residual},
          {"iterations", p.iterations},
          {"converged", p.converged},
          {"component", vertex_list(p.component)},
          {"components", comps}};
}

nlohmann::json to_json(const PackingResult& p) {
  return {{"nu", p.nu},
          {"exact", p.exact},
          {"witness", p.witness.cycles}};
}

nlohmann::json to_json(const DisjointCyclesResult& r, int k) {
  return {{"k", k},
          {"has_k_disjoint_cycles", r.found},
          {"exact", r.exact},
          {"witness", r.witness.cycles}};
}

nlohmann::json to_json(const LemmaReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const BoundCheck& c : rep.checks) {
    checks.push_back({{"id", c.id},
                      {"claim", c.claim},
                      {"hypothesis_met", c.hypothesis_met},
                      {"claimed", c.claimed},
                      {"measured", c.measured},
                      {"status", to_string(c.status)}});
  }
  return {{"n", rep.n},
          {"k", rep.k},
          {"lambda", rep.lambda},
          {"hypothesis_met", rep.hypothesis_met},
          {"checks", checks}};
}

nlohmann::json to_json(const ThresholdSets& t, bool include_members) {
  auto set_json = [&](const VertexSet& s) {
    nlohmann::json j{{"size", s.count()}};
    if (include_members) j["members"] = vertex_list(s);
    return j;
  };
  return {{"k", t.k},
          {"lambda", t.lambda},
          {"u_star", t.u_star},
          {"R", set_json(t.r)},
          {"Rp", set_json(t.r_prime)},
          {"Rpp", set_json(t.r_dprime)},
          {"Rppp", set_json(t.r_tprime)},
          {"Rpppp", set_json(t.r_qprime)}};
}

nlohmann::json to_json(const SplitThresholdStructure& s) {
  auto cls = [](const SplitClassInfo& c) {
    nlohmann::json classes = nlohmann::json::array();
    if (c.clique) classes.push_back("clique");
    if (c.independent) classes.push_back("independent");
    return nlohmann::json{{"size", c.size}, {"classes", classes}};
  };
  return {{"n", s.n},
          {"k", s.k},
          {"lambda", s.lambda},
          {"rho", s.rho},
          {"ratio_independent", s.ratio_indep},
          {"R", cls(s.r)},
          {"Rp", cls(s.r_prime)},
          {"Rpp", cls(s.r_dprime)},
          {"Rppp", cls(s.r_tprime)},
          {"Rpppp", cls(s.r_qprime)}};
}

nlohmann::json to_json(const EnumStats& s) {
  return {{"classes_visited", s.classes_visited},
          {"candidates", s.candidates},
          {"infeasible_pruned", s.infeasible_pruned},
          {"noncanonical_rejected", s.noncanonical_rejected}};
}

nlohmann::json to_json(const ExtremalRecord& rec) {
  nlohmann::json ws = nlohmann::json::array();
  for (const SearchWitness& w : rec.witnesses) {
    nlohmann::json jw{{"graph6", w.graph6}};
    if (w.key.n > 0) jw["key"] = key_to_hex(w.key);
    if (rec.objective == Objective::spectral) jw["rho"] = w.rho;
    ws.push_back(jw);
  }
  return {{"objective",
           rec.objective == Objective::edges ? "edges" : "spectral-radius"},
          {"optimum", rec.optimum},
          {"witnesses", ws},
          {"graphs_examined", rec.graphs_examined},
          {"rho_evaluations", rec.rho_evaluations},
          {"exact", rec.exact},
          {"stats", to_json(rec.stats)}};
}

nlohmann::json make_report(const std::string& command,
                           nlohmann::json parameters, nlohmann::json results,
                           double wall_time_s) {
  return {{"schema_version", kReportSchemaVersion},
          {"tool_version", kToolVersion},
          {"command", command},
          {"parameters", std::move(parameters)},
          {"results", std::move(results)},
          {"wall_time_s", wall_time_s}};
}

}  // namespace sel
