#pragma once

#include <string>
#include <string_view>

#include "sel/graph.hpp"

namespace sel {

// Header-less graph6 (McKay's format): order in 6-bit bytes, then the upper
// triangle column by column, six bits per printable character.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace sel
