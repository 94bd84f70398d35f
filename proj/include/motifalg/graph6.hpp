#pragma once

#include <string>

#include "motifalg/graph.hpp"

namespace motifalg {

// graph6 text format for unordered graphs, bit-exact per the published
// specification. Supports n <= 62 (single size byte).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

} // namespace motifalg
