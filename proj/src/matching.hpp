#pragma once

#include <utility>
#include <vector>

#include "graph.hpp"

namespace tg {

// Maximum cardinality matching in a general graph (Edmonds' blossom
// shrinking). Returns mate[v] = matched partner or -1. Exact, deterministic.
std::vector<int> maxMatching(const Graph& g);

// The matching as an edge list (u < v), ascending.
std::vector<std::pair<int, int>> matchingEdges(const std::vector<int>& mate);

}  // namespace tg
