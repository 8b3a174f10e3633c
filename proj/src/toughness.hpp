#pragma once

#include <optional>

#include "graph.hpp"
#include "rational.hpp"
#include "search_limits.hpp"

namespace tg {

struct ToughnessResult {
    Rational value;
    // Attaining cut set; absent iff value is infinite (complete graph).
    std::optional<VertexSet> witness;
};

struct ToughCheck {
    bool tough = false;
    // A violating cut set when tough is false.
    std::optional<VertexSet> counterexample;
};

// |U| / omega(G-U) when omega(G-U) >= 2, otherwise nullopt.
std::optional<Rational> cutRatio(const Graph& g, const VertexSet& u);

// Exact t(G) by subset enumeration in increasing |U| with a ratio lower-bound
// cutoff. Infinite iff G is complete; 0 with witness {} when G is
// disconnected. Witness tie-break: smallest |U|, then lexicographically
// smallest set. Throws BudgetError beyond limits.maxVertices (default 20).
ToughnessResult toughnessExact(const Graph& g, const SearchLimits& limits = {});

// Whether t * omega(G-U) <= |U| for every U with omega(G-U) >= 2.
// Complete graphs are t-tough for every t.
ToughCheck isTTough(const Graph& g, const Rational& t, const SearchLimits& limits = {});

}  // namespace tg
