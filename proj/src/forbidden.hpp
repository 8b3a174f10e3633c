#pragma once

#include <optional>

#include "graph.hpp"

namespace tg {

// Two vertex-disjoint induced paths with no edge of G between them, so that
// together they induce P_a u P_b.
struct PathUnionWitness {
    Path pathA;  // a vertices
    Path pathB;  // b vertices
};

struct SplitPartition {
    VertexSet clique;
    VertexSet independent;
};

// Some induced path on exactly k vertices, or nullopt.
std::optional<Path> findInducedPath(const Graph& g, int k);
// Same, restricted to the vertices in `allowed`.
std::optional<Path> findInducedPathWithin(const Graph& g, const VertexSet& allowed, int k);

// Witness that G contains P_a u P_b induced (a <= b recommended), or nullopt
// iff G is (P_a u P_b)-free. The a-path is enumerated first; the b-path is
// searched outside its closed neighborhood, which is exactly the "no edges
// between the parts" condition.
std::optional<PathUnionWitness> findInducedPathUnion(const Graph& g, int a, int b);

bool isPaPbFree(const Graph& g, int a, int b);

// Split-graph recognition via the degree-sequence characterization; the
// returned partition is re-validated before being handed out.
std::optional<SplitPartition> splitPartition(const Graph& g);

bool validatePathUnionWitness(const Graph& g, const PathUnionWitness& w, int a, int b);

}  // namespace tg
