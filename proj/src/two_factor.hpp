#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"
#include "search_limits.hpp"

namespace tg {

// One component C of G-(S u T): its vertices, e_G(C,T), and (for odd
// components) whether it is strong (e_G(C,T) >= 3) or weak (= 1).
struct OddComponentEntry {
    VertexSet vertices;
    int edgesToT = 0;
    bool odd = false;
    bool strong = false;
};

struct OddComponentReport {
    std::vector<OddComponentEntry> components;
    int oddCount() const {
        int h = 0;
        for (const auto& c : components) h += c.odd ? 1 : 0;
        return h;
    }
};

// Disjoint (S,T) with eta(S,T) = 2|S| - 2|T| + sum_{x in T} d_{G-S}(x) - h(S,T).
struct TuttePair {
    VertexSet S, T;
    long long eta = 0;
    int h = 0;
    // (x, d_{G-S}(x)) for x in T, ascending by vertex.
    std::vector<std::pair<int, int>> degrees;
};

struct Lemma5Report {
    bool tIndependent = false;          // (i)
    bool oddAdjacencyMatchesDegree = false;  // (ii)
    bool componentVerticesSingleTEdge = false;  // (iii)
    bool branchComponentsHaveThreeVertices = false;  // (iv)
    // Claim applicability: n >= 3, 3/2-tough and (P4 u P10)-free.
    bool claimApplicable = false;
    bool claimHolds = false;  // S nonempty and |T| >= 2
    bool allFour() const {
        return tIndependent && oddAdjacencyMatchesDegree && componentVerticesSingleTEdge &&
               branchComponentsHaveThreeVertices;
    }
};

// Spanning 2-regular subgraph as vertex-disjoint cycles (each length >= 3).
struct TwoFactor {
    std::vector<std::vector<int>> cycles;
};

// 2-factor -> perfect matching reduction. Original vertex v of degree d(v)
// becomes d(v) external vertices (one per incident edge) completely joined to
// d(v)-2 internal ones; each original edge becomes one external-external edge.
struct GadgetGraph {
    Graph graph;
    std::vector<std::pair<int, int>> originalEdges;   // lex-sorted, u < v
    std::vector<int> originalVertex;                  // gadget vertex -> original vertex
    std::vector<int> originalEdgeIndex;               // -1 for internal vertices
    std::vector<std::pair<int, int>> externalPair;    // edge index -> (ext at u, ext at v)
};

TuttePair etaOf(const Graph& g, const VertexSet& s, const VertexSet& t);
OddComponentReport oddComponents(const Graph& g, const VertexSet& s, const VertexSet& t);

// Exhaustive 3^n scan for a pair with eta <= -2 (deterministic first hit).
// Present iff G has no 2-factor: this is the oracle side of the dual route.
std::optional<TuttePair> findTuttePairExhaustive(const Graph& g, const SearchLimits& limits = {});

// Among all Tutte pairs: maximize |S|, then minimize |T|, then minimize h,
// then lexicographically smallest S, then smallest T.
std::optional<TuttePair> specialTuttePair(const Graph& g, const SearchLimits& limits = {});

// Verifies the four special-pair properties plus the nonempty-S / |T| >= 2
// claim for qualifying graphs. Throws InvalidArgument when the supplied pair
// is not the special Tutte pair of g (re-derived and compared).
Lemma5Report checkLemma5(const Graph& g, const TuttePair& pair, const SearchLimits& limits = {});

// Throws InvalidArgument when some vertex has degree < 2.
GadgetGraph buildGadget(const Graph& g);

// Constructive 2-factor existence via gadget + maximum matching.
std::optional<TwoFactor> findTwoFactor(const Graph& g);

// Re-validates a claimed 2-factor against g.
bool isTwoFactor(const Graph& g, const TwoFactor& tf);

// Shortest induced start..U path through the odd component C: internal
// vertices in C, at most two of them adjacent to U. start must lie in U,
// U subset of N_T(C), |U| >= 2.
Path basicUPath(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& c,
                const VertexSet& u, int start);

}  // namespace tg
