#pragma once

#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace tg {

// Ordered vertex sequence without repeats; see Graph::isInducedPath.
using Path = std::vector<int>;

// Finite simple undirected graph on vertices 0..n-1. Immutable once built;
// adjacency is one bit row per vertex so neighborhood unions, component
// sweeps and induced-subgraph tests are word-parallel.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    // Strict constructor for external input: rejects out-of-range endpoints,
    // self-loops and duplicate edges instead of coercing.
    static Graph fromEdgeList(int n, const std::vector<std::pair<int, int>>& edges);

    int vertexCount() const { return n_; }
    int edgeCount() const { return m_; }

    bool hasEdge(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int minDegree() const;
    bool isComplete() const { return static_cast<long long>(m_) * 2 == static_cast<long long>(n_) * (n_ - 1); }

    VertexSet fullSet() const {
        VertexSet s(n_);
        for (int v = 0; v < n_; ++v) s.add(v);
        return s;
    }

    std::vector<std::pair<int, int>> edges() const;

    // Connected components of G - removed, as a partition of V \ removed.
    std::vector<VertexSet> components(const VertexSet& removed) const;
    // omega(G - removed) without materializing the partition.
    int componentCount(const VertexSet& removed) const;

    // N_G(U) = (union of N(x), x in U) \ U.
    VertexSet neighborhood(const VertexSet& u) const;
    // Closed neighborhood U union N_G(U).
    VertexSet closedNeighborhood(const VertexSet& u) const;

    // Subgraph induced on U, relabeled to 0..|U|-1. map[newId] = oldId.
    std::pair<Graph, std::vector<int>> induced(const VertexSet& u) const;

    bool isPath(const Path& p) const;
    // Induced: consecutive vertices adjacent, no other pair adjacent.
    bool isInducedPath(const Path& p) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    // Internal builder; addEdge is idempotent and validates range/loops.
    void addEdgeUnchecked(int u, int v);

    void checkVertex(int v) const {
        if (v < 0 || v >= n_)
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0," +
                                  std::to_string(n_) + ")");
    }
    void checkSubset(const VertexSet& s) const {
        if (s.universe() != n_)
            throw InvalidArgument("vertex set universe " + std::to_string(s.universe()) +
                                  " does not match graph order " + std::to_string(n_));
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

}  // namespace tg
