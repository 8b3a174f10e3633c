#include "graph.hpp"

#include <algorithm>

namespace tg {

Graph Graph::fromEdgeList(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InvalidArgument("vertex count must be non-negative");
    Graph g(n);
    for (auto [u, v] : edges) {
        g.checkVertex(u);
        g.checkVertex(v);
        if (u == v)
            throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        if (g.hasEdge(u, v))
            throw InvalidArgument("duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
        g.addEdgeUnchecked(u, v);
    }
    return g;
}

void Graph::addEdgeUnchecked(int u, int v) {
    checkVertex(u);
    checkVertex(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v)) return;
    adj_[u].add(v);
    adj_[v].add(u);
    ++m_;
}

int Graph::minDegree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].nextFrom(u + 1); v >= 0; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

std::vector<VertexSet> Graph::components(const VertexSet& removed) const {
    checkSubset(removed);
    std::vector<VertexSet> parts;
    VertexSet remaining = fullSet() - removed;
    while (true) {
        int seed = remaining.first();
        if (seed < 0) break;
        VertexSet comp(n_);
        comp.add(seed);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(n_);
            for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= adj_[v];
            next &= remaining;
            next.subtract(comp);
            comp |= next;
            frontier = std::move(next);
        }
        remaining.subtract(comp);
        parts.push_back(std::move(comp));
    }
    return parts;
}

int Graph::componentCount(const VertexSet& removed) const {
    checkSubset(removed);
    // Single-word graphs get a no-allocation sweep; they dominate the
    // enumeration workloads.
    if (removed.wordCount() == 1) {
        std::uint64_t remaining = fullSet().word(0) & ~removed.word(0);
        int count = 0;
        while (remaining) {
            std::uint64_t comp = remaining & -remaining;
            std::uint64_t frontier = comp;
            while (frontier) {
                std::uint64_t next = 0;
                std::uint64_t f = frontier;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj_[v].word(0);
                }
                next &= remaining & ~comp;
                comp |= next;
                frontier = next;
            }
            remaining &= ~comp;
            ++count;
        }
        return count;
    }
    int count = 0;
    VertexSet remaining = fullSet() - removed;
    while (true) {
        int seed = remaining.first();
        if (seed < 0) break;
        VertexSet comp(n_);
        comp.add(seed);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(n_);
            for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= adj_[v];
            next &= remaining;
            next.subtract(comp);
            comp |= next;
            frontier = std::move(next);
        }
        remaining.subtract(comp);
        ++count;
    }
    return count;
}

VertexSet Graph::neighborhood(const VertexSet& u) const {
    checkSubset(u);
    VertexSet nb(n_);
    for (int v = u.first(); v >= 0; v = u.next(v)) nb |= adj_[v];
    nb.subtract(u);
    return nb;
}

VertexSet Graph::closedNeighborhood(const VertexSet& u) const {
    checkSubset(u);
    VertexSet nb = u;
    for (int v = u.first(); v >= 0; v = u.next(v)) nb |= adj_[v];
    return nb;
}

std::pair<Graph, std::vector<int>> Graph::induced(const VertexSet& u) const {
    checkSubset(u);
    std::vector<int> map = u.toVector();
    std::vector<int> inverse(n_, -1);
    for (std::size_t i = 0; i < map.size(); ++i) inverse[map[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(map.size()));
    for (std::size_t i = 0; i < map.size(); ++i) {
        VertexSet inside = adj_[map[i]] & u;
        for (int v = inside.nextFrom(map[i] + 1); v >= 0; v = inside.next(v))
            h.addEdgeUnchecked(static_cast<int>(i), inverse[v]);
    }
    return {std::move(h), std::move(map)};
}

bool Graph::isPath(const Path& p) const {
    VertexSet seen(n_);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= n_ || seen.contains(p[i])) return false;
        seen.add(p[i]);
        if (i > 0 && !hasEdge(p[i - 1], p[i])) return false;
    }
    return true;
}

bool Graph::isInducedPath(const Path& p) const {
    if (!isPath(p)) return false;
    for (std::size_t i = 0; i + 2 < p.size(); ++i)
        for (std::size_t j = i + 2; j < p.size(); ++j)
            if (hasEdge(p[i], p[j])) return false;
    return true;
}

}  // namespace tg
