// Brute-force reference implementations used as independent oracles by the
// unit and acceptance suites. These deliberately avoid the library's search
// code paths: components are recomputed with a plain BFS, matchings and
// 2-factors by exhaustive branching, pattern containment by subset +
// permutation isomorphism.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace oracle {

inline int componentCount(const tg::Graph& g, std::uint64_t removedMask) {
    const int n = g.vertexCount();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0 || (removedMask >> s & 1)) continue;
        ++count;
        std::vector<int> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (u == v || !g.hasEdge(u, v)) continue;
                if (comp[u] >= 0 || (removedMask >> u & 1)) continue;
                comp[u] = count;
                stack.push_back(u);
            }
        }
    }
    return count;
}

// Naive full-subset toughness; infinity for complete graphs.
inline tg::Rational toughness(const tg::Graph& g) {
    const int n = g.vertexCount();
    bool found = false;
    tg::Rational best(0, 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int omega = componentCount(g, mask);
        if (omega < 2) continue;
        tg::Rational r(std::popcount(mask), omega);
        if (!found || r < best) {
            best = r;
            found = true;
        }
    }
    return found ? best : tg::Rational::infinity();
}

// Exhaustive search for a spanning 2-regular subgraph.
inline bool hasTwoFactor(const tg::Graph& g) {
    const int n = g.vertexCount();
    if (n == 0) return true;
    auto edges = g.edges();
    std::vector<int> deg(n, 0), remaining(n, 0);
    for (auto [u, v] : edges) {
        ++remaining[u];
        ++remaining[v];
    }
    // deg: chosen degree so far; remaining: undecided incident edges.
    std::function<bool(std::size_t)> rec = [&](std::size_t at) -> bool {
        if (at == edges.size()) {
            for (int v = 0; v < n; ++v)
                if (deg[v] != 2) return false;
            return true;
        }
        auto [u, v] = edges[at];
        --remaining[u];
        --remaining[v];
        // skip this edge
        if (deg[u] + remaining[u] >= 2 && deg[v] + remaining[v] >= 2 && rec(at + 1)) {
            ++remaining[u];
            ++remaining[v];
            return true;
        }
        // take this edge
        bool ok = false;
        if (deg[u] < 2 && deg[v] < 2) {
            ++deg[u];
            ++deg[v];
            ok = rec(at + 1);
            --deg[u];
            --deg[v];
        }
        ++remaining[u];
        ++remaining[v];
        return ok;
    };
    return rec(0);
}

// Maximum matching size by branching on the lowest unmatched vertex.
inline int maxMatchingSize(const tg::Graph& g) {
    const int n = g.vertexCount();
    std::vector<char> used(n, false);
    std::function<int(int)> rec = [&](int v) -> int {
        while (v < n && used[v]) ++v;
        if (v >= n) return 0;
        used[v] = true;
        int best = rec(v + 1);  // leave v unmatched
        for (int u = v + 1; u < n; ++u) {
            if (used[u] || !g.hasEdge(v, u)) continue;
            used[u] = true;
            best = std::max(best, 1 + rec(v + 1));
            used[u] = false;
        }
        used[v] = false;
        return best;
    };
    return rec(0);
}

// Tutte-Berge: nu(G) = (n - max_U (oddComponents(G-U) - |U|)) / 2, where odd
// means odd cardinality. Independent route to the maximum matching size.
inline int tutteBergeMatchingSize(const tg::Graph& g) {
    const int n = g.vertexCount();
    int maxDeficiency = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> comp(n, -1);
        int oddComponents = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0 || (mask >> s & 1)) continue;
            int size = 0;
            std::vector<int> stack{s};
            comp[s] = s;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++size;
                for (int u = 0; u < n; ++u) {
                    if (u == v || !g.hasEdge(u, v)) continue;
                    if (comp[u] >= 0 || (mask >> u & 1)) continue;
                    comp[u] = s;
                    stack.push_back(u);
                }
            }
            if (size % 2 == 1) ++oddComponents;
        }
        maxDeficiency = std::max(maxDeficiency, oddComponents - std::popcount(mask));
    }
    return (n - maxDeficiency) / 2;
}

inline tg::Graph pathUnionPattern(int a, int b) {
    tg::Graph p(a + b);
    for (int i = 1; i < a; ++i) p.addEdgeUnchecked(i - 1, i);
    for (int i = a + 1; i < a + b; ++i) p.addEdgeUnchecked(i - 1, i);
    return p;
}

// Does `sub` (a vertex list of g) induce a subgraph isomorphic to `pattern`?
inline bool inducesIsomorphic(const tg::Graph& g, const std::vector<int>& sub,
                              const tg::Graph& pattern) {
    std::vector<int> perm(sub.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (std::size_t i = 0; i < sub.size() && match; ++i)
            for (std::size_t j = i + 1; j < sub.size() && match; ++j)
                if (g.hasEdge(sub[i], sub[j]) !=
                    pattern.hasEdge(perm[i], perm[j]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// (P_a u P_b)-freeness by enumerating all (a+b)-subsets.
inline bool isPaPbFree(const tg::Graph& g, int a, int b) {
    const int n = g.vertexCount();
    const int k = a + b;
    if (k > n) return true;
    tg::Graph pattern = pathUnionPattern(a, b);
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (inducesIsomorphic(g, idx, pattern)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool isSplit(const tg::Graph& g) {
    const int n = g.vertexCount();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v) {
                bool inCliqueU = mask >> u & 1, inCliqueV = mask >> v & 1;
                if (inCliqueU && inCliqueV && !g.hasEdge(u, v)) ok = false;
                if (!inCliqueU && !inCliqueV && g.hasEdge(u, v)) ok = false;
            }
        if (ok) return true;
    }
    return n == 0;
}

inline tg::Graph randomGraph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    tg::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.addEdgeUnchecked(u, v);
    return g;
}

inline tg::Graph cycle(int n) {
    tg::Graph g(n);
    for (int i = 0; i < n; ++i) g.addEdgeUnchecked(i, (i + 1) % n);
    return g;
}

inline tg::Graph path(int n) {
    tg::Graph g(n);
    for (int i = 1; i < n; ++i) g.addEdgeUnchecked(i - 1, i);
    return g;
}

inline tg::Graph complete(int n) {
    tg::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.addEdgeUnchecked(u, v);
    return g;
}

inline tg::Graph star(int leaves) {
    tg::Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.addEdgeUnchecked(0, i);
    return g;
}

inline tg::Graph petersen() {
    tg::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.addEdgeUnchecked(i, (i + 1) % 5);          // outer cycle
        g.addEdgeUnchecked(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.addEdgeUnchecked(i, 5 + i);                // spokes
    }
    return g;
}

}  // namespace oracle
