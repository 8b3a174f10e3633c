#include "two_factor.hpp"

#include <algorithm>

#include "forbidden.hpp"
#include "matching.hpp"
#include "rational.hpp"
#include "toughness.hpp"

namespace tg {

namespace {

void checkDisjoint(const Graph& g, const VertexSet& s, const VertexSet& t) {
    g.checkSubset(s);
    g.checkSubset(t);
    if (s.intersects(t)) throw InvalidArgument("S and T must be disjoint");
}

void enforceTutteBudget(const Graph& g, const SearchLimits& limits, const char* op) {
    int cap = limits.maxVertices ? limits.maxVertices : kDefaultTutteBudget;
    if (cap > 40) cap = 40;
    if (g.vertexCount() > cap)
        throw BudgetError(std::string(op) + ": graph has " + std::to_string(g.vertexCount()) +
                          " vertices, 3^n pair scan budget is " + std::to_string(cap));
}

struct MaskedEval {
    long long eta;
    int h;
};

// eta and h for (S,T) given as masks over a <=64-vertex graph.
MaskedEval evalPair(const std::vector<std::uint64_t>& adj, std::uint64_t full, std::uint64_t s,
                    std::uint64_t t) {
    long long sumDeg = 0;
    for (std::uint64_t w = t; w;) {
        int x = std::countr_zero(w);
        w &= w - 1;
        sumDeg += std::popcount(adj[x] & ~s);
    }
    std::uint64_t remaining = full & ~s & ~t;
    int h = 0;
    while (remaining) {
        std::uint64_t comp = remaining & -remaining;
        std::uint64_t frontier = comp;
        int edgesToT = 0;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj[v];
                edgesToT += std::popcount(adj[v] & t);
            }
            next &= remaining & ~comp;
            comp |= next;
            frontier = next;
        }
        remaining &= ~comp;
        h += edgesToT & 1;
    }
    return {2 * std::popcount(s) - 2 * std::popcount(t) + sumDeg - h, h};
}

// Walks every disjoint (S,T) assignment, skipping pairs whose eta lower
// bound 2|S| - 2|T| - |rest| already exceeds -2. Visitor returns false to
// stop the scan.
template <typename F>
void forEachCandidatePair(const Graph& g, const SearchLimits& limits, const char* op, F&& visit) {
    const int n = g.vertexCount();
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).word(0);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    long long ticks = 0;

    for (std::uint64_t s = 0;; ++s) {
        const std::uint64_t rest = full & ~s;
        const int pcS = std::popcount(s);
        std::uint64_t t = rest;
        while (true) {
            if ((++ticks & 0xfff) == 0 && limits.expired())
                throw BudgetError(std::string(op) + ": deadline expired");
            const int pcT = std::popcount(t);
            // h <= n - |S| - |T| and sum of degrees >= 0.
            if (2 * pcS - 2 * pcT - (n - pcS - pcT) <= -2) {
                MaskedEval e = evalPair(adj, full, s, t);
                if (e.eta <= -2) {
                    if (!visit(s, t, e)) return;
                }
            }
            if (t == 0) break;
            t = (t - 1) & rest;
        }
        if (s == full) break;
    }
}

// For equal-cardinality masks: the set containing the lowest differing
// vertex is the lexicographically smaller one.
bool lexLessEqualCard(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (!diff) return false;
    return (a >> std::countr_zero(diff)) & 1;
}

TuttePair materializePair(const Graph& g, std::uint64_t s, std::uint64_t t) {
    return etaOf(g, VertexSet::fromMask(g.vertexCount(), s),
                 VertexSet::fromMask(g.vertexCount(), t));
}

}  // namespace

TuttePair etaOf(const Graph& g, const VertexSet& s, const VertexSet& t) {
    checkDisjoint(g, s, t);
    TuttePair pair;
    pair.S = s;
    pair.T = t;
    long long sumDeg = 0;
    for (int x = t.first(); x >= 0; x = t.next(x)) {
        int d = (g.neighbors(x) - s).count();
        pair.degrees.emplace_back(x, d);
        sumDeg += d;
    }
    pair.h = oddComponents(g, s, t).oddCount();
    pair.eta = 2LL * s.count() - 2LL * t.count() + sumDeg - pair.h;
    return pair;
}

OddComponentReport oddComponents(const Graph& g, const VertexSet& s, const VertexSet& t) {
    checkDisjoint(g, s, t);
    OddComponentReport report;
    for (auto& comp : g.components(s | t)) {
        OddComponentEntry entry;
        entry.edgesToT = 0;
        for (int v = comp.first(); v >= 0; v = comp.next(v))
            entry.edgesToT += (g.neighbors(v) & t).count();
        entry.odd = entry.edgesToT % 2 == 1;
        entry.strong = entry.odd && entry.edgesToT >= 3;
        entry.vertices = std::move(comp);
        report.components.push_back(std::move(entry));
    }
    return report;
}

std::optional<TuttePair> findTuttePairExhaustive(const Graph& g, const SearchLimits& limits) {
    enforceTutteBudget(g, limits, "find_tutte_pair");
    std::optional<TuttePair> found;
    forEachCandidatePair(g, limits, "find_tutte_pair",
                         [&](std::uint64_t s, std::uint64_t t, const MaskedEval&) {
                             found = materializePair(g, s, t);
                             return false;
                         });
    return found;
}

std::optional<TuttePair> specialTuttePair(const Graph& g, const SearchLimits& limits) {
    enforceTutteBudget(g, limits, "special_tutte_pair");
    bool found = false;
    std::uint64_t bestS = 0, bestT = 0;
    int bestPcS = -1, bestPcT = 0, bestH = 0;
    forEachCandidatePair(
        g, limits, "special_tutte_pair", [&](std::uint64_t s, std::uint64_t t, const MaskedEval& e) {
            const int pcS = std::popcount(s), pcT = std::popcount(t);
            bool better;
            if (!found)
                better = true;
            else if (pcS != bestPcS)
                better = pcS > bestPcS;
            else if (pcT != bestPcT)
                better = pcT < bestPcT;
            else if (e.h != bestH)
                better = e.h < bestH;
            else if (s != bestS)
                better = lexLessEqualCard(s, bestS);
            else
                better = lexLessEqualCard(t, bestT);
            if (better) {
                found = true;
                bestS = s;
                bestT = t;
                bestPcS = pcS;
                bestPcT = pcT;
                bestH = e.h;
            }
            return true;
        });
    if (!found) return std::nullopt;
    return materializePair(g, bestS, bestT);
}

Lemma5Report checkLemma5(const Graph& g, const TuttePair& pair, const SearchLimits& limits) {
    auto special = specialTuttePair(g, limits);
    if (!special)
        throw InvalidArgument("graph has a 2-factor, so it has no special Tutte pair");
    if (!(special->S == pair.S) || !(special->T == pair.T))
        throw InvalidArgument("supplied pair is not the special Tutte pair");

    const VertexSet& s = pair.S;
    const VertexSet& t = pair.T;
    auto report = oddComponents(g, s, t);

    Lemma5Report out;
    out.tIndependent = true;
    for (int x = t.first(); x >= 0; x = t.next(x))
        if (g.neighbors(x).intersects(t)) out.tIndependent = false;

    out.oddAdjacencyMatchesDegree = true;
    for (int x = t.first(); x >= 0; x = t.next(x)) {
        int dgs = (g.neighbors(x) - s).count();
        int adjacentOdd = 0;
        for (const auto& c : report.components)
            if (c.odd && g.neighbors(x).intersects(c.vertices)) ++adjacentOdd;
        if (adjacentOdd != dgs) out.oddAdjacencyMatchesDegree = false;
    }

    out.componentVerticesSingleTEdge = true;
    out.branchComponentsHaveThreeVertices = true;
    for (const auto& c : report.components) {
        if (!c.odd) continue;
        for (int y = c.vertices.first(); y >= 0; y = c.vertices.next(y))
            if ((g.neighbors(y) & t).count() > 1) out.componentVerticesSingleTEdge = false;
        for (int x = t.first(); x >= 0; x = t.next(x)) {
            if ((g.neighbors(x) - s).count() >= 2 && g.neighbors(x).intersects(c.vertices) &&
                c.vertices.count() < 3)
                out.branchComponentsHaveThreeVertices = false;
        }
    }

    out.claimApplicable = g.vertexCount() >= 3 && isPaPbFree(g, 4, 10) &&
                          isTTough(g, Rational(3, 2)).tough;
    out.claimHolds = !s.empty() && t.count() >= 2;
    return out;
}

GadgetGraph buildGadget(const Graph& g) {
    const int n = g.vertexCount();
    GadgetGraph gadget;
    gadget.originalEdges = g.edges();
    const int m = static_cast<int>(gadget.originalEdges.size());

    std::vector<std::vector<int>> incident(n);
    for (int k = 0; k < m; ++k) {
        incident[gadget.originalEdges[k].first].push_back(k);
        incident[gadget.originalEdges[k].second].push_back(k);
    }
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(incident[v].size()) < 2)
            throw InvalidArgument("vertex " + std::to_string(v) +
                                  " has degree below 2: no 2-factor can exist");

    // Layout per original vertex: d(v) externals then d(v)-2 internals.
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v)
        offset[v + 1] = offset[v] + 2 * static_cast<int>(incident[v].size()) - 2;
    const int gn = offset[n];

    Graph gg(gn);
    gadget.originalVertex.assign(gn, -1);
    gadget.originalEdgeIndex.assign(gn, -1);
    gadget.externalPair.assign(m, {-1, -1});

    for (int v = 0; v < n; ++v) {
        const int d = static_cast<int>(incident[v].size());
        const int extBase = offset[v], intBase = offset[v] + d;
        for (int j = 0; j < d; ++j) {
            gadget.originalVertex[extBase + j] = v;
            gadget.originalEdgeIndex[extBase + j] = incident[v][j];
            int k = incident[v][j];
            if (gadget.externalPair[k].first < 0)
                gadget.externalPair[k].first = extBase + j;
            else
                gadget.externalPair[k].second = extBase + j;
            for (int i = 0; i < d - 2; ++i) gg.addEdgeUnchecked(extBase + j, intBase + i);
        }
        for (int i = 0; i < d - 2; ++i) gadget.originalVertex[intBase + i] = v;
    }
    for (int k = 0; k < m; ++k)
        gg.addEdgeUnchecked(gadget.externalPair[k].first, gadget.externalPair[k].second);

    gadget.graph = std::move(gg);
    return gadget;
}

std::optional<TwoFactor> findTwoFactor(const Graph& g) {
    const int n = g.vertexCount();
    if (n == 0) return TwoFactor{};  // the empty subgraph is vacuously 2-regular
    if (n < 3 || g.minDegree() < 2) return std::nullopt;

    GadgetGraph gadget = buildGadget(g);
    std::vector<int> mate = maxMatching(gadget.graph);
    for (int v = 0; v < gadget.graph.vertexCount(); ++v)
        if (mate[v] < 0) return std::nullopt;

    // Matched external-external edges are exactly the 2-factor edges.
    std::vector<std::vector<int>> chosen(n);
    for (int k = 0; k < static_cast<int>(gadget.originalEdges.size()); ++k) {
        auto [a, b] = gadget.externalPair[k];
        if (mate[a] == b) {
            auto [u, v] = gadget.originalEdges[k];
            chosen[u].push_back(v);
            chosen[v].push_back(u);
        }
    }
    for (int v = 0; v < n; ++v)
        if (chosen[v].size() != 2)
            throw InternalError("gadget matching did not induce a 2-regular subgraph");

    TwoFactor tf;
    std::vector<char> visited(n, false);
    for (int v = 0; v < n; ++v) {
        if (visited[v]) continue;
        std::vector<int> cycle{v};
        visited[v] = true;
        int prev = v, cur = std::min(chosen[v][0], chosen[v][1]);
        while (cur != v) {
            cycle.push_back(cur);
            visited[cur] = true;
            int next = chosen[cur][0] == prev ? chosen[cur][1] : chosen[cur][0];
            prev = cur;
            cur = next;
        }
        tf.cycles.push_back(std::move(cycle));
    }
    if (!isTwoFactor(g, tf)) throw InternalError("extracted 2-factor failed re-validation");
    return tf;
}

bool isTwoFactor(const Graph& g, const TwoFactor& tf) {
    VertexSet seen(g.vertexCount());
    for (const auto& cycle : tf.cycles) {
        if (cycle.size() < 3) return false;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int v = cycle[i];
            if (v < 0 || v >= g.vertexCount() || seen.contains(v)) return false;
            seen.add(v);
            if (!g.hasEdge(v, cycle[(i + 1) % cycle.size()])) return false;
        }
    }
    return seen.count() == g.vertexCount();
}

Path basicUPath(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& c,
                const VertexSet& u, int start) {
    checkDisjoint(g, s, t);
    g.checkSubset(c);
    g.checkSubset(u);
    if (c.empty()) throw InvalidArgument("component C is empty");
    if (c.intersects(s) || c.intersects(t)) throw InvalidArgument("C must avoid S and T");

    // C must be exactly one component of G-(S u T), and an odd one.
    VertexSet removed = s | t;
    bool matched = false;
    int edgesToT = 0;
    for (const auto& comp : g.components(removed)) {
        if (comp == c) {
            matched = true;
            break;
        }
    }
    if (!matched) throw InvalidArgument("C is not a component of G-(S u T)");
    for (int v = c.first(); v >= 0; v = c.next(v)) edgesToT += (g.neighbors(v) & t).count();
    if (edgesToT % 2 == 0) throw InvalidArgument("C is not an odd component");

    VertexSet nTofC = t & g.neighborhood(c);
    if (!u.isSubsetOf(nTofC)) throw InvalidArgument("U must be a subset of N_T(C)");
    if (u.count() < 2) throw InvalidArgument("U must contain at least two vertices");
    if (start < 0 || start >= g.vertexCount() || !u.contains(start))
        throw InvalidArgument("start vertex must belong to U");

    // Layered BFS through C from start; stop at the first other U vertex.
    const int n = g.vertexCount();
    std::vector<int> parent(n, -1);
    VertexSet visited(n);
    VertexSet targets = u;
    targets.remove(start);

    std::vector<int> frontier;
    VertexSet startReach = g.neighbors(start) & c;
    for (int v = startReach.first(); v >= 0; v = startReach.next(v)) {
        parent[v] = start;
        visited.add(v);
        frontier.push_back(v);
    }
    int reachedEnd = -1, reachedVia = -1;
    while (!frontier.empty() && reachedEnd < 0) {
        for (int v : frontier) {
            VertexSet hits = g.neighbors(v) & targets;
            int hit = hits.first();
            if (hit >= 0 && reachedEnd < 0) {
                reachedEnd = hit;
                reachedVia = v;
                break;
            }
        }
        if (reachedEnd >= 0) break;
        std::vector<int> next;
        for (int v : frontier) {
            VertexSet grow = (g.neighbors(v) & c) - visited;
            for (int w = grow.first(); w >= 0; w = grow.next(w)) {
                parent[w] = v;
                visited.add(w);
                next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    if (reachedEnd < 0)
        throw SearchError("no second U vertex reachable through C from start");

    Path path;
    for (int v = reachedVia; v != start; v = parent[v]) path.push_back(v);
    path.push_back(start);
    std::reverse(path.begin(), path.end());
    path.push_back(reachedEnd);

    if (!g.isInducedPath(path))
        throw InternalError("shortest U-path through C is not induced");
    VertexSet interiorTouch = c & g.neighborhood(u);
    int touched = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (interiorTouch.contains(path[i])) ++touched;
    if (touched > 2)
        throw InternalError("U-path passes through more than two vertices of N_C(U)");
    return path;
}

}  // namespace tg
