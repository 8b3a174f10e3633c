#include "forbidden.hpp"

#include <algorithm>
#include <unordered_map>

namespace tg {

namespace {

// Depth-first extension of partial induced paths. avail[r] holds the
// vertices not adjacent (nor equal) to any of path[0..r-1]; extension
// candidates are avail[r] & N(path[r]). When `emit` returns false the
// enumeration stops and true is reported to the caller.
class InducedPathSearch {
public:
    InducedPathSearch(const Graph& g, int k) : g_(g), k_(k), path_(k), avail_(k) {}

    template <typename F>
    bool run(const VertexSet& allowed, F&& emit) {
        if (k_ == 1) {
            for (int v = allowed.first(); v >= 0; v = allowed.next(v)) {
                path_[0] = v;
                if (!emit(path_)) return true;
            }
            return false;
        }
        for (int v = allowed.first(); v >= 0; v = allowed.next(v)) {
            path_[0] = v;
            avail_[0] = allowed;
            if (extend(1, emit)) return true;
        }
        return false;
    }

private:
    template <typename F>
    bool extend(int depth, F&& emit) {
        const int last = path_[depth - 1];
        VertexSet cand = avail_[depth - 1] & g_.neighbors(last);
        if (depth + 1 < k_) {
            avail_[depth] = avail_[depth - 1];
            avail_[depth].subtract(g_.neighbors(last));
            avail_[depth].remove(last);
        }
        for (int c = cand.first(); c >= 0; c = cand.next(c)) {
            path_[depth] = c;
            if (depth + 1 == k_) {
                if (!emit(path_)) return true;
            } else if (extend(depth + 1, emit)) {
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    int k_;
    Path path_;
    std::vector<VertexSet> avail_;
};

}  // namespace

std::optional<Path> findInducedPathWithin(const Graph& g, const VertexSet& allowed, int k) {
    if (k < 1) throw InvalidArgument("path length must be at least 1");
    g.checkSubset(allowed);
    std::optional<Path> found;
    InducedPathSearch search(g, k);
    search.run(allowed, [&](const Path& p) {
        found = p;
        return false;
    });
    return found;
}

std::optional<Path> findInducedPath(const Graph& g, int k) {
    return findInducedPathWithin(g, g.fullSet(), k);
}

std::optional<PathUnionWitness> findInducedPathUnion(const Graph& g, int a, int b) {
    if (a < 1 || b < 1) throw InvalidArgument("path lengths must be at least 1");
    const int shorter = std::min(a, b), longer = std::max(a, b);
    if (shorter + longer > g.vertexCount()) return std::nullopt;

    const VertexSet full = g.fullSet();
    // Negative cache: residual vertex sets already known to hold no induced
    // P_longer. Exact-set membership, never hash-only.
    std::unordered_map<std::uint64_t, std::vector<VertexSet>> failed;
    auto alreadyFailed = [&](const VertexSet& resid) {
        auto it = failed.find(resid.hash());
        if (it == failed.end()) return false;
        return std::find(it->second.begin(), it->second.end(), resid) != it->second.end();
    };

    std::optional<PathUnionWitness> witness;
    InducedPathSearch search(g, shorter);
    search.run(full, [&](const Path& first) {
        // Each path shows up once per direction; keeping one orientation
        // halves the outer enumeration.
        if (shorter >= 2 && first.front() > first.back()) return true;
        VertexSet firstSet = VertexSet::of(g.vertexCount(), first.begin(), first.end());
        VertexSet resid = full - g.closedNeighborhood(firstSet);
        if (resid.count() < longer) return true;
        if (alreadyFailed(resid)) return true;
        auto second = findInducedPathWithin(g, resid, longer);
        if (!second) {
            failed[resid.hash()].push_back(std::move(resid));
            return true;
        }
        PathUnionWitness w;
        w.pathA = a == shorter ? first : *second;
        w.pathB = a == shorter ? *second : first;
        if (!validatePathUnionWitness(g, w, a, b))
            throw InternalError("path union witness failed re-validation");
        witness = std::move(w);
        return false;
    });
    return witness;
}

bool isPaPbFree(const Graph& g, int a, int b) {
    return !findInducedPathUnion(g, a, b).has_value();
}

bool validatePathUnionWitness(const Graph& g, const PathUnionWitness& w, int a, int b) {
    if (static_cast<int>(w.pathA.size()) != a || static_cast<int>(w.pathB.size()) != b)
        return false;
    if (!g.isInducedPath(w.pathA) || !g.isInducedPath(w.pathB)) return false;
    VertexSet setA = VertexSet::of(g.vertexCount(), w.pathA.begin(), w.pathA.end());
    for (int v : w.pathB) {
        if (setA.contains(v)) return false;
        if (g.neighbors(v).intersects(setA)) return false;
    }
    return true;
}

namespace {

bool validSplit(const Graph& g, const VertexSet& clique, const VertexSet& independent) {
    for (int v = clique.first(); v >= 0; v = clique.next(v))
        for (int u = clique.next(v); u >= 0; u = clique.next(u))
            if (!g.hasEdge(v, u)) return false;
    for (int v = independent.first(); v >= 0; v = independent.next(v))
        if (g.neighbors(v).intersects(independent)) return false;
    return true;
}

}  // namespace

std::optional<SplitPartition> splitPartition(const Graph& g) {
    const int n = g.vertexCount();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
        return x < y;
    });

    // Hammer-Simeone: with d_1 >= ... >= d_n and q = max{i : d_i >= i-1},
    // G is split iff sum_{i<=q} d_i = q(q-1) + sum_{i>q} d_i.
    int q = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i) q = i + 1;
    long long lhs = 0, rhs = static_cast<long long>(q) * (q - 1);
    for (int i = 0; i < q; ++i) lhs += g.degree(order[i]);
    for (int i = q; i < n; ++i) rhs += g.degree(order[i]);
    if (lhs != rhs) return std::nullopt;

    SplitPartition part{VertexSet(n), VertexSet(n)};
    for (int i = 0; i < n; ++i)
        (i < q ? part.clique : part.independent).add(order[i]);
    if (validSplit(g, part.clique, part.independent)) return part;

    // Degree ties can in principle demand a different assignment; fall back
    // to an exhaustive partition search at small scale.
    if (n > 20) throw InternalError("degree-order split partition failed beyond search budget");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet clique = VertexSet::fromMask(n, mask);
        VertexSet indep = clique.complement();
        if (validSplit(g, clique, indep)) return SplitPartition{clique, indep};
    }
    throw InternalError("degree characterization and partition search disagree");
}

}  // namespace tg
