#include "toughness.hpp"

namespace tg {

namespace {

void enforceBudget(const Graph& g, const SearchLimits& limits, const char* op) {
    int cap = limits.maxVertices ? limits.maxVertices : kDefaultToughnessBudget;
    if (cap > 64) cap = 64;  // subset scan is single-word
    if (g.vertexCount() > cap)
        throw BudgetError(std::string(op) + ": graph has " + std::to_string(g.vertexCount()) +
                          " vertices, enumeration budget is " + std::to_string(cap));
}

// omega over a <=64-vertex graph held as one adjacency word per vertex.
int omegaMask(const std::vector<std::uint64_t>& adj, std::uint64_t full, std::uint64_t removed) {
    std::uint64_t remaining = full & ~removed;
    int count = 0;
    while (remaining) {
        std::uint64_t comp = remaining & -remaining;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                next |= adj[std::countr_zero(frontier)];
                frontier &= frontier - 1;
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

std::vector<std::uint64_t> adjWords(const Graph& g) {
    std::vector<std::uint64_t> adj(g.vertexCount());
    for (int v = 0; v < g.vertexCount(); ++v) adj[v] = g.neighbors(v).word(0);
    return adj;
}

// Visits the size-k subsets of 0..n-1 in ascending-element lexicographic
// order; the visitor returns false to stop early.
template <typename F>
bool forEachCombination(int n, int k, F&& visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return true;
    while (true) {
        if (!visit(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t maskOf(const std::vector<int>& idx) {
    std::uint64_t m = 0;
    for (int v : idx) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

std::optional<Rational> cutRatio(const Graph& g, const VertexSet& u) {
    g.checkSubset(u);
    int omega = g.componentCount(u);
    if (omega < 2) return std::nullopt;
    return Rational(u.count(), omega);
}

ToughnessResult toughnessExact(const Graph& g, const SearchLimits& limits) {
    if (g.vertexCount() < 1) throw InvalidArgument("toughness needs at least one vertex");
    enforceBudget(g, limits, "toughness_exact");
    if (g.isComplete()) return {Rational::infinity(), std::nullopt};

    const int n = g.vertexCount();
    const auto adj = adjWords(g);
    const std::uint64_t full = g.fullSet().word(0);

    Rational best = Rational::infinity();
    std::uint64_t bestMask = 0;
    bool found = false;
    long long ticks = 0;

    for (int k = 0; k < n; ++k) {
        // No subset of size >= k can beat the incumbent once k/(n-k) reaches it.
        if (found && Rational(k, n - k) >= best) break;
        forEachCombination(n, k, [&](const std::vector<int>& idx) {
            if ((++ticks & 0x3ff) == 0 && limits.expired())
                throw BudgetError("toughness_exact: deadline expired");
            std::uint64_t mask = maskOf(idx);
            int omega = omegaMask(adj, full, mask);
            if (omega >= 2) {
                Rational r(k, omega);
                if (!found || r < best) {
                    best = r;
                    bestMask = mask;
                    found = true;
                }
            }
            return true;
        });
    }
    // Non-complete graphs always have a qualifying cut (e.g. the
    // non-neighborhood of a missing edge).
    if (!found) throw InternalError("no qualifying cut set in a non-complete graph");
    return {best, VertexSet::fromMask(n, bestMask)};
}

ToughCheck isTTough(const Graph& g, const Rational& t, const SearchLimits& limits) {
    if (!t.isInfinite() && t < Rational(0, 1)) throw InvalidArgument("t must be non-negative");
    enforceBudget(g, limits, "is_t_tough");
    if (g.isComplete()) return {true, std::nullopt};

    const int n = g.vertexCount();
    const auto adj = adjWords(g);
    const std::uint64_t full = g.fullSet().word(0);
    long long ticks = 0;

    ToughCheck result{true, std::nullopt};
    for (int k = 0; k < n && result.tough; ++k) {
        // A violation needs |U|/omega < t and omega <= n-|U|, so sizes with
        // k/(n-k) >= t cannot produce one.
        if (Rational(k, n - k) >= t) break;
        forEachCombination(n, k, [&](const std::vector<int>& idx) {
            if ((++ticks & 0x3ff) == 0 && limits.expired())
                throw BudgetError("is_t_tough: deadline expired");
            std::uint64_t mask = maskOf(idx);
            int omega = omegaMask(adj, full, mask);
            if (omega >= 2 && t * omega > Rational(k, 1)) {
                result.tough = false;
                result.counterexample = VertexSet::fromMask(n, mask);
                return false;
            }
            return true;
        });
    }
    return result;
}

}  // namespace tg
