#include "matching.hpp"

namespace tg {

namespace {

// Edmonds' algorithm with blossom contraction tracked through base[].
// One findAugmentingPath call grows the matching by one edge or proves the
// current root cannot be matched; unmatched roots are scanned once each.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g),
          n_(g.vertexCount()),
          mate_(n_, -1),
          parent_(n_),
          base_(n_),
          queue_(),
          inQueue_(n_),
          inBlossom_(n_),
          lcaMark_(n_) {
        greedyInit();
        for (int v = 0; v < n_; ++v)
            if (mate_[v] < 0) augmentFrom(v);
    }

    std::vector<int> take() { return std::move(mate_); }

private:
    void greedyInit() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] >= 0) continue;
            const VertexSet& nb = g_.neighbors(v);
            for (int u = nb.first(); u >= 0; u = nb.next(u)) {
                if (mate_[u] < 0) {
                    mate_[v] = u;
                    mate_[u] = v;
                    break;
                }
            }
        }
    }

    int lowestCommonBase(int a, int b) {
        std::fill(lcaMark_.begin(), lcaMark_.end(), false);
        int v = a;
        while (true) {
            v = base_[v];
            lcaMark_[v] = true;
            if (mate_[v] < 0) break;
            v = parent_[mate_[v]];
        }
        v = b;
        while (true) {
            v = base_[v];
            if (lcaMark_[v]) return v;
            v = parent_[mate_[v]];
        }
    }

    void markPath(int v, int b, int child) {
        while (base_[v] != b) {
            inBlossom_[base_[v]] = true;
            inBlossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void contract(int v, int u) {
        int b = lowestCommonBase(v, u);
        std::fill(inBlossom_.begin(), inBlossom_.end(), false);
        markPath(v, b, u);
        markPath(u, b, v);
        for (int i = 0; i < n_; ++i) {
            if (!inBlossom_[base_[i]]) continue;
            base_[i] = b;
            if (!inQueue_[i]) {
                inQueue_[i] = true;
                queue_.push_back(i);
            }
        }
    }

    void augmentFrom(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(inQueue_.begin(), inQueue_.end(), false);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        queue_.clear();
        queue_.push_back(root);
        inQueue_[root] = true;

        for (std::size_t head = 0; head < queue_.size(); ++head) {
            int v = queue_[head];
            const VertexSet& nb = g_.neighbors(v);
            for (int u = nb.first(); u >= 0; u = nb.next(u)) {
                if (base_[v] == base_[u] || mate_[v] == u) continue;
                if (u == root || (mate_[u] >= 0 && parent_[mate_[u]] >= 0)) {
                    // Even-level vertex reached again: odd cycle, contract it.
                    contract(v, u);
                } else if (parent_[u] < 0) {
                    parent_[u] = v;
                    if (mate_[u] < 0) {
                        flipPath(u);
                        return;
                    }
                    if (!inQueue_[mate_[u]]) {
                        inQueue_[mate_[u]] = true;
                        queue_.push_back(mate_[u]);
                    }
                }
            }
        }
    }

    void flipPath(int u) {
        while (u >= 0) {
            int pv = parent_[u];
            int next = mate_[pv];
            mate_[u] = pv;
            mate_[pv] = u;
            u = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<int> queue_;
    std::vector<char> inQueue_, inBlossom_, lcaMark_;
};

}  // namespace

std::vector<int> maxMatching(const Graph& g) {
    return Blossom(g).take();
}

std::vector<std::pair<int, int>> matchingEdges(const std::vector<int>& mate) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v) out.emplace_back(v, mate[v]);
    return out;
}

}  // namespace tg
