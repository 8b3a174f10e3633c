#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace tg {

// Subset of the vertices 0..universe-1 of one graph, stored as a bit vector.
// Set operations work word-parallel; iteration order is ascending vertex id.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet fromMask(int universe, std::uint64_t mask) {
        VertexSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        return s;
    }

    template <typename It>
    static VertexSet of(int universe, It first, It last) {
        VertexSet s(universe);
        for (; first != last; ++first) s.add(*first);
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<int> vs) {
        return of(universe, vs.begin(), vs.end());
    }

    int universe() const { return universe_; }
    int wordCount() const { return static_cast<int>(words_.size()); }
    std::uint64_t word(int i) const { return words_[i]; }

    bool contains(int v) const {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void add(int v) {
        if (v < 0 || v >= universe_)
            throw InvalidArgument("vertex " + std::to_string(v) + " outside universe of size " +
                                  std::to_string(universe_));
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void remove(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // First member >= from, or -1.
    int nextFrom(int from) const {
        if (from >= universe_) return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi == static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }
    int first() const { return nextFrom(0); }
    int next(int v) const { return nextFrom(v + 1); }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool isSubsetOf(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a.subtract(b); }

    VertexSet complement() const {
        VertexSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    // Ascending-element lexicographic order: {0,3} < {1,2}, {1} < {1,5}.
    static int lexCompare(const VertexSet& a, const VertexSet& b) {
        int x = a.first(), y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) return x < y ? -1 : 1;
            x = a.next(x);
            y = b.next(y);
        }
        if (x == y) return 0;
        return x < 0 ? -1 : 1;
    }

    std::vector<int> toVector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(universe_);
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    void trim() {
        int spare = static_cast<int>(words_.size()) * 64 - universe_;
        if (spare > 0 && !words_.empty()) words_.back() &= ~std::uint64_t{0} >> spare;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tg
