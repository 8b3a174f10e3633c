#include <doctest.h>

#include <random>

#include "forbidden.hpp"
#include "harness.hpp"
#include "oracles.hpp"

using namespace tg;

TEST_CASE("find_induced_path examples") {
    CHECK_FALSE(findInducedPath(oracle::complete(5), 4).has_value());
    CHECK_FALSE(findInducedPath(oracle::complete(5), 3).has_value());
    CHECK(findInducedPath(oracle::complete(5), 2).has_value());

    auto p = findInducedPath(oracle::cycle(7), 5);
    REQUIRE(p.has_value());
    CHECK(p->size() == 5);
    CHECK(oracle::cycle(7).isInducedPath(*p));

    auto whole = findInducedPath(oracle::path(10), 10);
    REQUIRE(whole.has_value());
    CHECK(oracle::path(10).isInducedPath(*whole));

    CHECK_THROWS_AS(findInducedPath(oracle::path(3), 0), InvalidArgument);
}

TEST_CASE("find_induced_path_union examples") {
    auto w = findInducedPathUnion(oracle::path(15), 4, 10);
    REQUIRE(w.has_value());
    CHECK(validatePathUnionWitness(oracle::path(15), *w, 4, 10));

    CHECK_FALSE(findInducedPathUnion(oracle::path(14), 4, 10).has_value());
    CHECK(isPaPbFree(oracle::path(14), 4, 10));
}

TEST_CASE("cycles around the 14-vertex pattern boundary") {
    // Two arcs of 4 and 10 vertices need two gap vertices: C16 contains the
    // pattern, C15 cannot keep the arcs non-adjacent.
    CHECK_FALSE(isPaPbFree(oracle::cycle(16), 4, 10));
    CHECK(isPaPbFree(oracle::cycle(15), 4, 10));
    auto w = findInducedPathUnion(oracle::cycle(16), 4, 10);
    REQUIRE(w.has_value());
    CHECK(validatePathUnionWitness(oracle::cycle(16), *w, 4, 10));
}

TEST_CASE("graphs with fewer than 14 vertices are vacuously (P4 u P10)-free") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = oracle::randomGraph(13, 0.3, rng);
        CHECK(isPaPbFree(g, 4, 10));
    }
}

TEST_CASE("freeness agrees with subset-isomorphism brute force for P2 u P3") {
    for (int n = 1; n <= 6; ++n) {
        LabeledGraphEnumerator en(n);
        Graph g;
        while (en.next(g)) CHECK(isPaPbFree(g, 2, 3) == oracle::isPaPbFree(g, 2, 3));
    }
    std::mt19937 rng(43);
    for (int iter = 0; iter < 3000; ++iter) {
        Graph g = oracle::randomGraph(7, 0.15 + 0.7 * (rng() % 100) / 100.0, rng);
        CHECK(isPaPbFree(g, 2, 3) == oracle::isPaPbFree(g, 2, 3));
    }
}

TEST_CASE("witnesses re-validate and argument order is respected") {
    std::mt19937 rng(44);
    for (int iter = 0; iter < 500; ++iter) {
        int n = 6 + static_cast<int>(rng() % 8);
        Graph g = oracle::randomGraph(n, 0.25, rng);
        auto w = findInducedPathUnion(g, 3, 2);  // a > b on purpose
        if (w) {
            CHECK(w->pathA.size() == 3);
            CHECK(w->pathB.size() == 2);
            CHECK(validatePathUnionWitness(g, *w, 3, 2));
        } else {
            CHECK(oracle::isPaPbFree(g, 2, 3));
        }
    }
}

TEST_CASE("freeness monotonicity: (P4 u P10)-free implies (P4 u P11)-free") {
    std::mt19937 rng(45);
    for (int iter = 0; iter < 40; ++iter) {
        Graph g = oracle::randomGraph(16, 0.12, rng);
        if (isPaPbFree(g, 4, 10)) CHECK(isPaPbFree(g, 4, 11));
    }
    CHECK_FALSE(isPaPbFree(oracle::path(20), 4, 10));
    CHECK_FALSE(isPaPbFree(oracle::path(20), 4, 11));
}

TEST_CASE("split recognition examples") {
    auto kn = splitPartition(oracle::complete(6));
    REQUIRE(kn.has_value());
    auto star = splitPartition(oracle::star(3));
    REQUIRE(star.has_value());
    CHECK_FALSE(splitPartition(oracle::cycle(4)).has_value());
    CHECK_FALSE(splitPartition(oracle::cycle(5)).has_value());
}

TEST_CASE("split recognition agrees with the 2^n brute force; witnesses are valid") {
    for (int n = 0; n <= 6; ++n) {
        LabeledGraphEnumerator en(n);
        Graph g;
        while (en.next(g)) {
            auto part = splitPartition(g);
            CHECK(part.has_value() == oracle::isSplit(g));
            if (part) {
                // clique pairwise adjacent, independent pairwise non-adjacent,
                // partition of V
                CHECK((part->clique | part->independent).count() == n);
                CHECK_FALSE(part->clique.intersects(part->independent));
                for (int v = part->clique.first(); v >= 0; v = part->clique.next(v))
                    for (int u = part->clique.next(v); u >= 0; u = part->clique.next(u))
                        CHECK(g.hasEdge(u, v));
                for (int v = part->independent.first(); v >= 0; v = part->independent.next(v))
                    CHECK_FALSE(g.neighbors(v).intersects(part->independent));
            }
        }
    }
}
