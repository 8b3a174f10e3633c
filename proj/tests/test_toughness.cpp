#include <doctest.h>

#include <random>

#include "harness.hpp"
#include "oracles.hpp"
#include "toughness.hpp"

using namespace tg;

TEST_CASE("toughness unit values, cross-checked against the naive brute force") {
    struct Case {
        Graph g;
        Rational expected;
    };
    std::vector<Case> cases;
    cases.push_back({oracle::complete(5), Rational::infinity()});
    cases.push_back({oracle::cycle(6), Rational(1, 1)});
    cases.push_back({oracle::star(3), Rational(1, 3)});
    cases.push_back({oracle::path(4), Rational(1, 2)});

    for (const auto& c : cases) {
        ToughnessResult r = toughnessExact(c.g);
        CHECK(r.value == c.expected);
        CHECK(r.value == oracle::toughness(c.g));
        if (c.expected.isInfinite()) {
            CHECK_FALSE(r.witness.has_value());
        } else {
            REQUIRE(r.witness.has_value());
            auto ratio = cutRatio(c.g, *r.witness);
            REQUIRE(ratio.has_value());
            CHECK(*ratio == r.value);
        }
    }
}

TEST_CASE("witness tie-break: smallest cut, then lexicographically smallest") {
    // C6: {0,2} is the first size-2 cut with two components.
    ToughnessResult r = toughnessExact(oracle::cycle(6));
    CHECK(*r.witness == VertexSet::of(6, {0, 2}));
    // P4: the single cut vertex 1.
    ToughnessResult p = toughnessExact(oracle::path(4));
    CHECK(*p.witness == VertexSet::of(4, {1}));
}

TEST_CASE("cut_ratio examples") {
    CHECK(*cutRatio(oracle::path(3), VertexSet::of(3, {1})) == Rational(1, 2));
    CHECK_FALSE(cutRatio(oracle::complete(4), VertexSet::of(4, {0})).has_value());
}

TEST_CASE("disconnected graphs have toughness 0 with the empty witness") {
    Graph g(5);
    g.addEdgeUnchecked(0, 1);
    g.addEdgeUnchecked(2, 3);
    ToughnessResult r = toughnessExact(g);
    CHECK(r.value == Rational(0, 1));
    CHECK(r.witness->empty());
}

TEST_CASE("is_t_tough examples") {
    CHECK(isTTough(oracle::cycle(6), Rational(1, 1)).tough);
    auto bad = isTTough(oracle::cycle(6), Rational(3, 2));
    CHECK_FALSE(bad.tough);
    REQUIRE(bad.counterexample.has_value());
    // the violating cut really violates
    auto ratio = cutRatio(oracle::cycle(6), *bad.counterexample);
    REQUIRE(ratio.has_value());
    CHECK(*ratio < Rational(3, 2));
    CHECK(isTTough(oracle::complete(4), Rational(10, 1)).tough);
}

TEST_CASE("budget violations raise BudgetError naming the bound") {
    Graph big(25);
    for (int i = 1; i < 25; ++i) big.addEdgeUnchecked(i - 1, i);
    CHECK_THROWS_AS(toughnessExact(big), BudgetError);
    CHECK_THROWS_AS(isTTough(big, Rational(1, 2)), BudgetError);
    SearchLimits wider;
    wider.maxVertices = 25;
    CHECK(toughnessExact(big, wider).value == Rational(1, 2));
}

TEST_CASE("exact value agrees with brute force exhaustively up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        LabeledGraphEnumerator en(n);
        Graph g;
        while (en.next(g)) {
            ToughnessResult r = toughnessExact(g);
            CHECK(r.value == oracle::toughness(g));
            if (r.witness) {
                auto ratio = cutRatio(g, *r.witness);
                REQUIRE(ratio.has_value());
                CHECK(*ratio == r.value);
            }
        }
    }
}

TEST_CASE("agreement property: tough at the exact value, not above it") {
    std::mt19937 rng(100);
    for (int iter = 0; iter < 400; ++iter) {
        int n = 2 + static_cast<int>(rng() % 11);  // up to 12
        Graph h = oracle::randomGraph(n, 0.2 + 0.6 * (rng() % 100) / 100.0, rng);
        ToughnessResult r = toughnessExact(h);
        if (r.value.isInfinite()) {
            CHECK(isTTough(h, Rational(1000000, 1)).tough);
            continue;
        }
        CHECK(isTTough(h, r.value).tough);
        CHECK_FALSE(isTTough(h, r.value + Rational(1, 1000000)).tough);
    }
}

TEST_CASE("monotonicity: t2-tough implies t1-tough for t1 <= t2") {
    std::mt19937 rng(200);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = oracle::randomGraph(n, 0.5, rng);
        long long p1 = rng() % 4, q1 = 1 + rng() % 3;
        long long p2 = p1 + rng() % 3;
        Rational t1(p1, q1), t2(p2, q1);
        if (isTTough(g, t2).tough) CHECK(isTTough(g, t1).tough);
    }
}

TEST_CASE("a 3/2-tough non-complete graph has minimum degree at least 3") {
    for (int n = 1; n <= 6; ++n) {
        LabeledGraphEnumerator en(n);
        Graph g;
        while (en.next(g)) {
            if (g.isComplete()) continue;
            if (isTTough(g, Rational(3, 2)).tough) CHECK(g.minDegree() >= 3);
        }
    }
}
