#include <doctest.h>

#include "family.hpp"
#include "oracles.hpp"
#include "toughness.hpp"
#include "two_factor.hpp"

using namespace tg;

TEST_CASE("family instance (1,2): sizes and named classes") {
    FamilyWitness fw = buildFamily(1, 2);
    CHECK(fw.graph.vertexCount() == 47);
    CHECK(fw.S.count() == 2);
    CHECK(fw.blocks.size() == 5);
    for (const auto& block : fw.blocks) CHECK(block.count() == 3);
    CHECK(fw.A.count() == 15);
    CHECK(fw.T.count() == 15);
    CHECK(fw.B.count() == 15);
    CHECK(fw.W.count() == 27);
    CHECK(fw.formulaToughness == Rational(27, 16));
}

TEST_CASE("family structural invariants") {
    for (auto [l, m] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
        FamilyWitness fw = buildFamily(l, m);
        const Graph& g = fw.graph;
        const int side = (2 * l + 1) * (2 * m + 1);
        CHECK(g.vertexCount() == m + 3 * side);

        // every t in T: one neighbor in A, one in B, all of S
        for (int t = fw.T.first(); t >= 0; t = fw.T.next(t)) {
            CHECK((g.neighbors(t) & fw.A).count() == 1);
            CHECK((g.neighbors(t) & fw.B).count() == 1);
            CHECK((g.neighbors(t) & fw.S).count() == m);
            CHECK(g.degree(t) == m + 2);
        }
        // S joined to every other vertex
        for (int s = fw.S.first(); s >= 0; s = fw.S.next(s))
            CHECK(g.degree(s) == g.vertexCount() - 1);
        // A-B edges only through T: no direct edge
        for (int a = fw.A.first(); a >= 0; a = fw.A.next(a))
            CHECK_FALSE(g.neighbors(a).intersects(fw.B));
        // blocks are cliques and pairwise non-adjacent outside S/T
        for (std::size_t i = 0; i < fw.blocks.size(); ++i) {
            auto [sub, map] = g.induced(fw.blocks[i]);
            CHECK(sub.isComplete());
            for (std::size_t j = i + 1; j < fw.blocks.size(); ++j)
                CHECK_FALSE(g.neighborhood(fw.blocks[i]).intersects(fw.blocks[j]));
        }
        auto [bsub, bmap] = g.induced(fw.B);
        CHECK(bsub.isComplete());
    }
}

TEST_CASE("family Tutte pair has eta = -2 with h = 2m+2 and T-degrees 2") {
    for (auto [l, m] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
        FamilyWitness fw = buildFamily(l, m);
        TuttePair pair = etaOf(fw.graph, fw.tutteS, fw.tutteT);
        CHECK(pair.eta == -2);
        CHECK(pair.h == 2 * m + 2);
        for (auto [x, d] : pair.degrees) CHECK(d == 2);

        OddComponentReport rep = oddComponents(fw.graph, fw.tutteS, fw.tutteT);
        // odd components are exactly the A blocks (each sending 2l+1 edges
        // into T) and B (sending (2l+1)(2m+1))
        int oddCount = 0;
        for (const auto& entry : rep.components) {
            CHECK(entry.odd);
            ++oddCount;
            bool isBlock = false;
            for (const auto& block : fw.blocks)
                if (entry.vertices == block) isBlock = true;
            CHECK((isBlock || entry.vertices == fw.B));
            CHECK(entry.edgesToT == (isBlock ? 2 * l + 1 : (2 * l + 1) * (2 * m + 1)));
            CHECK(entry.strong);
        }
        CHECK(oddCount == 2 * m + 2);
    }
}

TEST_CASE("witness ratios match the closed form") {
    CHECK(familyWitnessRatio(buildFamily(1, 2)) == Rational(27, 16));
    CHECK(familyWitnessRatio(buildFamily(1, 3)) == Rational(19, 11));
    CHECK(familyWitnessRatio(buildFamily(2, 2)) == Rational(47, 26));
    CHECK(buildFamily(2, 3).formulaToughness == Rational(11, 6));
    CHECK(buildFamily(2, 3).graph.vertexCount() == 108);
    CHECK(familyWitnessRatio(buildFamily(2, 3)) == Rational(11, 6));
}

TEST_CASE("no 2-factor for built instances") {
    for (auto [l, m] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
        FamilyWitness fw = buildFamily(l, m);
        CHECK_FALSE(findTwoFactor(fw.graph).has_value());
    }
}

TEST_CASE("limit check: ratios strictly increase in l and stay below 2") {
    FamilyLimitReport r5 = familyLimitCheck(2, 1, 5);
    CHECK(r5.strictlyIncreasing);
    CHECK(r5.allBelowTwo);
    CHECK(r5.ratios.size() == 5);
    CHECK(r5.ratios[0].second == Rational(27, 16));
    CHECK(r5.ratios[1].second == Rational(47, 26));

    FamilyLimitReport r3 = familyLimitCheck(3, 1, 3);
    CHECK(r3.strictlyIncreasing);
    CHECK(r3.allBelowTwo);

    FamilyLimitReport single = familyLimitCheck(2, 1, 1);
    CHECK(single.strictlyIncreasing);
    CHECK(single.ratios.size() == 1);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(buildFamily(0, 2), InvalidArgument);
    CHECK_THROWS_AS(buildFamily(1, 1), InvalidArgument);
    CHECK_THROWS_AS(familyLimitCheck(2, 0, 3), InvalidArgument);
}
