// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 4 sweeps all labeled graphs up to n = 7 and dominates
// the runtime; pass --fast to restrict it to n <= 6 during development.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "family.hpp"
#include "forbidden.hpp"
#include "graph6.hpp"
#include "harness.hpp"
#include "oracles.hpp"
#include "toughness.hpp"
#include "two_factor.hpp"

using namespace tg;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << criterion << " (" << what << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void criterion1_sharpness() {
    Timer timer;
    bool pass = true;
    std::string detail;

    FamilyWitness fw = buildFamily(1, 2);
    TuttePair pair = etaOf(fw.graph, fw.tutteS, fw.tutteT);
    pass &= pair.eta == -2;
    pass &= pair.h == 6;
    Rational ratio = familyWitnessRatio(fw);
    pass &= ratio == Rational(27, 16);
    pass &= ratio == Rational(2, 1) - Rational(5, 16);
    pass &= !findTwoFactor(fw.graph).has_value();

    SharpnessOptions opt;
    opt.l = 1;
    opt.m = 2;
    std::ostringstream sink;
    VerifySummary s = verifySharpness(opt, &sink);
    pass &= s.violations == 0;

    detail = "eta=" + std::to_string(pair.eta) + " h=" + std::to_string(pair.h) +
             " ratio=" + ratio.str() + " " + std::to_string(timer.ms()) + "ms";
    report(1, "sharpness numbers for G(1,2)", pass, detail);
}

void criterion2_formulaSweep() {
    Timer timer;
    bool pass = true;
    for (auto [l, m] : {std::pair{1, 2}, {1, 3}, {2, 2}, {3, 2}}) {
        FamilyWitness fw = buildFamily(l, m);
        Rational expected =
            Rational(2, 1) - Rational(m + 3, (2 * l + 1) * (2 * m + 1) + 1);
        if (!(familyWitnessRatio(fw) == expected)) pass = false;
        if (!(fw.formulaToughness == expected)) pass = false;
    }
    // strictly increasing in l at fixed m = 2
    Rational r1 = familyWitnessRatio(buildFamily(1, 2));
    Rational r2 = familyWitnessRatio(buildFamily(2, 2));
    Rational r3 = familyWitnessRatio(buildFamily(3, 2));
    pass &= r1 < r2 && r2 < r3;
    report(2, "family formula sweep", pass,
           r1.str() + " < " + r2.str() + " < " + r3.str() + " " + std::to_string(timer.ms()) +
               "ms");
}

void criterion3_freeness() {
    Timer timer;
    FamilyWitness fw = buildFamily(1, 2);
    bool twoP5Free = isPaPbFree(fw.graph, 5, 5);
    bool p4p10Free = isPaPbFree(fw.graph, 4, 10);
    bool pass = twoP5Free && !p4p10Free;
    report(3, "G(1,2) is 2P5-free but not (P4 u P10)-free", pass,
           std::to_string(timer.ms()) + "ms");
}

void criterion4_mainTheorem(bool fast) {
    Timer timer;
    TheoremOptions opt;
    opt.nMin = 3;
    opt.nMax = fast ? 6 : 7;
    VerifySummary s = verifyMainTheorem(opt, nullptr);
    std::uint64_t expected = 0;
    for (int n = opt.nMin; n <= opt.nMax; ++n) expected += LabeledGraphEnumerator::countFor(n);
    bool pass = s.violations == 0 && s.skipped == 0 && s.examined == expected;
    report(4,
           std::string("3/2-tough implies 2-factor over all labeled graphs, n = 3..") +
               std::to_string(opt.nMax),
           pass,
           "examined=" + std::to_string(s.examined) + " tough&free=" +
               std::to_string(s.applicable) + " violations=" + std::to_string(s.violations) +
               " " + std::to_string(timer.ms()) + "ms");
}

void criterion5_oracleEquivalence() {
    Timer timer;
    std::uint64_t disagreements = 0, checked = 0;
    for (int n = 1; n <= 6; ++n) {
        LabeledGraphEnumerator en(n);
        Graph g;
        while (en.next(g)) {
            ++checked;
            if (findTwoFactor(g).has_value() != !findTuttePairExhaustive(g).has_value())
                ++disagreements;
        }
    }
    std::mt19937 rng(20250808);
    for (int iter = 0; iter < 1000; ++iter) {
        int n = 7 + static_cast<int>(rng() % 6);
        Graph g = oracle::randomGraph(n, 0.15 + 0.7 * (rng() % 100) / 100.0, rng);
        ++checked;
        if (findTwoFactor(g).has_value() != !findTuttePairExhaustive(g).has_value())
            ++disagreements;
    }
    report(5, "gadget+blossom agrees with the exhaustive eta criterion",
           disagreements == 0,
           "checked=" + std::to_string(checked) + " disagreements=" +
               std::to_string(disagreements) + " " + std::to_string(timer.ms()) + "ms");
}

void criterion6_parity() {
    Timer timer;
    std::mt19937 rng(31415);
    std::uint64_t oddCount = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = oracle::randomGraph(n, 0.1 + 0.8 * (rng() % 100) / 100.0, rng);
        std::uint64_t full = (std::uint64_t{1} << n) - 1;
        std::uint64_t s = rng() & full;
        std::uint64_t t = rng() & full & ~s;
        TuttePair pair = etaOf(g, VertexSet::fromMask(n, s), VertexSet::fromMask(n, t));
        if (pair.eta % 2 != 0) ++oddCount;
    }
    report(6, "eta parity on 10,000 random triples", oddCount == 0,
           "odd=" + std::to_string(oddCount) + " " + std::to_string(timer.ms()) + "ms");
}

void criterion7_lemma5() {
    Timer timer;
    Lemma5Options opt;
    opt.nMax = 6;
    VerifySummary s = verifyLemma5(opt, nullptr);
    report(7, "lemma 5 suite over 2-factor-free graphs, n <= 6", s.violations == 0,
           "two_factor_free=" + std::to_string(s.applicable) + " violations=" +
               std::to_string(s.violations) + " " + std::to_string(timer.ms()) + "ms");
}

void criterion8_toughnessUnits() {
    Timer timer;
    bool pass = true;

    ToughnessResult k5 = toughnessExact(oracle::complete(5));
    pass &= k5.value.isInfinite() && oracle::toughness(oracle::complete(5)).isInfinite();

    ToughnessResult c6 = toughnessExact(oracle::cycle(6));
    pass &= c6.value == Rational(1, 1) && oracle::toughness(oracle::cycle(6)) == Rational(1, 1);

    ToughnessResult claw = toughnessExact(oracle::star(3));
    pass &= claw.value == Rational(1, 3) && oracle::toughness(oracle::star(3)) == Rational(1, 3);

    ToughnessResult p4 = toughnessExact(oracle::path(4));
    pass &= p4.value == Rational(1, 2) && oracle::toughness(oracle::path(4)) == Rational(1, 2);

    report(8, "toughness unit values vs naive brute force", pass,
           std::to_string(timer.ms()) + "ms");
}

void criterion9_graph6RoundTrip() {
    Timer timer;
    std::uint64_t mismatches = 0, checked = 0;
    for (int n = 0; n <= 6; ++n) {
        LabeledGraphEnumerator en(n);
        Graph g;
        while (en.next(g)) {
            ++checked;
            if (!(parseGraph6(toGraph6(g)) == g)) ++mismatches;
        }
    }
    report(9, "graph6 round trip on the exhaustive n <= 6 corpus", mismatches == 0,
           "checked=" + std::to_string(checked) + " mismatches=" + std::to_string(mismatches) +
               " " + std::to_string(timer.ms()) + "ms");
}

}  // namespace

int main(int argc, char** argv) {
    bool fast = false;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0) fast = true;
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }

    auto want = [&](int c) { return only == 0 || only == c; };
    if (want(1)) criterion1_sharpness();
    if (want(2)) criterion2_formulaSweep();
    if (want(3)) criterion3_freeness();
    if (want(4)) criterion4_mainTheorem(fast);
    if (want(5)) criterion5_oracleEquivalence();
    if (want(6)) criterion6_parity();
    if (want(7)) criterion7_lemma5();
    if (want(8)) criterion8_toughnessUnits();
    if (want(9)) criterion9_graph6RoundTrip();

    if (g_failures == 0)
        std::cout << "all acceptance criteria passed" << std::endl;
    else
        std::cout << g_failures << " acceptance criteria FAILED" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
