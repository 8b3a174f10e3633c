#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "graph.hpp"
#include "rational.hpp"

namespace tg {

// Every labeled simple graph on n vertices, exactly once: bit i of the index
// toggles the i-th vertex pair in lexicographic order (0,1),(0,2),...,(1,2),...
class LabeledGraphEnumerator {
public:
    explicit LabeledGraphEnumerator(int n);  // BudgetError when n > 7
    std::uint64_t total() const { return total_; }
    bool next(Graph& out);

    static std::uint64_t countFor(int n);
    static Graph graphFromIndex(int n, std::uint64_t index);

private:
    int n_;
    std::uint64_t total_;
    std::uint64_t current_ = 0;
};

struct VerifySummary {
    std::uint64_t examined = 0;    // graphs seen
    std::uint64_t applicable = 0;  // graphs (or checks) the assertion applied to
    std::uint64_t violations = 0;
    std::uint64_t skipped = 0;     // per-graph budget overruns
    std::int64_t elapsedMs = 0;
};

struct TheoremOptions {
    int nMin = 3;
    int nMax = 7;
    Rational t{3, 2};
    int pathA = 4;
    int pathB = 10;
    std::string corpusPath;  // when set, graph6 lines replace the enumeration
    int workers = 0;         // 0: TOUGHGRAPH_WORKERS env, then hardware
    long long perGraphBudgetMs = 0;  // 0: unlimited
};

// For every streamed graph with n >= 3 that is t-tough and (P_a u P_b)-free,
// asserts that the gadget+matching solver finds a 2-factor. One JSONL record
// per applicable graph, summary object last; records are emitted in corpus
// order regardless of worker completion order.
VerifySummary verifyMainTheorem(const TheoremOptions& opt, std::ostream* report);

struct SharpnessOptions {
    int l = 1;
    int m = 2;
    int freenessBudget = 120;  // skip the 2P5 scan above this vertex count
};

// Asserts, for one family instance: no 2-factor, eta(S,T) = -2 with
// h = 2m+2 and d_{G-S}(x) = 2 on T, witness ratio equal to the closed form
// and at least 3/2, and 2P5-freeness when within budget.
VerifySummary verifySharpness(const SharpnessOptions& opt, std::ostream* report);

struct Lemma5Options {
    int nMax = 6;
    int workers = 0;
};

// For every labeled graph up to nMax without a 2-factor: the special Tutte
// pair exists and satisfies the four special-pair properties; qualifying
// graphs additionally satisfy the nonempty-S / |T| >= 2 claim. Only
// violations produce records.
VerifySummary verifyLemma5(const Lemma5Options& opt, std::ostream* report);

int resolveWorkerCount(int requested);

}  // namespace tg
