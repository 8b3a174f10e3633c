#include "toughgraph.h"

#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>

#include "family.hpp"
#include "forbidden.hpp"
#include "graph6.hpp"
#include "harness.hpp"
#include "matching.hpp"
#include "toughness.hpp"
#include "two_factor.hpp"

// Opaque handle definitions. tg_graph wraps the immutable core graph; the
// other handles own copies of the core result structs.
struct tg_graph {
    tg::Graph g;
};
struct tg_family {
    tg::FamilyWitness fw;
    tg_graph view;  // borrowed graph handle returned by tg_family_graph
};
struct tg_two_factor {
    tg::TwoFactor tf;
};
struct tg_odd_components {
    tg::OddComponentReport report;
};

namespace {

thread_local std::string g_lastError;

tg_status fail(tg_status code, const char* what) {
    g_lastError = what;
    return code;
}

template <typename F>
tg_status guard(F&& body) {
    try {
        body();
        return TG_OK;
    } catch (const tg::InvalidArgument& e) {
        return fail(TG_ERR_INVALID, e.what());
    } catch (const tg::ParseError& e) {
        return fail(TG_ERR_PARSE, e.what());
    } catch (const tg::BudgetError& e) {
        return fail(TG_ERR_BUDGET, e.what());
    } catch (const tg::SearchError& e) {
        return fail(TG_ERR_SEARCH, e.what());
    } catch (const std::exception& e) {
        return fail(TG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TG_ERR_INTERNAL, "unknown error");
    }
}

tg_status requireArgs(bool ok) {
    if (!ok) {
        g_lastError = "null required argument";
        return TG_ERR_INVALID;
    }
    return TG_OK;
}

tg::VertexSet setFromArray(const tg::Graph& g, const int* vs, int len, const char* what) {
    if (len < 0) throw tg::InvalidArgument(std::string(what) + ": negative length");
    if (len > 0 && !vs) throw tg::InvalidArgument(std::string(what) + ": null vertex array");
    tg::VertexSet s(g.vertexCount());
    for (int i = 0; i < len; ++i) {
        g.checkVertex(vs[i]);
        if (s.contains(vs[i]))
            throw tg::InvalidArgument(std::string(what) + ": repeated vertex " +
                                      std::to_string(vs[i]));
        s.add(vs[i]);
    }
    return s;
}

void writeSet(const tg::VertexSet& s, int* out, int* outLen) {
    int i = 0;
    for (int v = s.first(); v >= 0; v = s.next(v)) out[i++] = v;
    *outLen = i;
}

tg_rational toC(const tg::Rational& r) {
    tg_rational out;
    out.is_infinite = r.isInfinite() ? 1 : 0;
    out.num = out.is_infinite ? 0 : r.num();
    out.den = out.is_infinite ? 1 : r.den();
    return out;
}

char* dupString(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tg::SearchLimits limitsFor(int budget) {
    tg::SearchLimits limits;
    if (budget > 0) limits.maxVertices = budget;
    return limits;
}

tg_status pairSearch(const tg_graph* g, int budget, int* found, int* s, int* s_len, int* t,
                     int* t_len, long long* eta, int* h, bool special) {
    if (auto rc = requireArgs(g && found); rc != TG_OK) return rc;
    return guard([&] {
        auto pair = special ? tg::specialTuttePair(g->g, limitsFor(budget))
                            : tg::findTuttePairExhaustive(g->g, limitsFor(budget));
        *found = pair.has_value() ? 1 : 0;
        if (!pair) return;
        if (s && s_len) writeSet(pair->S, s, s_len);
        if (t && t_len) writeSet(pair->T, t, t_len);
        if (eta) *eta = pair->eta;
        if (h) *h = pair->h;
    });
}

tg_status runVerify(tg_verify_summary* out, const char* reportPath,
                    const std::function<tg::VerifySummary(std::ostream*)>& run) {
    return guard([&] {
        std::ofstream file;
        std::ostream* report = nullptr;
        if (reportPath) {
            if (std::strcmp(reportPath, "-") == 0) {
                report = &std::cout;
            } else {
                file.open(reportPath);
                if (!file) throw tg::Error(std::string("cannot open report file ") + reportPath);
                report = &file;
            }
        }
        tg::VerifySummary s = run(report);
        if (out) {
            out->examined = s.examined;
            out->applicable = s.applicable;
            out->violations = s.violations;
            out->skipped = s.skipped;
            out->elapsed_ms = s.elapsedMs;
        }
    });
}

}  // namespace

extern "C" {

const char* tg_last_error(void) { return g_lastError.c_str(); }

void tg_string_free(char* s) { delete[] s; }

tg_status tg_graph_from_edge_list(int n, const int* endpoints, int edge_count, tg_graph** out) {
    if (auto rc = requireArgs(out && (edge_count == 0 || endpoints)); rc != TG_OK) return rc;
    return guard([&] {
        if (edge_count < 0) throw tg::InvalidArgument("negative edge count");
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edge_count);
        for (int k = 0; k < edge_count; ++k)
            edges.emplace_back(endpoints[2 * k], endpoints[2 * k + 1]);
        *out = new tg_graph{tg::Graph::fromEdgeList(n, edges)};
    });
}

tg_status tg_graph_from_graph6(const char* line, tg_graph** out) {
    if (auto rc = requireArgs(line && out); rc != TG_OK) return rc;
    return guard([&] { *out = new tg_graph{tg::parseGraph6(line)}; });
}

tg_status tg_graph_from_text(const char* text, tg_graph** out) {
    if (auto rc = requireArgs(text && out); rc != TG_OK) return rc;
    return guard([&] { *out = new tg_graph{tg::parseGraphText(text)}; });
}

tg_status tg_graph_to_graph6(const tg_graph* g, char** out) {
    if (auto rc = requireArgs(g && out); rc != TG_OK) return rc;
    return guard([&] { *out = dupString(tg::toGraph6(g->g)); });
}

tg_status tg_graph_to_edge_list_text(const tg_graph* g, char** out) {
    if (auto rc = requireArgs(g && out); rc != TG_OK) return rc;
    return guard([&] { *out = dupString(tg::toEdgeListText(g->g)); });
}

void tg_graph_free(tg_graph* g) { delete g; }

int tg_graph_vertex_count(const tg_graph* g) { return g ? g->g.vertexCount() : -1; }
int tg_graph_edge_count(const tg_graph* g) { return g ? g->g.edgeCount() : -1; }
int tg_graph_has_edge(const tg_graph* g, int u, int v) {
    if (!g || u < 0 || v < 0 || u >= g->g.vertexCount() || v >= g->g.vertexCount()) return 0;
    return g->g.hasEdge(u, v) ? 1 : 0;
}

tg_status tg_toughness_exact(const tg_graph* g, int budget, tg_rational* value, int* witness,
                             int* witness_len) {
    if (auto rc = requireArgs(g && value); rc != TG_OK) return rc;
    return guard([&] {
        tg::ToughnessResult r = tg::toughnessExact(g->g, limitsFor(budget));
        *value = toC(r.value);
        if (witness && witness_len) {
            if (r.witness)
                writeSet(*r.witness, witness, witness_len);
            else
                *witness_len = -1;  // complete graph: no witness
        }
    });
}

tg_status tg_cut_ratio(const tg_graph* g, const int* u, int u_len, int* defined,
                       tg_rational* value) {
    if (auto rc = requireArgs(g && defined && value); rc != TG_OK) return rc;
    return guard([&] {
        auto r = tg::cutRatio(g->g, setFromArray(g->g, u, u_len, "U"));
        *defined = r.has_value() ? 1 : 0;
        if (r) *value = toC(*r);
    });
}

tg_status tg_is_t_tough(const tg_graph* g, long long t_num, long long t_den, int budget,
                        int* tough, int* counterexample, int* counterexample_len) {
    if (auto rc = requireArgs(g && tough); rc != TG_OK) return rc;
    return guard([&] {
        tg::ToughCheck check = tg::isTTough(g->g, tg::Rational(t_num, t_den), limitsFor(budget));
        *tough = check.tough ? 1 : 0;
        if (counterexample && counterexample_len) {
            if (check.counterexample)
                writeSet(*check.counterexample, counterexample, counterexample_len);
            else
                *counterexample_len = 0;
        }
    });
}

tg_status tg_find_induced_path(const tg_graph* g, int k, int* found, int* path) {
    if (auto rc = requireArgs(g && found); rc != TG_OK) return rc;
    return guard([&] {
        auto p = tg::findInducedPath(g->g, k);
        *found = p.has_value() ? 1 : 0;
        if (p && path)
            for (int i = 0; i < k; ++i) path[i] = (*p)[i];
    });
}

tg_status tg_find_induced_path_union(const tg_graph* g, int a, int b, int* found, int* path_a,
                                     int* path_b) {
    if (auto rc = requireArgs(g && found); rc != TG_OK) return rc;
    return guard([&] {
        auto w = tg::findInducedPathUnion(g->g, a, b);
        *found = w.has_value() ? 1 : 0;
        if (w && path_a)
            for (int i = 0; i < a; ++i) path_a[i] = w->pathA[i];
        if (w && path_b)
            for (int i = 0; i < b; ++i) path_b[i] = w->pathB[i];
    });
}

tg_status tg_is_pa_pb_free(const tg_graph* g, int a, int b, int* free_of_pattern) {
    if (auto rc = requireArgs(g && free_of_pattern); rc != TG_OK) return rc;
    return guard([&] { *free_of_pattern = tg::isPaPbFree(g->g, a, b) ? 1 : 0; });
}

tg_status tg_is_split(const tg_graph* g, int* split, int* clique, int* clique_len,
                      int* independent, int* independent_len) {
    if (auto rc = requireArgs(g && split); rc != TG_OK) return rc;
    return guard([&] {
        auto part = tg::splitPartition(g->g);
        *split = part.has_value() ? 1 : 0;
        if (part && clique && clique_len) writeSet(part->clique, clique, clique_len);
        if (part && independent && independent_len)
            writeSet(part->independent, independent, independent_len);
    });
}

tg_status tg_eta(const tg_graph* g, const int* s, int s_len, const int* t, int t_len,
                 long long* eta, int* h) {
    if (auto rc = requireArgs(g && eta && h); rc != TG_OK) return rc;
    return guard([&] {
        tg::TuttePair pair = tg::etaOf(g->g, setFromArray(g->g, s, s_len, "S"),
                                       setFromArray(g->g, t, t_len, "T"));
        *eta = pair.eta;
        *h = pair.h;
    });
}

tg_status tg_odd_components_build(const tg_graph* g, const int* s, int s_len, const int* t,
                                  int t_len, tg_odd_components** out) {
    if (auto rc = requireArgs(g && out); rc != TG_OK) return rc;
    return guard([&] {
        *out = new tg_odd_components{tg::oddComponents(g->g, setFromArray(g->g, s, s_len, "S"),
                                                       setFromArray(g->g, t, t_len, "T"))};
    });
}

int tg_odd_components_count(const tg_odd_components* oc) {
    return oc ? static_cast<int>(oc->report.components.size()) : -1;
}

tg_status tg_odd_components_get(const tg_odd_components* oc, int index, int* vertices,
                                int* vertex_count, int* edges_to_t, int* odd, int* strong) {
    if (auto rc = requireArgs(oc != nullptr); rc != TG_OK) return rc;
    return guard([&] {
        if (index < 0 || index >= static_cast<int>(oc->report.components.size()))
            throw tg::InvalidArgument("component index out of range");
        const auto& c = oc->report.components[index];
        if (vertices && vertex_count) writeSet(c.vertices, vertices, vertex_count);
        if (edges_to_t) *edges_to_t = c.edgesToT;
        if (odd) *odd = c.odd ? 1 : 0;
        if (strong) *strong = c.strong ? 1 : 0;
    });
}

void tg_odd_components_free(tg_odd_components* oc) { delete oc; }

tg_status tg_find_tutte_pair(const tg_graph* g, int budget, int* found, int* s, int* s_len,
                             int* t, int* t_len, long long* eta, int* h) {
    return pairSearch(g, budget, found, s, s_len, t, t_len, eta, h, false);
}

tg_status tg_special_tutte_pair(const tg_graph* g, int budget, int* found, int* s, int* s_len,
                                int* t, int* t_len, long long* eta, int* h) {
    return pairSearch(g, budget, found, s, s_len, t, t_len, eta, h, true);
}

tg_status tg_check_lemma5(const tg_graph* g, const int* s, int s_len, const int* t, int t_len,
                          int budget, int results[6]) {
    if (auto rc = requireArgs(g && results); rc != TG_OK) return rc;
    return guard([&] {
        tg::TuttePair pair = tg::etaOf(g->g, setFromArray(g->g, s, s_len, "S"),
                                       setFromArray(g->g, t, t_len, "T"));
        tg::Lemma5Report rep = tg::checkLemma5(g->g, pair, limitsFor(budget));
        results[0] = rep.tIndependent ? 1 : 0;
        results[1] = rep.oddAdjacencyMatchesDegree ? 1 : 0;
        results[2] = rep.componentVerticesSingleTEdge ? 1 : 0;
        results[3] = rep.branchComponentsHaveThreeVertices ? 1 : 0;
        results[4] = rep.claimApplicable ? 1 : 0;
        results[5] = rep.claimHolds ? 1 : 0;
    });
}

tg_status tg_find_two_factor(const tg_graph* g, int* found, tg_two_factor** out) {
    if (auto rc = requireArgs(g && found); rc != TG_OK) return rc;
    return guard([&] {
        auto tf = tg::findTwoFactor(g->g);
        *found = tf.has_value() ? 1 : 0;
        if (out) *out = tf ? new tg_two_factor{std::move(*tf)} : nullptr;
    });
}

int tg_two_factor_cycle_count(const tg_two_factor* tf) {
    return tf ? static_cast<int>(tf->tf.cycles.size()) : -1;
}

tg_status tg_two_factor_cycle(const tg_two_factor* tf, int index, int* vertices, int* length) {
    if (auto rc = requireArgs(tf && vertices && length); rc != TG_OK) return rc;
    return guard([&] {
        if (index < 0 || index >= static_cast<int>(tf->tf.cycles.size()))
            throw tg::InvalidArgument("cycle index out of range");
        const auto& cycle = tf->tf.cycles[index];
        for (std::size_t i = 0; i < cycle.size(); ++i) vertices[i] = cycle[i];
        *length = static_cast<int>(cycle.size());
    });
}

void tg_two_factor_free(tg_two_factor* tf) { delete tf; }

tg_status tg_max_matching(const tg_graph* g, int* mate) {
    if (auto rc = requireArgs(g && mate); rc != TG_OK) return rc;
    return guard([&] {
        std::vector<int> m = tg::maxMatching(g->g);
        for (int v = 0; v < g->g.vertexCount(); ++v) mate[v] = m[v];
    });
}

tg_status tg_basic_u_path(const tg_graph* g, const int* s, int s_len, const int* t, int t_len,
                          const int* c, int c_len, const int* u, int u_len, int start, int* path,
                          int* path_len) {
    if (auto rc = requireArgs(g && path && path_len); rc != TG_OK) return rc;
    return guard([&] {
        tg::Path p = tg::basicUPath(g->g, setFromArray(g->g, s, s_len, "S"),
                                    setFromArray(g->g, t, t_len, "T"),
                                    setFromArray(g->g, c, c_len, "C"),
                                    setFromArray(g->g, u, u_len, "U"), start);
        for (std::size_t i = 0; i < p.size(); ++i) path[i] = p[i];
        *path_len = static_cast<int>(p.size());
    });
}

tg_status tg_family_build(int l, int m, tg_family** out) {
    if (auto rc = requireArgs(out != nullptr); rc != TG_OK) return rc;
    return guard([&] {
        auto* f = new tg_family{tg::buildFamily(l, m), {}};
        f->view.g = f->fw.graph;
        *out = f;
    });
}

void tg_family_free(tg_family* f) { delete f; }

const tg_graph* tg_family_graph(const tg_family* f) { return f ? &f->view : nullptr; }

tg_status tg_family_params(const tg_family* f, int* l, int* m) {
    if (auto rc = requireArgs(f && l && m); rc != TG_OK) return rc;
    *l = f->fw.l;
    *m = f->fw.m;
    return TG_OK;
}

tg_status tg_family_class(const tg_family* f, const char* name, int* vertices, int* length) {
    if (auto rc = requireArgs(f && name && vertices && length); rc != TG_OK) return rc;
    return guard([&] {
        const tg::VertexSet* s = nullptr;
        if (std::strcmp(name, "S") == 0) s = &f->fw.S;
        else if (std::strcmp(name, "A") == 0) s = &f->fw.A;
        else if (std::strcmp(name, "T") == 0) s = &f->fw.T;
        else if (std::strcmp(name, "B") == 0) s = &f->fw.B;
        else if (std::strcmp(name, "W") == 0) s = &f->fw.W;
        else if (std::strcmp(name, "tutte_S") == 0) s = &f->fw.tutteS;
        else if (std::strcmp(name, "tutte_T") == 0) s = &f->fw.tutteT;
        else throw tg::InvalidArgument(std::string("unknown family class \"") + name + "\"");
        writeSet(*s, vertices, length);
    });
}

int tg_family_block_count(const tg_family* f) {
    return f ? static_cast<int>(f->fw.blocks.size()) : -1;
}

tg_status tg_family_block(const tg_family* f, int index, int* vertices, int* length) {
    if (auto rc = requireArgs(f && vertices && length); rc != TG_OK) return rc;
    return guard([&] {
        if (index < 0 || index >= static_cast<int>(f->fw.blocks.size()))
            throw tg::InvalidArgument("block index out of range");
        writeSet(f->fw.blocks[index], vertices, length);
    });
}

tg_status tg_family_formula_toughness(const tg_family* f, tg_rational* out) {
    if (auto rc = requireArgs(f && out); rc != TG_OK) return rc;
    *out = toC(f->fw.formulaToughness);
    return TG_OK;
}

tg_status tg_family_witness_ratio(const tg_family* f, tg_rational* out) {
    if (auto rc = requireArgs(f && out); rc != TG_OK) return rc;
    return guard([&] { *out = toC(tg::familyWitnessRatio(f->fw)); });
}

tg_status tg_family_limit_check(int m, int l_from, int l_to, int* strictly_increasing,
                                int* all_below_two) {
    if (auto rc = requireArgs(strictly_increasing && all_below_two); rc != TG_OK) return rc;
    return guard([&] {
        tg::FamilyLimitReport rep = tg::familyLimitCheck(m, l_from, l_to);
        *strictly_increasing = rep.strictlyIncreasing ? 1 : 0;
        *all_below_two = rep.allBelowTwo ? 1 : 0;
    });
}

tg_status tg_verify_theorem(int n_min, int n_max, long long t_num, long long t_den, int path_a,
                            int path_b, const char* corpus_path, const char* report_path,
                            int workers, long long per_graph_budget_ms, tg_verify_summary* out) {
    return runVerify(out, report_path, [&](std::ostream* report) {
        tg::TheoremOptions opt;
        opt.nMin = n_min;
        opt.nMax = n_max;
        opt.t = tg::Rational(t_num, t_den);
        opt.pathA = path_a;
        opt.pathB = path_b;
        if (corpus_path) opt.corpusPath = corpus_path;
        opt.workers = workers;
        opt.perGraphBudgetMs = per_graph_budget_ms;
        return tg::verifyMainTheorem(opt, report);
    });
}

tg_status tg_verify_sharpness(int l, int m, int freeness_budget, const char* report_path,
                              tg_verify_summary* out) {
    return runVerify(out, report_path, [&](std::ostream* report) {
        tg::SharpnessOptions opt;
        opt.l = l;
        opt.m = m;
        if (freeness_budget > 0) opt.freenessBudget = freeness_budget;
        return tg::verifySharpness(opt, report);
    });
}

tg_status tg_verify_lemma5(int n_max, int workers, const char* report_path,
                           tg_verify_summary* out) {
    return runVerify(out, report_path, [&](std::ostream* report) {
        tg::Lemma5Options opt;
        opt.nMax = n_max;
        opt.workers = workers;
        return tg::verifyLemma5(opt, report);
    });
}

}  // extern "C"
