// Command-line front end over the toughgraph C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toughgraph.h"

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void die(const std::string& context) {
    std::cerr << "error: " << context << ": " << tg_last_error() << "\n";
    std::exit(2);
}

struct GraphHandle {
    tg_graph* g = nullptr;
    ~GraphHandle() { tg_graph_free(g); }
};

// Reads one graph from a file ("-" = stdin); accepts a graph6 line or
// "n m" edge-list text. Multi-line graph6 files contribute their first graph.
void loadGraph(const std::string& path, GraphHandle& out) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << "\n";
            std::exit(2);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    if (tg_graph_from_text(text.c_str(), &out.g) != TG_OK) die("parsing " + path);
}

bool parseFraction(const std::string& text, long long& num, long long& den) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            num = std::stoll(text);
            den = 1;
        } else {
            num = std::stoll(text.substr(0, slash));
            den = std::stoll(text.substr(slash + 1));
        }
    } catch (...) {
        return false;
    }
    return den != 0;
}

bool parsePattern(const std::string& text, int& a, int& b) {
    // "P4+P10"
    if (text.size() < 4 || (text[0] != 'P' && text[0] != 'p')) return false;
    auto plus = text.find('+');
    if (plus == std::string::npos || plus + 1 >= text.size()) return false;
    std::string left = text.substr(1, plus - 1);
    std::string right = text.substr(plus + 1);
    if (right.empty() || (right[0] != 'P' && right[0] != 'p')) return false;
    right.erase(0, 1);
    try {
        a = std::stoi(left);
        b = std::stoi(right);
    } catch (...) {
        return false;
    }
    return a >= 1 && b >= 1;
}

std::string rationalStr(const tg_rational& r) {
    if (r.is_infinite) return "infinity";
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string setStr(const int* vs, int len) {
    std::string out = "{";
    for (int i = 0; i < len; ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

int reportExit(const tg_verify_summary& s) { return s.violations > 0 ? 1 : 0; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toughgraph: exact toughness, 2-factors and forbidden-subgraph checks"};
    app.require_subcommand(1);

    // --- toughness ---
    std::string toughFile;
    int toughBudget = 0;
    auto* cmdTough = app.add_subcommand("toughness", "exact toughness with a minimizing cut set");
    cmdTough->add_option("graph-file", toughFile, "graph6 or edge-list file, - for stdin")
        ->required();
    cmdTough->add_option("--budget", toughBudget, "vertex budget for the subset scan");

    // --- check-tough ---
    std::string checkFile, checkT = "3/2";
    int checkBudget = 0;
    auto* cmdCheck = app.add_subcommand("check-tough", "test t-toughness; exit 1 with a counterexample cut");
    cmdCheck->add_option("graph-file", checkFile)->required();
    cmdCheck->add_option("--t", checkT, "threshold as p/q (default 3/2)");
    cmdCheck->add_option("--budget", checkBudget);

    // --- check-free ---
    std::string freeFile, freePattern = "P4+P10";
    auto* cmdFree = app.add_subcommand("check-free", "test (Pa u Pb)-freeness; exit 1 with a witness");
    cmdFree->add_option("graph-file", freeFile)->required();
    cmdFree->add_option("--pattern", freePattern, "pattern as Pa+Pb (default P4+P10)");

    // --- two-factor ---
    std::string tfFile;
    bool tfCertificate = false;
    int tfBudget = 0;
    auto* cmdTf = app.add_subcommand("two-factor", "find a 2-factor or report NONE");
    cmdTf->add_option("graph-file", tfFile)->required();
    cmdTf->add_flag("--certificate", tfCertificate,
                    "on NONE, also print the special Tutte pair (needs the 3^n budget)");
    cmdTf->add_option("--budget", tfBudget, "vertex budget for the certificate scan");

    // --- eta ---
    std::string etaFile;
    std::vector<int> etaS, etaT;
    auto* cmdEta = app.add_subcommand("eta", "eta(S,T), h(S,T) and the odd-component table");
    cmdEta->add_option("graph-file", etaFile)->required();
    cmdEta->add_option("--S", etaS, "vertices of S")->delimiter(',');
    cmdEta->add_option("--T", etaT, "vertices of T")->delimiter(',');

    // --- gen-family ---
    int famL = 1, famM = 2;
    std::string famFormat = "graph6", famWitnessPath;
    auto* cmdFam = app.add_subcommand("gen-family", "emit the extremal family instance G(l,m)");
    cmdFam->add_option("--l", famL, "l >= 1")->required();
    cmdFam->add_option("--m", famM, "m >= 2")->required();
    cmdFam->add_option("--format", famFormat)->check(CLI::IsMember({"graph6", "edgelist"}));
    cmdFam->add_option("--emit-witnesses", famWitnessPath,
                       "write a JSON side file naming S, T, W and the A blocks");

    // --- verify-theorem ---
    int vtNMin = 3, vtNMax = 7, vtWorkers = 0;
    long long vtBudgetMs = 0;
    std::string vtT = "3/2", vtPattern = "P4+P10", vtCorpus, vtReport = "-";
    auto* cmdVt = app.add_subcommand(
        "verify-theorem", "check \"t-tough and pattern-free implies 2-factor\" over a corpus");
    cmdVt->add_option("--n-min", vtNMin);
    cmdVt->add_option("--n-max", vtNMax);
    cmdVt->add_option("--t", vtT);
    cmdVt->add_option("--pattern", vtPattern);
    cmdVt->add_option("--corpus", vtCorpus, "graph6 file replacing the labeled enumeration");
    cmdVt->add_option("--report", vtReport, "JSONL report path, - for stdout");
    cmdVt->add_option("--workers", vtWorkers, "worker threads (default: TOUGHGRAPH_WORKERS, then hardware)");
    cmdVt->add_option("--per-graph-budget-ms", vtBudgetMs, "per-graph time budget; overruns are skipped");

    // --- verify-sharpness ---
    int vsL = 1, vsM = 2, vsFreeBudget = 0;
    std::string vsReport = "-";
    auto* cmdVs = app.add_subcommand("verify-sharpness",
                                     "check the family instance: no 2-factor, eta = -2, ratio formula, 2P5-free");
    cmdVs->add_option("--l", vsL)->required();
    cmdVs->add_option("--m", vsM)->required();
    cmdVs->add_option("--freeness-budget", vsFreeBudget, "max n for the 2P5 scan (default 120)");
    cmdVs->add_option("--report", vsReport);

    // --- verify-lemma5 ---
    int vlNMax = 6, vlWorkers = 0;
    std::string vlReport = "-";
    auto* cmdVl = app.add_subcommand("verify-lemma5",
                                     "check the special-pair properties on every 2-factor-free graph");
    cmdVl->add_option("--n-max", vlNMax);
    cmdVl->add_option("--workers", vlWorkers);
    cmdVl->add_option("--report", vlReport);

    CLI11_PARSE(app, argc, argv);

    if (cmdTough->parsed()) {
        GraphHandle g;
        loadGraph(toughFile, g);
        int n = tg_graph_vertex_count(g.g);
        tg_rational value;
        std::vector<int> witness(std::max(n, 1));
        int witnessLen = -1;
        if (tg_toughness_exact(g.g, toughBudget, &value, witness.data(), &witnessLen) != TG_OK)
            die("toughness");
        std::cout << "t(G) = " << rationalStr(value) << "\n";
        if (witnessLen >= 0)
            std::cout << "witness U = " << setStr(witness.data(), witnessLen) << "\n";
        return 0;
    }

    if (cmdCheck->parsed()) {
        long long num, den;
        if (!parseFraction(checkT, num, den)) {
            std::cerr << "error: --t expects p or p/q\n";
            return 2;
        }
        GraphHandle g;
        loadGraph(checkFile, g);
        int n = tg_graph_vertex_count(g.g);
        int tough = 0, witnessLen = 0;
        std::vector<int> witness(std::max(n, 1));
        if (tg_is_t_tough(g.g, num, den, checkBudget, &tough, witness.data(), &witnessLen) != TG_OK)
            die("check-tough");
        if (tough) {
            std::cout << "graph is " << checkT << "-tough\n";
            return 0;
        }
        std::cout << "graph is NOT " << checkT << "-tough\n";
        std::cout << "counterexample U = " << setStr(witness.data(), witnessLen) << "\n";
        return 1;
    }

    if (cmdFree->parsed()) {
        int a, b;
        if (!parsePattern(freePattern, a, b)) {
            std::cerr << "error: --pattern expects Pa+Pb, e.g. P4+P10\n";
            return 2;
        }
        GraphHandle g;
        loadGraph(freeFile, g);
        int found = 0;
        std::vector<int> pa(a), pb(b);
        if (tg_find_induced_path_union(g.g, a, b, &found, pa.data(), pb.data()) != TG_OK)
            die("check-free");
        if (!found) {
            std::cout << "graph is (P" << a << " u P" << b << ")-free\n";
            return 0;
        }
        std::cout << "induced P" << a << " u P" << b << " found\n";
        std::cout << "P" << a << ": " << setStr(pa.data(), a) << "\n";
        std::cout << "P" << b << ": " << setStr(pb.data(), b) << "\n";
        return 1;
    }

    if (cmdTf->parsed()) {
        GraphHandle g;
        loadGraph(tfFile, g);
        int n = tg_graph_vertex_count(g.g);
        int found = 0;
        tg_two_factor* tf = nullptr;
        if (tg_find_two_factor(g.g, &found, &tf) != TG_OK) die("two-factor");
        if (found) {
            int cycles = tg_two_factor_cycle_count(tf);
            std::vector<int> cycle(std::max(n, 1));
            for (int i = 0; i < cycles; ++i) {
                int len = 0;
                tg_two_factor_cycle(tf, i, cycle.data(), &len);
                std::cout << "cycle " << i + 1 << ":";
                for (int j = 0; j < len; ++j) std::cout << " " << cycle[j];
                std::cout << "\n";
            }
            tg_two_factor_free(tf);
            return 0;
        }
        std::cout << "NONE\n";
        if (tfCertificate) {
            int pairFound = 0, sLen = 0, tLen = 0, h = 0;
            long long eta = 0;
            std::vector<int> s(std::max(n, 1)), t(std::max(n, 1));
            if (tg_special_tutte_pair(g.g, tfBudget, &pairFound, s.data(), &sLen, t.data(), &tLen,
                                      &eta, &h) != TG_OK)
                die("special Tutte pair");
            if (pairFound) {
                std::cout << "special Tutte pair: S = " << setStr(s.data(), sLen)
                          << ", T = " << setStr(t.data(), tLen) << ", eta = " << eta
                          << ", h = " << h << "\n";
            }
        }
        return 1;
    }

    if (cmdEta->parsed()) {
        GraphHandle g;
        loadGraph(etaFile, g);
        int n = tg_graph_vertex_count(g.g);
        long long eta = 0;
        int h = 0;
        if (tg_eta(g.g, etaS.data(), static_cast<int>(etaS.size()), etaT.data(),
                   static_cast<int>(etaT.size()), &eta, &h) != TG_OK)
            die("eta");
        std::cout << "eta(S,T) = " << eta << "\n";
        std::cout << "h(S,T) = " << h << "\n";
        tg_odd_components* oc = nullptr;
        if (tg_odd_components_build(g.g, etaS.data(), static_cast<int>(etaS.size()), etaT.data(),
                                    static_cast<int>(etaT.size()), &oc) != TG_OK)
            die("odd components");
        int count = tg_odd_components_count(oc);
        std::vector<int> verts(std::max(n, 1));
        for (int i = 0; i < count; ++i) {
            int len = 0, edgesToT = 0, odd = 0, strong = 0;
            tg_odd_components_get(oc, i, verts.data(), &len, &edgesToT, &odd, &strong);
            std::cout << "component " << i + 1 << ": " << setStr(verts.data(), len)
                      << " e(C,T)=" << edgesToT << (odd ? " odd" : " even");
            if (odd) std::cout << (strong ? " strong" : " weak");
            std::cout << "\n";
        }
        tg_odd_components_free(oc);
        return 0;
    }

    if (cmdFam->parsed()) {
        tg_family* fam = nullptr;
        if (tg_family_build(famL, famM, &fam) != TG_OK) die("gen-family");
        const tg_graph* g = tg_family_graph(fam);
        char* text = nullptr;
        tg_status rc = famFormat == "graph6" ? tg_graph_to_graph6(g, &text)
                                             : tg_graph_to_edge_list_text(g, &text);
        if (rc != TG_OK) die("serializing family graph");
        std::cout << text;
        if (famFormat == "graph6") std::cout << "\n";
        tg_string_free(text);

        if (!famWitnessPath.empty()) {
            int n = tg_graph_vertex_count(g);
            std::vector<int> buf(n);
            int len = 0;
            ordered_json side;
            side["l"] = famL;
            side["m"] = famM;
            side["n"] = n;
            for (const char* name : {"S", "A", "T", "B", "W"}) {
                tg_family_class(fam, name, buf.data(), &len);
                side[name] = std::vector<int>(buf.begin(), buf.begin() + len);
            }
            int blocks = tg_family_block_count(fam);
            side["A_blocks"] = ordered_json::array();
            for (int i = 0; i < blocks; ++i) {
                tg_family_block(fam, i, buf.data(), &len);
                side["A_blocks"].push_back(std::vector<int>(buf.begin(), buf.begin() + len));
            }
            tg_rational formula;
            tg_family_formula_toughness(fam, &formula);
            side["toughness_formula"] = rationalStr(formula);
            std::ofstream out(famWitnessPath);
            if (!out) {
                std::cerr << "error: cannot write " << famWitnessPath << "\n";
                return 2;
            }
            out << side.dump(2) << "\n";
        }
        tg_family_free(fam);
        return 0;
    }

    if (cmdVt->parsed()) {
        long long num, den;
        int a, b;
        if (!parseFraction(vtT, num, den) || !parsePattern(vtPattern, a, b)) {
            std::cerr << "error: bad --t or --pattern\n";
            return 2;
        }
        tg_verify_summary s{};
        if (tg_verify_theorem(vtNMin, vtNMax, num, den, a, b,
                              vtCorpus.empty() ? nullptr : vtCorpus.c_str(),
                              vtReport.empty() ? nullptr : vtReport.c_str(), vtWorkers,
                              vtBudgetMs, &s) != TG_OK)
            die("verify-theorem");
        std::cerr << "examined=" << s.examined << " applicable=" << s.applicable
                  << " violations=" << s.violations << " skipped=" << s.skipped
                  << " elapsed_ms=" << s.elapsed_ms << "\n";
        return reportExit(s);
    }

    if (cmdVs->parsed()) {
        tg_verify_summary s{};
        if (tg_verify_sharpness(vsL, vsM, vsFreeBudget,
                                vsReport.empty() ? nullptr : vsReport.c_str(), &s) != TG_OK)
            die("verify-sharpness");
        std::cerr << "checks=" << s.applicable << " violations=" << s.violations
                  << " skipped=" << s.skipped << " elapsed_ms=" << s.elapsed_ms << "\n";
        return reportExit(s);
    }

    if (cmdVl->parsed()) {
        tg_verify_summary s{};
        if (tg_verify_lemma5(vlNMax, vlWorkers, vlReport.empty() ? nullptr : vlReport.c_str(),
                             &s) != TG_OK)
            die("verify-lemma5");
        std::cerr << "examined=" << s.examined << " two_factor_free=" << s.applicable
                  << " violations=" << s.violations << " elapsed_ms=" << s.elapsed_ms << "\n";
        return reportExit(s);
    }

    return 0;
}
