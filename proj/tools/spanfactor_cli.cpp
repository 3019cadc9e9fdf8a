// Command-line front end: family generators, closures, factor/tree checks,
// spectral utilities, thresholds, and the verification harness, all speaking
// graph6 on stdin/stdout.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spanfactor/cliques.hpp"
#include "spanfactor/closure.hpp"
#include "spanfactor/factors.hpp"
#include "spanfactor/graph.hpp"
#include "spanfactor/harness.hpp"
#include "spanfactor/matching.hpp"
#include "spanfactor/spanning_tree.hpp"
#include "spanfactor/spectral.hpp"
#include "spanfactor/thresholds.hpp"

namespace {

using namespace spanfactor;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

// Apply fn to every graph6 line of the stream (stdin when path is "-").
int for_each_line(const std::string& path,
                  const std::function<void(const std::string&, const Graph&)>& fn) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) {
            std::cerr << "cannot open " << path << "\n";
            return kExitUsage;
        }
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        fn(line, graph6_decode(line));
    }
    return kExitOk;
}

nlohmann::json edges_json(const std::vector<std::pair<int, int>>& edges) {
    nlohmann::json j = nlohmann::json::array();
    for (auto [u, v] : edges) j.push_back({u, v});
    return j;
}

int run_closure(const std::string& index, const std::string& input) {
    return for_each_line(input, [&](const std::string&, const Graph& g) {
        Graph h = g;
        if (index == "1f") {
            h = closure_for_one_factor(g);
        } else if (index.rfind("kf:", 0) == 0) {
            h = closure_for_k_factor(g, std::stoi(index.substr(3)));
        } else if (index.rfind("ktree:", 0) == 0) {
            const std::string rest = index.substr(6);
            const std::size_t comma = rest.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("--l ktree:<k>,<m> needs both parameters");
            h = closure_for_spanning_k_tree(g, std::stoi(rest.substr(0, comma)),
                                            std::stoi(rest.substr(comma + 1)));
        } else {
            h = l_closure(g, std::stoi(index));
        }
        std::cout << graph6_encode(h) << "\n";
    });
}

int run_check(const std::string& property, int k, std::uint64_t budget, const std::string& input) {
    return for_each_line(input, [&](const std::string& line, const Graph& g) {
        nlohmann::ordered_json j;
        j["graph6"] = line;
        auto tree_answer = [&](const TreeSearchResult& r) {
            j["answer"] = r.status == SearchStatus::Found
                              ? "yes"
                              : r.status == SearchStatus::NotFound ? "no" : "budget";
            if (r.tree) j["certificate"] = edges_json(r.tree->edges);
        };
        if (property == "1-factor") {
            if (const auto m = has_one_factor(g)) {
                j["answer"] = "yes";
                j["certificate"] = edges_json(m->edges);
            } else {
                j["answer"] = "no";
            }
        } else if (property == "k-factor") {
            if (const auto f = has_k_factor(g, k)) {
                j["answer"] = "yes";
                j["certificate"] = edges_json(f->edges);
            } else {
                j["answer"] = "no";
            }
        } else if (property == "k-tree") {
            tree_answer(has_spanning_k_tree(g, k, budget));
        } else if (property == "leaf-degree") {
            const TreeSearchResult r = has_spanning_tree_leaf_deg(g, k, budget);
            tree_answer(r);
            if (r.status == SearchStatus::NotFound) {
                if (const auto violator = kaneko_check(g, k)) {
                    j["violator"] = {{"s", violator->s},
                                     {"isolated_after", violator->isolated_after}};
                }
            }
        } else {
            throw std::invalid_argument("unknown property: " + property);
        }
        std::cout << j.dump() << "\n";
    });
}

int run_spectral(const std::string& method, double tol, int a, int b, int c,
                 const std::string& input) {
    char buffer[96];
    if (method == "quotient") {
        const QuotientSystem sys = quotient_rho(a, b, c);
        std::snprintf(buffer, sizeof buffer, "%.12g eigvec %.12g %.12g %.12g", sys.rho,
                      sys.eigvec[0], sys.eigvec[1], sys.eigvec[2]);
        std::cout << buffer << "\n";
        return kExitOk;
    }
    if (method != "power") throw std::invalid_argument("unknown method: " + method);
    return for_each_line(input, [&](const std::string&, const Graph& g) {
        std::snprintf(buffer, sizeof buffer, "%.12g", spectral_radius(g, tol));
        std::cout << buffer << "\n";
    });
}

int run_cliques(int r, const std::string& input) {
    return for_each_line(input, [&](const std::string&, const Graph& g) {
        std::cout << count_cliques(g, r) << "\n";
    });
}

int run_threshold(const std::string& which, int n, int r, int k, int q, int delta) {
    char buffer[64];
    if (which == "phi") {
        std::cout << phi(n, r, q) << "\n";
    } else if (which == "psi") {
        std::cout << psi(n, r, k, q) << "\n";
    } else if (which == "spec1f") {
        std::snprintf(buffer, sizeof buffer, "%.12g", spectral_threshold_1f(n, delta));
        std::cout << buffer << "\n";
    } else if (which == "speckf") {
        std::snprintf(buffer, sizeof buffer, "%.12g", spectral_threshold_kf(n, k, delta));
        std::cout << buffer << "\n";
    } else {
        throw std::invalid_argument("unknown threshold: " + which);
    }
    return kExitOk;
}

int emit_report(const VerificationReport& report, const std::string& format) {
    std::cout << report_emit(report, format);
    if (format == "json") std::cout << "\n";
    return report.counterexamples.empty() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for graph factors, constrained spanning trees, and "
                 "spectral/clique thresholds"};
    app.require_subcommand(1);

    std::string input = "-";
    FamilyParams fp;
    std::string family, index = "1f", property = "1-factor", method = "power";
    std::string which, theorem, source_text = "exhaustive", format = "json";
    int k = 1, r = 2, n = 0, q = 0, delta = 0, m = 1, ps = 0, pq = 0, threads = 0;
    int qa = 1, qb = 1, qc = 0;
    double tol = 1e-10;
    std::uint64_t budget = kDefaultSearchBudget, seed = 0;

    auto* gen = app.add_subcommand("gen", "emit an extremal family member as graph6");
    gen->add_option("--family", family, "ex1fa|ex1fb|exktree|exleaf|exfan|gen3|joinreg")->required();
    gen->add_option("--n", fp.n);
    gen->add_option("--m", fp.m);
    gen->add_option("--k", fp.k);
    gen->add_option("--delta", fp.delta);
    gen->add_option("--a", fp.a);
    gen->add_option("--b", fp.b);
    gen->add_option("--c", fp.c);
    gen->add_option("--s", fp.s);
    gen->add_option("--p", fp.p);
    gen->add_option("--t", fp.t);

    auto* clo = app.add_subcommand("closure", "closure of each input graph");
    clo->add_option("--l", index, "closure index: <int>, 1f, kf:<k>, or ktree:<k>,<m>");
    clo->add_option("--input", input);

    auto* chk = app.add_subcommand("check", "decide a property per input graph, JSONL output");
    chk->add_option("--property", property, "1-factor, k-factor, k-tree, or leaf-degree");
    chk->add_option("--k", k);
    chk->add_option("--budget", budget);
    chk->add_option("--input", input);

    auto* spec = app.add_subcommand("spectral", "spectral radius: power iteration or quotient");
    spec->add_option("--method", method, "power or quotient");
    spec->add_option("--tol", tol);
    spec->add_option("--a", qa);
    spec->add_option("--b", qb);
    spec->add_option("--c", qc);
    spec->add_option("--input", input);

    auto* clq = app.add_subcommand("cliques", "clique count per input graph");
    clq->add_option("--r", r)->required();
    clq->add_option("--input", input);

    auto* thr = app.add_subcommand("threshold", "closed-form threshold values");
    thr->add_option("--which", which, "phi, psi, spec1f, or speckf")->required();
    thr->add_option("--n", n)->required();
    thr->add_option("--r", r);
    thr->add_option("--k", k);
    thr->add_option("--q", q);
    thr->add_option("--delta", delta);

    auto* ver = app.add_subcommand("verify", "run a verification suite over a graph source");
    ver->add_option("--theorem", theorem)->required();
    ver->add_option("--n", n)->required();
    ver->add_option("--delta", delta);
    ver->add_option("--k", k);
    ver->add_option("--m", m);
    ver->add_option("--r", r);
    ver->add_option("--s", ps);
    ver->add_option("--q", pq);
    ver->add_option("--source", source_text, "exhaustive | random:<count>:<p> | file:<path>");
    ver->add_option("--seed", seed);
    ver->add_option("--format", format, "json or csv");
    ver->add_option("--budget", budget);
    ver->add_option("--threads", threads);

    auto* per = app.add_subcommand("perturb", "tightness suite around an extremal family");
    per->add_option("--family", family, "exktree|exleaf|exfan|ex1fa|ex1fb")->required();
    per->add_option("--n", fp.n);
    per->add_option("--m", fp.m);
    per->add_option("--k", fp.k);
    per->add_option("--delta", fp.delta);
    per->add_option("--format", format, "json or csv");
    per->add_option("--budget", budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            std::cout << graph6_encode(make_family(family, fp)) << "\n";
            return kExitOk;
        }
        if (clo->parsed()) return run_closure(index, input);
        if (chk->parsed()) return run_check(property, k, budget, input);
        if (spec->parsed()) return run_spectral(method, tol, qa, qb, qc, input);
        if (clq->parsed()) return run_cliques(r, input);
        if (thr->parsed()) return run_threshold(which, n, r, k, q, delta);
        if (ver->parsed()) {
            TheoremSpec ts;
            ts.id = theorem;
            ts.params = {n, r, k, m, delta, ps, pq};
            VerifyOptions opts;
            opts.budget = budget;
            opts.threads = threads;
            opts.tol = tol;
            return emit_report(verify(ts, parse_source(source_text, n, seed), opts), format);
        }
        if (per->parsed()) {
            VerifyOptions opts;
            opts.budget = budget;
            return emit_report(perturbation_suite(family, fp, opts), format);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
