// treewalk: hitting-time statistics of weighted trees from the command line.
//
// Exit codes: 0 ok, 2 bad input or guard, 3 invalid or disconnected graph,
// 4 failed check or method disagreement.

#include "treewalk/canonical.hpp"
#include "treewalk/enumerate.hpp"
#include "treewalk/error.hpp"
#include "treewalk/extremal.hpp"
#include "treewalk/homorder.hpp"
#include "treewalk/io.hpp"
#include "treewalk/report.hpp"
#include "treewalk/simulate.hpp"
#include "treewalk/transfer.hpp"
#include "treewalk/walk.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace treewalk;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitGraph = 3;
constexpr int kExitCheck = 4;

// Largest relative spread between methods accepted by `compute`.
constexpr double kMethodAgreement = 1e-6;

struct Common {
    bool json = false;
    double tol = 1e-9;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_flag("--json", c.json, "Emit a JSON document instead of text");
    cmd->add_option("--tol", c.tol, "Relative tolerance for ties")->capture_default_str()->check(CLI::PositiveNumber);
}

std::string join(std::span<const double> xs) {
    std::string s;
    for (double x : xs) s += (s.empty() ? "" : ",") + format_real(x);
    return s;
}

std::string tree_summary(const WeightedGraph& t) {
    std::string deg;
    for (std::size_t d : degree_sequence(t)) deg += (deg.empty() ? "" : ",") + std::to_string(d);
    if (const auto layout = path_layout_of(t)) return "path (" + join(layout->weights()) + ")";
    if (is_star(t)) return "star";
    return "degrees " + deg;
}

WeightMultiset to_multiset(const std::vector<double>& w) {
    for (double x : w) {
        if (!(x > 0.0)) throw GuardError("weights must be positive");
    }
    return WeightMultiset(w);
}

// ---- compute ----------------------------------------------------------

struct ComputeArgs {
    Common common;
    std::string input;
    std::string method = "all";
    bool hitting = false;
};

int run_compute(const ComputeArgs& a, const std::string& echo) {
    const WeightedGraph g = read_graph_file(a.input);
    std::vector<Method> methods;
    if (a.method == "all") {
        methods = {Method::exact, Method::forest, Method::spectral};
    } else {
        methods = {parse_method(a.method)};
    }
    const RunReport r = compute_report(g, methods, a.hitting, echo);
    if (a.common.json) {
        std::cout << to_json(r) << "\n";
    } else {
        std::printf("n = %zu, vol = %s, digest %s\n", r.n, format_real(r.vol).c_str(), r.input_digest.c_str());
        std::printf("%-9s %-20s %-20s\n", "method", "alpha", "kappa");
        for (const MethodResult& m : r.results) {
            std::printf("%-9s %-20s %-20s\n", std::string(to_string(m.method)).c_str(),
                        format_real(m.alpha).c_str(), format_real(m.kappa).c_str());
        }
        if (r.results.size() > 1) {
            std::printf("delta     alpha %.3g, kappa %.3g\n", r.alpha_delta, r.kappa_delta);
        }
        if (r.hitting) {
            std::printf("hitting times H(u, v):\n");
            for (std::size_t u = 0; u < r.hitting->rows(); ++u) {
                std::string row;
                for (double x : r.hitting->row(u)) row += " " + format_real(x);
                std::printf(" %s\n", row.c_str());
            }
        }
    }
    if (r.alpha_delta > kMethodAgreement || r.kappa_delta > kMethodAgreement) {
        std::fprintf(stderr, "treewalk: methods disagree beyond %g\n", kMethodAgreement);
        return kExitCheck;
    }
    return kExitOk;
}

// ---- verify-extremal --------------------------------------------------

struct ExtremalArgs {
    Common common;
    std::vector<double> weights;
    std::string stat = "alpha";
};

int run_extremal(const ExtremalArgs& a) {
    const FamilyReport r = scan_family(to_multiset(a.weights), parse_statistic(a.stat), a.common.tol);
    if (a.common.json) {
        std::cout << to_json(r) << "\n";
    } else {
        std::printf("W = {%s}, |T_W| = %zu, stat %s\n", join(r.weights.values()).c_str(), r.family_size,
                    std::string(to_string(r.stat)).c_str());
        std::printf("max %s (%zu tree%s):\n", format_real(r.max_value).c_str(), r.argmax.size(),
                    r.argmax.size() == 1 ? "" : "s");
        for (const FamilyMember& m : r.argmax) std::printf("  %s\n", tree_summary(m.tree).c_str());
        std::printf("min %s (%zu tree%s):\n", format_real(r.min_value).c_str(), r.argmin.size(),
                    r.argmin.size() == 1 ? "" : "s");
        for (const FamilyMember& m : r.argmin) std::printf("  %s\n", tree_summary(m.tree).c_str());
        std::printf("polarized paths: %zu\n", r.polarized.size());
        for (std::size_t i = 0; i < r.polarized.size(); ++i) {
            std::printf("  (%s) alpha %s\n", join(r.polarized[i].weights()).c_str(),
                        format_real(r.polarized_values[i]).c_str());
        }
        std::printf("checks: %s\n", r.violations.empty() ? "all hold" : "FAILED");
    }
    for (const auto& v : r.violations) std::fprintf(stderr, "treewalk: %s\n", v.c_str());
    return r.violations.empty() ? kExitOk : kExitCheck;
}

// ---- hasse ------------------------------------------------------------

struct HasseArgs {
    Common common;
    std::size_t n = 7;
    std::string mode = "size";
    std::string output = "-";
};

int run_hasse(const HasseArgs& a) {
    if (a.n < 2 || a.n > 8) throw GuardError("hasse supports 2 <= n <= 8");
    const HasseDiagram d = build_hasse(enumerate_free_trees(a.n), parse_transfer_mode(a.mode));
    const std::string body = a.common.json ? to_json(d) + "\n" : to_dot(d);
    const std::string counts = "nodes " + std::to_string(d.codes.size()) + ", covers " +
                               std::to_string(d.covers.size()) + ", maximal " +
                               std::to_string(d.maximal().size()) + ", minimal " +
                               std::to_string(d.minimal().size()) + "\n";
    if (a.output == "-") {
        std::cout << body;
        std::cerr << counts;
    } else {
        std::ofstream out(a.output);
        if (!out) throw GuardError("cannot write " + a.output);
        out << body;
        std::cout << counts;
    }
    return kExitOk;
}

// ---- search-path ------------------------------------------------------

struct SearchArgs {
    Common common;
    std::vector<double> weights;
};

int run_search(const SearchArgs& a) {
    const PathSearchResult r = best_path_assignment(to_multiset(a.weights), a.common.tol);
    if (a.common.json) {
        std::cout << to_json(r) << "\n";
    } else {
        std::printf("assignments %zu, maximizers %zu\n", r.assignments, r.maximizers);
        std::printf("best (%s): J %s, kappa %s, %s\n", join(r.best.layout.weights()).c_str(),
                    format_real(r.best.objective).c_str(), format_real(r.best.kappa).c_str(),
                    r.best.layout.is_polarized() ? "polarized" : "not polarized");
        std::printf("kappa ranking matches J ranking: %s\n", r.rankings_agree ? "yes" : "no");
    }
    return kExitOk;
}

// ---- conjecture -------------------------------------------------------

struct ConjectureArgs {
    Common common;
    std::size_t n = 6;
    std::size_t corpus_max = 5;
    std::size_t extend = 6;
    bool strict = false;
};

int run_conjecture(const ConjectureArgs& a) {
    if (a.corpus_max < 2 || a.corpus_max > 6) throw GuardError("--corpus-max must be in 2..6");
    HomDominanceReport r = conjecture_scan(a.n, connected_graph_corpus(2, a.corpus_max));
    if (a.extend > a.corpus_max && !r.violations.empty()) {
        if (a.extend > 6) throw GuardError("--extend must be at most 6");
        refine_violations(r, connected_graph_corpus(2, a.extend));
    }
    std::size_t unresolved = 0;
    for (const auto& v : r.violations) unresolved += !v.corpus_false_positive;
    if (a.common.json) {
        std::cout << to_json(r) << "\n";
    } else {
        std::size_t dominated = 0, incomparable = 0;
        for (const HomPair& p : r.pairs) {
            dominated += p.comparison.verdict == HomVerdict::dominates ||
                         p.comparison.verdict == HomVerdict::dominated;
            incomparable += p.comparison.verdict == HomVerdict::incomparable;
        }
        std::printf("n = %zu, %zu trees, corpus %zu graphs (2..%zu vertices)\n", r.n, r.trees.size(),
                    r.corpus_ids.size(), a.corpus_max);
        std::printf("pairs %zu: comparable %zu, incomparable %zu\n", r.pairs.size(), dominated, incomparable);
        std::printf("violations %zu, unresolved %zu\n", r.violations.size(), unresolved);
        for (const auto& v : r.violations) {
            std::printf("  %s (alpha %s) dominates %s (alpha %s)%s\n", r.trees[v.dominant].code.c_str(),
                        format_real(v.alpha_dominant).c_str(), r.trees[v.dominated].code.c_str(),
                        format_real(v.alpha_dominated).c_str(),
                        v.corpus_false_positive ? " [corpus false positive]" : "");
        }
    }
    return a.strict && unresolved > 0 ? kExitCheck : kExitOk;
}

// ---- simulate ---------------------------------------------------------

struct SimulateArgs {
    Common common;
    std::string input;
    Vertex from = 0;
    Vertex to = 1;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
};

int run_simulate(const SimulateArgs& a) {
    const WeightedGraph g = read_graph_file(a.input);
    const WalkEstimate e = estimate_hitting(g, a.from, a.to, a.trials, a.seed);
    if (a.common.json) {
        std::cout << to_json(e, a.from, a.to) << "\n";
    } else {
        std::printf("H(%zu, %zu) ~ %s +- %s (%llu trials, seed %llu)\n", a.from, a.to,
                    format_real(e.mean).c_str(), format_real(e.standard_error).c_str(),
                    static_cast<unsigned long long>(e.trials), static_cast<unsigned long long>(e.seed));
        if (g.vertex_count() >= 2) {
            std::printf("exact %s\n", format_real(hitting_matrix(g).h(a.from, a.to)).c_str());
        }
    }
    return kExitOk;
}

std::string command_line(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Average hitting time and Kemeny's constant of weighted trees"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "treewalk 0.1.0");

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Compute alpha and kappa of a TWG graph");
    add_common(c, compute.common);
    c->add_option("--input", compute.input, "TWG file")->required();
    c->add_option("--method", compute.method, "exact, forest, spectral or all")
        ->capture_default_str()
        ->check(CLI::IsMember({"exact", "forest", "spectral", "all"}));
    c->add_flag("--hitting", compute.hitting, "Include the full hitting-time matrix");

    ExtremalArgs extremal;
    auto* x = app.add_subcommand("verify-extremal", "Scan T_W and check the extremal trees");
    add_common(x, extremal.common);
    x->add_option("--weights", extremal.weights, "Comma-separated edge weights")->required()->delimiter(',');
    x->add_option("--stat", extremal.stat, "alpha or kappa")->capture_default_str()->check(CLI::IsMember({"alpha", "kappa"}));

    HasseArgs hasse;
    auto* h = app.add_subcommand("hasse", "Hasse diagram of edge transfers on simple trees");
    add_common(h, hasse.common);
    h->add_option("--n", hasse.n, "Tree size (2..8)")->capture_default_str();
    h->add_option("--mode", hasse.mode, "size or volume")->capture_default_str()->check(CLI::IsMember({"size", "volume"}));
    h->add_option("--output", hasse.output, "Output path, - for stdout")->capture_default_str();

    SearchArgs search;
    auto* s = app.add_subcommand("search-path", "Brute-force the kappa-optimal path layout");
    add_common(s, search.common);
    s->add_option("--weights", search.weights, "Comma-separated edge weights")->required()->delimiter(',');

    ConjectureArgs conj;
    auto* j = app.add_subcommand("conjecture", "Compare homomorphism dominance with alpha");
    add_common(j, conj.common);
    j->add_option("--n", conj.n, "Tree size (1..8)")->capture_default_str();
    j->add_option("--corpus-max", conj.corpus_max, "Largest corpus graph (2..6)")->capture_default_str();
    j->add_option("--extend", conj.extend, "Re-check violations on graphs up to this size")->capture_default_str();
    j->add_flag("--strict", conj.strict, "Exit 4 when violations remain unresolved");

    SimulateArgs sim;
    auto* m = app.add_subcommand("simulate", "Monte Carlo estimate of a hitting time");
    add_common(m, sim.common);
    m->add_option("--input", sim.input, "TWG file")->required();
    m->add_option("--from", sim.from, "Start vertex")->capture_default_str();
    m->add_option("--to", sim.to, "Target vertex")->capture_default_str();
    m->add_option("--trials", sim.trials, "Number of walks")->capture_default_str();
    m->add_option("--seed", sim.seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (c->parsed()) return run_compute(compute, command_line(argc, argv));
        if (x->parsed()) return run_extremal(extremal);
        if (h->parsed()) return run_hasse(hasse);
        if (s->parsed()) return run_search(search);
        if (j->parsed()) return run_conjecture(conj);
        if (m->parsed()) return run_simulate(sim);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "treewalk: parse error: %s\n", e.what());
        return kExitInput;
    } catch (const GuardError& e) {
        std::fprintf(stderr, "treewalk: %s\n", e.what());
        return kExitInput;
    } catch (const GraphError& e) {
        std::fprintf(stderr, "treewalk: invalid graph: %s\n", e.what());
        return kExitGraph;
    } catch (const ViolationError& e) {
        std::fprintf(stderr, "treewalk: check failed: %s\n", e.what());
        return kExitCheck;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "treewalk: numerical failure: %s\n", e.what());
        return kExitCheck;
    }
    return kExitOk;
}
