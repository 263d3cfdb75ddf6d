#include "treewalk/report.hpp"

#include "treewalk/error.hpp"
#include "treewalk/forest.hpp"
#include "treewalk/io.hpp"
#include "treewalk/spectral.hpp"
#include "treewalk/walk.hpp"

#include <json.hpp>

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>

namespace treewalk {

using nlohmann::ordered_json;

std::string_view to_string(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::forest: return "forest";
        case Method::spectral: return "spectral";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    if (text == "exact") return Method::exact;
    if (text == "forest") return Method::forest;
    if (text == "spectral") return Method::spectral;
    throw GuardError("unknown method '" + std::string(text) + "'");
}

double round_significant(double x, int digits) {
    if (!std::isfinite(x)) return x;
    return std::strtod(format_real(x, digits).c_str(), nullptr);
}

std::string input_digest(const WeightedGraph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : format_graph(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

RunReport compute_report(const WeightedGraph& g, std::span<const Method> methods,
                         bool include_hitting, std::string command) {
    const auto start = std::chrono::steady_clock::now();
    require_connected(g);
    if (g.vertex_count() < 2) throw GraphError("random walk needs at least two vertices");
    RunReport r;
    r.command = std::move(command);
    r.input_digest = input_digest(g);
    r.n = g.vertex_count();
    r.vol = 2.0 * g.total_weight();
    for (Method m : methods) {
        MethodResult res{m, 0.0, 0.0};
        switch (m) {
            case Method::exact: {
                const ScalarStats s = exact_stats(g);
                res.alpha = s.alpha;
                res.kappa = s.kappa;
                break;
            }
            case Method::forest:
                res.alpha = alpha_forest(g);
                res.kappa = kappa_forest(g);
                break;
            case Method::spectral: {
                const SpectrumResult s = laplacian_spectra(g);
                res.alpha = alpha_spectral(s, r.vol, r.n);
                res.kappa = kappa_spectral(s);
                break;
            }
        }
        r.results.push_back(res);
    }
    for (std::size_t i = 0; i < r.results.size(); ++i) {
        for (std::size_t j = i + 1; j < r.results.size(); ++j) {
            r.alpha_delta = std::max(r.alpha_delta,
                                     relative_difference(r.results[i].alpha, r.results[j].alpha));
            r.kappa_delta = std::max(r.kappa_delta,
                                     relative_difference(r.results[i].kappa, r.results[j].kappa));
        }
    }
    if (include_hitting) r.hitting = hitting_matrix(g).h;
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

namespace {

ordered_json real(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return round_significant(x);
}

ordered_json edges_json(const WeightedGraph& t) {
    ordered_json e = ordered_json::array();
    for (const Edge& x : t.edges()) e.push_back({x.u, x.v, real(x.w)});
    return e;
}

ordered_json layout_json(const PathLayout& p) {
    ordered_json a = ordered_json::array();
    for (double w : p.weights()) a.push_back(real(w));
    return a;
}

ordered_json member_json(const FamilyMember& m) {
    ordered_json j;
    j["code"] = m.code.code;
    j["value"] = real(m.value);
    j["is_path"] = m.is_path;
    j["edges"] = edges_json(m.tree);
    if (m.layout) j["layout"] = layout_json(*m.layout);
    return j;
}

}  // namespace

std::string to_json(const RunReport& r) {
    ordered_json j;
    j["schema"] = "treewalk.compute/1";
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["n"] = r.n;
    j["vol"] = real(r.vol);
    ordered_json res = ordered_json::array();
    for (const MethodResult& m : r.results) {
        res.push_back({{"method", to_string(m.method)}, {"alpha", real(m.alpha)}, {"kappa", real(m.kappa)}});
    }
    j["results"] = res;
    j["alpha_delta"] = real(r.alpha_delta);
    j["kappa_delta"] = real(r.kappa_delta);
    j["wall_seconds"] = real(r.wall_seconds);
    if (r.hitting) {
        ordered_json h = ordered_json::array();
        for (std::size_t u = 0; u < r.hitting->rows(); ++u) {
            ordered_json row = ordered_json::array();
            for (double x : r.hitting->row(u)) row.push_back(real(x));
            h.push_back(row);
        }
        j["hitting"] = h;
    }
    return j.dump(2);
}

std::string to_json(const FamilyReport& r) {
    ordered_json j;
    j["schema"] = "treewalk.family/1";
    ordered_json w = ordered_json::array();
    for (double x : r.weights.values()) w.push_back(real(x));
    j["weights"] = w;
    j["stat"] = to_string(r.stat);
    j["family_size"] = r.family_size;
    j["max_value"] = real(r.max_value);
    j["min_value"] = real(r.min_value);
    j["max_margin"] = real(r.max_margin);
    j["min_margin"] = real(r.min_margin);
    ordered_json amax = ordered_json::array(), amin = ordered_json::array();
    for (const auto& m : r.argmax) amax.push_back(member_json(m));
    for (const auto& m : r.argmin) amin.push_back(member_json(m));
    j["argmax"] = amax;
    j["argmin"] = amin;
    ordered_json pol = ordered_json::array();
    for (std::size_t i = 0; i < r.polarized.size(); ++i) {
        pol.push_back({{"layout", layout_json(r.polarized[i])}, {"alpha", real(r.polarized_values[i])}});
    }
    j["polarized"] = pol;
    j["violations"] = r.violations;
    return j.dump(2);
}

std::string to_json(const PathSearchResult& r) {
    ordered_json j;
    j["schema"] = "treewalk.path_search/1";
    j["assignments"] = r.assignments;
    j["maximizers"] = r.maximizers;
    j["rankings_agree"] = r.rankings_agree;
    j["best"] = {{"layout", layout_json(r.best.layout)},
                 {"objective", real(r.best.objective)},
                 {"kappa", real(r.best.kappa)},
                 {"polarized", r.best.layout.is_polarized()}};
    return j.dump(2);
}

std::string to_json(const HomDominanceReport& r) {
    ordered_json j;
    j["schema"] = "treewalk.conjecture/1";
    j["n"] = r.n;
    j["corpus"] = r.corpus_ids;
    ordered_json trees = ordered_json::array();
    for (std::size_t i = 0; i < r.trees.size(); ++i) {
        trees.push_back({{"code", r.trees[i].code}, {"alpha", real(r.alpha[i])}});
    }
    j["trees"] = trees;
    ordered_json pairs = ordered_json::array();
    for (const HomPair& p : r.pairs) {
        ordered_json wit = ordered_json::array();
        for (const HomWitness& w : p.comparison.witnesses) {
            wit.push_back({{"graph", r.corpus_ids.at(w.graph)}, {"first", w.first}, {"second", w.second}});
        }
        pairs.push_back({{"first", p.first},
                         {"second", p.second},
                         {"verdict", to_string(p.comparison.verdict)},
                         {"witnesses", wit}});
    }
    j["pairs"] = pairs;
    ordered_json viol = ordered_json::array();
    for (const ConjectureViolation& v : r.violations) {
        viol.push_back({{"dominant", v.dominant},
                        {"dominated", v.dominated},
                        {"alpha_dominant", real(v.alpha_dominant)},
                        {"alpha_dominated", real(v.alpha_dominated)},
                        {"corpus_false_positive", v.corpus_false_positive}});
    }
    j["violations"] = viol;
    return j.dump(2);
}

std::string to_json(const WalkEstimate& e, Vertex from, Vertex to) {
    ordered_json j;
    j["schema"] = "treewalk.simulate/1";
    j["from"] = from;
    j["to"] = to;
    j["trials"] = e.trials;
    j["seed"] = e.seed;
    j["mean"] = real(e.mean);
    j["standard_error"] = real(e.standard_error);
    return j.dump(2);
}

std::string to_json(const HasseDiagram& d) {
    ordered_json j;
    j["schema"] = "treewalk.hasse/1";
    j["mode"] = to_string(d.mode);
    ordered_json nodes = ordered_json::array();
    for (const auto& c : d.codes) nodes.push_back(c.code);
    j["nodes"] = nodes;
    ordered_json covers = ordered_json::array();
    for (auto [hi, lo] : d.covers) covers.push_back({hi, lo});
    j["covers"] = covers;
    j["maximal"] = d.maximal();
    j["minimal"] = d.minimal();
    return j.dump(2);
}

}  // namespace treewalk
