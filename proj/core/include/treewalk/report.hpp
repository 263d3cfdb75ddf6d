#pragma once

#include "treewalk/extremal.hpp"
#include "treewalk/graph.hpp"
#include "treewalk/homorder.hpp"
#include "treewalk/linalg.hpp"
#include "treewalk/simulate.hpp"
#include "treewalk/transfer.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treewalk {

enum class Method { exact, forest, spectral };

std::string_view to_string(Method m);
/// "exact", "forest", "spectral"; GuardError otherwise.
Method parse_method(std::string_view text);

struct MethodResult {
    Method method = Method::exact;
    double alpha = 0.0;
    double kappa = 0.0;
};

struct RunReport {
    std::string command;
    std::string input_digest;  // FNV-1a 64 of the canonical TWG text, hex
    std::size_t n = 0;
    double vol = 0.0;
    std::vector<MethodResult> results;
    double alpha_delta = 0.0;  // max relative difference across methods
    double kappa_delta = 0.0;
    double wall_seconds = 0.0;
    std::optional<Matrix> hitting;
};

/// Runs the requested methods on g. Deltas are max pairwise relative
/// differences (0 with a single method).
RunReport compute_report(const WeightedGraph& g, std::span<const Method> methods,
                         bool include_hitting, std::string command = {});

std::string input_digest(const WeightedGraph& g);

/// JSON documents. Every real is rounded to 12 significant digits; each
/// document carries a "schema" tag ("treewalk.<kind>/1").
std::string to_json(const RunReport& r);
std::string to_json(const FamilyReport& r);
std::string to_json(const PathSearchResult& r);
std::string to_json(const HomDominanceReport& r);
std::string to_json(const WalkEstimate& e, Vertex from, Vertex to);
std::string to_json(const HasseDiagram& d);

/// Round to `digits` significant digits.
double round_significant(double x, int digits = 12);

}  // namespace treewalk
