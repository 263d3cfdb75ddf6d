#pragma once

#include "treewalk/canonical.hpp"
#include "treewalk/graph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treewalk {

/// Edge weights ω(e_1), ..., ω(e_m) along a path v_1 ... v_{m+1}.
class PathLayout {
public:
    PathLayout() = default;
    explicit PathLayout(std::vector<double> weights_in_order);

    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t edge_count() const noexcept { return weights_.size(); }

    /// c(e_i) = min(i, n - i) for 1-based i and n = m + 1.
    std::size_t centrality(std::size_t i) const noexcept;

    /// More central edges never carry larger weights: c(e_i) < c(e_j)
    /// implies ω(e_i) >= ω(e_j). Edges of equal centrality are unconstrained.
    bool is_polarized() const noexcept;

    /// The same path read from the other end.
    PathLayout reversed() const;
    /// Orientation whose weight sequence is lexicographically larger.
    PathLayout oriented() const;

    WeightedGraph to_graph() const;

    friend bool operator==(const PathLayout&, const PathLayout&) = default;

private:
    std::vector<double> weights_;
};

/// Weight order along a path-shaped tree (from the endpoint giving the
/// lexicographically larger sequence); nullopt for non-paths.
std::optional<PathLayout> path_layout_of(const WeightedGraph& t);

/// Polarized layouts up to reversal: sorted W is split into consecutive
/// pairs, pair k goes onto {e_k, e_{n-k}} in both orders, duplicates are
/// merged by canonical form. Sorted by canonical code. GuardError if W is
/// empty or has more than 40 entries.
std::vector<PathLayout> polarized_paths(const WeightMultiset& w);

/// S_W: center 0, spokes carrying W in descending order.
WeightedGraph star_of(const WeightMultiset& w);

/// Largest |W| accepted by enumerate_tw.
inline constexpr std::size_t kMaxFamilyEdges = 8;

/// T_W up to weight-preserving isomorphism, one tree_from_canonical
/// representative per class, sorted by code. Built by placing every
/// distinct permutation of W on every free tree shape.
std::vector<WeightedGraph> enumerate_tw(const WeightMultiset& w);

/// Same classes built from every labeled tree (Prüfer) crossed with every
/// distinct permutation. Slow; kept as an independent cross-check.
std::vector<WeightedGraph> enumerate_tw_labeled(const WeightMultiset& w);

enum class Statistic { alpha, kappa };

std::string_view to_string(Statistic s);
/// "alpha" or "kappa"; GuardError otherwise.
Statistic parse_statistic(std::string_view text);

struct FamilyMember {
    CanonicalForm code;
    WeightedGraph tree;
    double value = 0.0;
    bool is_path = false;
    std::optional<PathLayout> layout;
};

struct FamilyReport {
    WeightMultiset weights;
    Statistic stat = Statistic::alpha;
    std::size_t family_size = 0;
    double max_value = 0.0;
    double min_value = 0.0;
    std::vector<FamilyMember> argmax;
    std::vector<FamilyMember> argmin;
    /// Relative gap from the extreme value to the nearest non-extreme
    /// value; +inf when every member is extreme.
    double max_margin = 0.0;
    double min_margin = 0.0;
    std::vector<PathLayout> polarized;
    /// α of each polarized layout, in `polarized` order.
    std::vector<double> polarized_values;
    /// Failed extremal checks, human-readable. Empty when all hold.
    std::vector<std::string> violations;
};

/// Scores every member of T_W with the forest-formula statistic and
/// records the extremal checks:
///   alpha: argmax set == polarized set, one shared α, argmin == {S_W}
///          with a strict margin;
///   kappa: every argmax is a path, argmin == {S_W} with a strict margin.
/// `tie_tol` is the relative tolerance that decides membership in argmax
/// and argmin.
FamilyReport scan_family(const WeightMultiset& w, Statistic stat, double tie_tol = 1e-10);

/// scan_family, throwing ViolationError when any check fails.
FamilyReport extremal_scan(const WeightMultiset& w, Statistic stat, double tie_tol = 1e-10);

/// J(ω) = Σ_i (Σ_{j<i} ω_j)(Σ_{k>i} ω_k) / ω_i. GuardError on a
/// non-positive weight.
double path_kappa_objective(std::span<const double> weights_in_order);

/// Closed forms for a weighted path, S = Σ ω_i, n = m + 1:
///   α(P) = (2S / n²) Σ_i i (n - i) / ω_i
///   κ(P) = (4 J(ω) + (2n - 3) S) / (2S)
double path_alpha_closed_form(std::span<const double> weights_in_order);
double path_kappa_closed_form(std::span<const double> weights_in_order);

struct PathAssignment {
    PathLayout layout;
    double objective = 0.0;  // J
    double kappa = 0.0;      // forest formula
};

struct PathSearchResult {
    PathAssignment best;  // oriented()
    std::size_t assignments = 0;
    /// Distinct maximizing layouts up to reversal.
    std::size_t maximizers = 0;
    bool rankings_agree = false;
    std::vector<PathAssignment> all;  // in permutation order
};

/// Largest |W| accepted by best_path_assignment.
inline constexpr std::size_t kMaxPathSearchEdges = 10;

/// Brute force over the distinct permutations of W. Throws ViolationError
/// if ordering by J and ordering by κ ever disagree.
PathSearchResult best_path_assignment(const WeightMultiset& w, double tie_tol = 1e-9);

}  // namespace treewalk
