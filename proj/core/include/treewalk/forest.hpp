#pragma once

#include "treewalk/graph.hpp"

#include <cstddef>
#include <vector>

namespace treewalk {

/// A spanning 2-forest F of g.
struct TwoForestCut {
    std::vector<std::size_t> kept_edges;  // indices into g.edges()
    VertexPartition partition;            // exactly two blocks
    double s_value = 0.0;                 // |T1| |T2|
    double v_value = 0.0;                 // vol_G(T1) vol_G(T2), ambient degrees
    double weight = 0.0;                  // ω(F)
};

struct ForestSums {
    double tau = 0.0;    // Σ over spanning trees of ω(T)
    double s_sum = 0.0;  // Σ over 2-forests of S(F) ω(F)
    double v_sum = 0.0;  // Σ over 2-forests of V_G(F) ω(F)
};

/// Largest edge count for which subsets are enumerated explicitly.
inline constexpr std::size_t kMaxEnumeratedEdges = 20;

/// Weighted matrix-tree determinant of the reduced Laplacian.
double tau_determinant(const WeightedGraph& g);

/// Σ ω(T) by explicit enumeration of (n-1)-edge acyclic subsets.
/// GuardError when |E| > kMaxEnumeratedEdges.
double tau_enumerated(const WeightedGraph& g);

/// τ(G). Both routes run when |E| <= kMaxEnumeratedEdges and must agree
/// to 1e-9 relative (ViolationError). DisconnectedError when τ = 0.
double tau(const WeightedGraph& g);

/// All spanning 2-forests. For a tree, one cut T \ e per edge in edge
/// order; otherwise brute force over (n-2)-edge subsets (guarded).
std::vector<TwoForestCut> two_forest_cuts(const WeightedGraph& g);

ForestSums forest_sums(const WeightedGraph& g);

/// α = vol · s_sum / (n² τ). Trees use Σ_e S(T\e)/ω(e) directly.
double alpha_forest(const WeightedGraph& g);

/// κ = v_sum / (vol τ). Trees use Σ_e V_T(T\e)/ω(e) directly.
double kappa_forest(const WeightedGraph& g);

/// Per-edge data of a tree: removing edge i splits off a side of
/// `side_size[i]` vertices with ambient volume `side_volume[i]`.
struct TreeCutProfile {
    std::vector<std::size_t> side_size;
    std::vector<double> side_volume;
    double vol = 0.0;
};

/// O(n) subtree sweep. GraphError if t is not a tree.
TreeCutProfile tree_cut_profile(const WeightedGraph& t);

double alpha_tree(const WeightedGraph& t);
double kappa_tree(const WeightedGraph& t);

}  // namespace treewalk
