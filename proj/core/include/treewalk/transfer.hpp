#pragma once

#include "treewalk/canonical.hpp"
#include "treewalk/graph.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treewalk {

/// Which component statistic decides legality of an edge transfer.
/// `size` compares |T1| > |T2|; `volume` compares vol_{T1}(T1) >
/// vol_{T2}(T2) with each component taken as a standalone graph.
enum class TransferMode { size, volume };

std::string_view to_string(TransferMode mode);
/// Accepts "size" or "volume"; GuardError otherwise.
TransferMode parse_transfer_mode(std::string_view text);

/// Kept edge e1 = (v1, v2), transferred edge e2 = (v2, v3). Applying the
/// move deletes e2 and adds (v1, v3) with weight ω(e2).
struct TransferMove {
    Vertex v1 = 0;
    Vertex v2 = 0;
    Vertex v3 = 0;
    TransferMode mode = TransferMode::size;
    double t1_stat = 0.0;
    double t2_stat = 0.0;
};

/// The three components of T \ {e1, e2}.
struct MoveComponents {
    std::vector<Vertex> t1, t2, t3;
};

/// Relative margin below which t1_stat > t2_stat counts as a tie.
inline constexpr double kLegalityMargin = 1e-12;

MoveComponents move_components(const WeightedGraph& t, Vertex v1, Vertex v2, Vertex v3);

/// Every ordered adjacent pair (e1, e2) whose stats satisfy the strict
/// inequality of `mode`. Ties are illegal. GraphError if t is not a tree.
std::vector<TransferMove> legal_moves(const WeightedGraph& t, TransferMode mode);

/// GraphError when the move is not legal for t.
WeightedGraph apply_move(const WeightedGraph& t, const TransferMove& m);

/// (stat(T), stat(T')) with stat = α for size moves and κ for volume
/// moves. ViolationError unless stat(T') < stat(T) - 1e-10 stat(T).
std::pair<double, double> verify_monotonicity(const WeightedGraph& t, const TransferMove& m);

/// Both sides of the two-forest difference identity for a move:
///   size:   (n/vol)(α(T) - α(T')) = (S(T\e1) - S(T'\e1)) / (n ω1)
///   volume: κ(T) - κ(T') = (V_T(T\e1) - V_T'(T'\e1)) / (vol ω1)
struct TransferIdentity {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // relative
};

TransferIdentity transfer_identity(const WeightedGraph& t, const TransferMove& m);

/// Largest relative residual among the ambient-volume bookkeeping
/// identities of a move (vol_T(T1) = vol_{T1}(T1) + ω1,
/// vol_T(T2 ∪ T3) = vol_{T2}(T2) + ω1 + 2ω2 + vol_{T3}(T3), and the
/// mirrored pair on T').
double volume_bookkeeping_residual(const WeightedGraph& t, const TransferMove& m);

/// Transitive reduction of move reachability over a set of trees.
struct HasseDiagram {
    TransferMode mode = TransferMode::size;
    std::vector<CanonicalForm> codes;  // ascending
    std::vector<WeightedGraph> trees;  // tree_from_canonical(codes[i])
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (greater, smaller), sorted

    std::vector<std::size_t> maximal() const;
    std::vector<std::size_t> minimal() const;
};

/// Largest move-closure explored by build_hasse.
inline constexpr std::size_t kMaxHasseClosure = 50'000;

/// Reachability is the breadth-first closure of legal moves over
/// canonical forms (intermediate trees outside the input set count),
/// restricted to the inputs and transitively reduced. The inputs must be
/// pairwise non-isomorphic and share one weight multiset (GraphError).
HasseDiagram build_hasse(std::span<const WeightedGraph> trees, TransferMode mode);

/// Deterministic DOT: nodes in code order, labelled with the degree
/// sequence and edge-weight sequence; edges point from greater to smaller.
std::string to_dot(const HasseDiagram& d);

}  // namespace treewalk
