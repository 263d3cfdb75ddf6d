#pragma once

#include "treewalk/graph.hpp"
#include "treewalk/linalg.hpp"

#include <vector>

namespace treewalk {

/// Row-stochastic P with p(u, v) = ω(uv) / d(u).
struct TransitionMatrix {
    Matrix p;
};

struct StationaryDistribution {
    std::vector<double> pi;
};

/// h(u, v) = expected steps from u to first arrival at v; zero diagonal.
struct HittingMatrix {
    Matrix h;
};

struct ScalarStats {
    double alpha = 0.0;
    double kappa = 0.0;
    double vol = 0.0;
    std::size_t n = 0;
};

/// Requires a connected graph with n >= 2 (DisconnectedError otherwise).
TransitionMatrix transition_matrix(const WeightedGraph& g);

/// π(u) = d(u) / vol(G). The fixed point πᵀP = πᵀ is checked to 1e-10
/// per entry before returning (ViolationError otherwise).
StationaryDistribution stationary(const WeightedGraph& g);

/// One dense LU solve per target v of (I - P) restricted to V \ {v}.
HittingMatrix hitting_matrix(const WeightedGraph& g);
HittingMatrix hitting_matrix(const TransitionMatrix& p);

/// Largest relative residual of h(u,v) = 1 + Σ_x p(u,x) h(x,v), u != v.
double recurrence_residual(const TransitionMatrix& p, const HittingMatrix& h);

/// α(G): mean of H over all n² ordered pairs, the zero diagonal included.
double average_hitting_time(const WeightedGraph& g);
double average_hitting_time(const HittingMatrix& h);

/// Σ_v H(u, v) π(v) for each start u.
std::vector<double> kemeny_by_start(const HittingMatrix& h, const StationaryDistribution& pi);

/// κ(G): mean over starts of kemeny_by_start. Throws ViolationError if
/// the per-start values spread more than 1e-8 relative.
double kemeny(const WeightedGraph& g);
double kemeny(const HittingMatrix& h, const StationaryDistribution& pi);

/// α and κ from a single hitting-matrix solve.
ScalarStats exact_stats(const WeightedGraph& g);

}  // namespace treewalk
