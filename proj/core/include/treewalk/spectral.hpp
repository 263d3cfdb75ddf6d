#pragma once

#include "treewalk/graph.hpp"
#include "treewalk/linalg.hpp"

#include <vector>

namespace treewalk {

/// L = D - A.
Matrix combinatorial_laplacian(const WeightedGraph& g);
/// D^{-1/2} L D^{-1/2}; requires every degree positive.
Matrix normalized_laplacian(const WeightedGraph& g);

struct SpectrumResult {
    std::vector<double> combinatorial;  // ascending, λ0 ≈ 0
    std::vector<double> normalized;     // ascending, μ0 ≈ 0, all in [0, 2]
};

/// Both spectra via cyclic Jacobi. Each eigenpair is checked to
/// ||Mx - θx|| <= 1e-9 ||M|| (NumericalError otherwise), and the basic
/// spectral facts (zero bottom eigenvalue, positive gap, [0,2] range) are
/// enforced as ViolationError.
SpectrumResult laplacian_spectra(const WeightedGraph& g);

/// α = (vol / n) Σ_{i>=1} 1/λ_i. The zero eigenvalue is dropped by index.
double alpha_spectral(const WeightedGraph& g);
double alpha_spectral(const SpectrumResult& s, double vol, std::size_t n);

/// κ = Σ_{i>=1} 1/μ_i.
double kappa_spectral(const WeightedGraph& g);
double kappa_spectral(const SpectrumResult& s);

}  // namespace treewalk
