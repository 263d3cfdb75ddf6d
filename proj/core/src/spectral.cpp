#include "treewalk/spectral.hpp"

#include "treewalk/error.hpp"

#include <cmath>

namespace treewalk {

Matrix combinatorial_laplacian(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    Matrix lap(n, n);
    for (const Edge& e : g.edges()) {
        lap(e.u, e.u) += e.w;
        lap(e.v, e.v) += e.w;
        lap(e.u, e.v) -= e.w;
        lap(e.v, e.u) -= e.w;
    }
    return lap;
}

Matrix normalized_laplacian(const WeightedGraph& g) {
    const auto d = degrees(g);
    Matrix lap = combinatorial_laplacian(g);
    for (std::size_t i = 0; i < lap.rows(); ++i) {
        if (!(d[i] > 0.0)) throw GraphError("normalized Laplacian needs positive degrees");
        for (std::size_t j = 0; j < lap.cols(); ++j) lap(i, j) /= std::sqrt(d[i] * d[j]);
    }
    return lap;
}

namespace {

std::vector<double> checked_spectrum(const Matrix& m, double upper) {
    const SymmetricEigen eig = jacobi_eigen(m);
    if (max_eigen_residual(m, eig) > 1e-9 * m.norm()) {
        throw NumericalError("eigenpair residual above 1e-9 ||M||");
    }
    const auto& v = eig.values;
    if (std::abs(v.front()) > 1e-9) throw ViolationError("Laplacian bottom eigenvalue is not 0");
    if (v.size() > 1 && !(v[1] > 0.0)) throw ViolationError("Laplacian spectral gap is not positive");
    if (upper > 0.0 && v.back() > upper + 1e-9) {
        throw ViolationError("normalized Laplacian eigenvalue above 2");
    }
    return v;
}

}  // namespace

SpectrumResult laplacian_spectra(const WeightedGraph& g) {
    if (g.vertex_count() == 0) throw GraphError("empty graph");
    require_connected(g);
    return SpectrumResult{checked_spectrum(combinatorial_laplacian(g), 0.0),
                          checked_spectrum(normalized_laplacian(g), 2.0)};
}

double alpha_spectral(const SpectrumResult& s, double vol, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 1; i < s.combinatorial.size(); ++i) acc += 1.0 / s.combinatorial[i];
    return vol / static_cast<double>(n) * acc;
}

double alpha_spectral(const WeightedGraph& g) {
    return alpha_spectral(laplacian_spectra(g), 2.0 * g.total_weight(), g.vertex_count());
}

double kappa_spectral(const SpectrumResult& s) {
    double acc = 0.0;
    for (std::size_t i = 1; i < s.normalized.size(); ++i) acc += 1.0 / s.normalized[i];
    return acc;
}

double kappa_spectral(const WeightedGraph& g) {
    return kappa_spectral(laplacian_spectra(g));
}

}  // namespace treewalk
