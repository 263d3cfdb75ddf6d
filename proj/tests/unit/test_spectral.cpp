#include "treewalk/enumerate.hpp"
#include "treewalk/error.hpp"
#include "treewalk/forest.hpp"
#include "treewalk/spectral.hpp"
#include "treewalk/walk.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace treewalk;

namespace {

bool rel(double a, double b, double tol = 1e-10) { return approx_equal(a, b, tol); }

void check_spectrum(const std::vector<double>& got, const std::vector<double>& want) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-10);
}

}  // namespace

TEST_CASE("hand spectra") {
    const auto p3 = laplacian_spectra(make_unit_path(3));
    check_spectrum(p3.combinatorial, {0, 1, 3});
    check_spectrum(p3.normalized, {0, 1, 2});

    const auto k2 = laplacian_spectra(make_unit_path(2));
    check_spectrum(k2.combinatorial, {0, 2});
    check_spectrum(k2.normalized, {0, 2});

    check_spectrum(laplacian_spectra(make_unit_star(4)).combinatorial, {0, 1, 1, 4});
}

TEST_CASE("spectral alpha and kappa") {
    CHECK(rel(alpha_spectral(make_unit_path(3)), 16.0 / 9.0));
    CHECK(rel(alpha_spectral(make_unit_path(2)), 0.5));
    CHECK(rel(alpha_spectral(make_unit_star(4)), 27.0 / 8.0));
    CHECK(rel(kappa_spectral(make_unit_path(3)), 1.5));
    CHECK(rel(kappa_spectral(make_unit_path(2)), 0.5));
    CHECK(rel(kappa_spectral(make_unit_path(4)), kappa_forest(make_unit_path(4))));
    CHECK(rel(kappa_spectral(make_unit_path(4)), 19.0 / 6.0));
}

TEST_CASE("disconnected input is rejected") {
    CHECK_THROWS_AS(laplacian_spectra(WeightedGraph(3, {{0, 1, 1}})), DisconnectedError);
}

TEST_CASE("property: triple agreement and trace identities on random weighted trees") {
    Xorshift64Star rng(41);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + rng.below(9);
        const WeightedGraph t = random_weighted_tree(rng, n, 0.1, 10.0);
        const SpectrumResult s = laplacian_spectra(t);
        const double vol = 2.0 * t.total_weight();
        CHECK(rel(std::accumulate(s.combinatorial.begin(), s.combinatorial.end(), 0.0), vol, 1e-9));
        CHECK(rel(std::accumulate(s.normalized.begin(), s.normalized.end(), 0.0), static_cast<double>(n), 1e-9));
        CHECK(std::abs(s.combinatorial.front()) <= 1e-9);
        CHECK(s.combinatorial[1] > 0.0);
        CHECK(s.normalized.back() <= 2.0 + 1e-9);

        const ScalarStats ex = exact_stats(t);
        const double a = alpha_spectral(s, vol, n);
        const double k = kappa_spectral(s);
        CHECK(rel(a, ex.alpha, 1e-7));
        CHECK(rel(k, ex.kappa, 1e-7));
        CHECK(rel(a, alpha_tree(t), 1e-7));
        CHECK(rel(k, kappa_tree(t), 1e-7));
    }
}

TEST_CASE("tiny spectral gap is still excluded by index") {
    // two heavy clusters joined by a feather-light edge
    const WeightedGraph g(4, {{0, 1, 10.0}, {1, 2, 1e-4}, {2, 3, 10.0}});
    const SpectrumResult s = laplacian_spectra(g);
    CHECK(s.combinatorial[1] < 1e-3);
    CHECK(rel(alpha_spectral(g), exact_stats(g).alpha, 1e-7));
    CHECK(rel(kappa_spectral(g), exact_stats(g).kappa, 1e-7));
}
