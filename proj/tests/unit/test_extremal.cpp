#include "oracles.hpp"

#include "treewalk/canonical.hpp"
#include "treewalk/enumerate.hpp"
#include "treewalk/error.hpp"
#include "treewalk/extremal.hpp"
#include "treewalk/forest.hpp"
#include "treewalk/walk.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace treewalk;

namespace {

// Every distinct permutation filtered by the predicate, merged up to reversal.
std::set<std::vector<double>> polarized_by_filter(const WeightMultiset& w) {
    std::set<std::vector<double>> out;
    std::vector<double> v(w.values().begin(), w.values().end());
    std::sort(v.begin(), v.end());
    do {
        const PathLayout p(v);
        if (p.is_polarized()) {
            const PathLayout o = p.oriented();
            out.emplace(o.weights().begin(), o.weights().end());
        }
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::set<std::vector<double>> as_set(const std::vector<PathLayout>& layouts) {
    std::set<std::vector<double>> out;
    for (const auto& p : layouts) out.emplace(p.weights().begin(), p.weights().end());
    return out;
}

}  // namespace

TEST_CASE("path layouts") {
    const PathLayout p({1, 2, 3, 4, 5});
    CHECK(p.centrality(1) == 1);
    CHECK(p.centrality(3) == 3);
    CHECK(p.centrality(5) == 1);
    CHECK(p.reversed() == PathLayout({5, 4, 3, 2, 1}));
    CHECK(p.oriented() == PathLayout({5, 4, 3, 2, 1}));
    CHECK(is_path(p.to_graph()));
    CHECK_FALSE(p.is_polarized());
    CHECK(PathLayout({3, 1, 0.5, 2}).is_polarized());
    CHECK(PathLayout({3, 0.5, 1, 2}).is_polarized());
    CHECK_FALSE(PathLayout({1, 3, 0.5, 2}).is_polarized());

    const std::vector<Vertex> perm{2, 0, 3, 1};
    const auto layout = path_layout_of(relabeled(PathLayout({4, 1, 2}).to_graph(), perm));
    REQUIRE(layout.has_value());
    CHECK(*layout == PathLayout({4, 1, 2}));
    CHECK_FALSE(path_layout_of(make_unit_star(4)).has_value());
}

TEST_CASE("polarized paths") {
    const WeightMultiset w1({7, 5, 4, 2, 2, 1});
    const auto fig = polarized_paths(w1);
    CHECK(as_set(fig) == polarized_by_filter(w1));
    for (const auto& p : fig) {
        const auto x = p.weights();
        CHECK(std::set<double>{x[0], x[5]} == std::set<double>{7, 5});
        CHECK(std::multiset<double>{x[1], x[4]} == std::multiset<double>{4, 2});
        CHECK(std::multiset<double>{x[2], x[3]} == std::multiset<double>{2, 1});
    }

    CHECK(polarized_paths(WeightMultiset({1, 1, 1})).size() == 1);

    const WeightMultiset w3({3, 2, 1, 0.5});
    CHECK(as_set(polarized_paths(w3)) ==
          std::set<std::vector<double>>{{3, 1, 0.5, 2}, {3, 0.5, 1, 2}});

    for (const auto& w : {WeightMultiset({5, 4, 3, 2, 1}), WeightMultiset({2, 2, 1, 1}),
                          WeightMultiset({9, 1, 1, 1, 0.5, 0.5, 0.2})}) {
        CHECK(as_set(polarized_paths(w)) == polarized_by_filter(w));
        // every polarized layout shares one alpha
        const auto paths = polarized_paths(w);
        const double a0 = alpha_tree(paths.front().to_graph());
        for (const auto& p : paths) CHECK(approx_equal(alpha_tree(p.to_graph()), a0, 1e-10));
    }
    CHECK_THROWS_AS(polarized_paths(WeightMultiset{}), GuardError);
}

TEST_CASE("star_of") {
    CHECK(canonical_form(star_of(WeightMultiset({1, 1, 1}))) == canonical_form(make_unit_star(4)));
    const WeightMultiset w({2, 1});
    CHECK(is_path(star_of(w)));
    const WeightedGraph s = star_of(WeightMultiset({7, 5, 4, 2, 2, 1}));
    CHECK(s.neighbors(0).size() == 6);
    CHECK(s.weight(0, 1) == 7);
    CHECK_THROWS_AS(star_of(WeightMultiset{}), GuardError);
}

TEST_CASE("T_W enumeration") {
    CHECK(enumerate_tw(WeightMultiset({1, 1, 1})).size() == 2);
    CHECK(enumerate_tw(WeightMultiset({2, 1})).size() == 1);
    CHECK(enumerate_tw(WeightMultiset({1, 1, 1, 1})).size() == 3);

    // the two placements on P3 are isomorphic
    const double a[] = {2, 1};
    const double b[] = {1, 2};
    CHECK(oracle::isomorphic_brute_force(make_path(a), make_path(b)));

    for (const auto& w : {WeightMultiset({3, 2, 1, 0.5}), WeightMultiset({2, 2, 1, 1}),
                          WeightMultiset({1, 1, 2, 2, 3})}) {
        const auto x = enumerate_tw(w);
        const auto y = enumerate_tw_labeled(w);
        REQUIRE(x.size() == y.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            CHECK(canonical_form(x[i]) == canonical_form(y[i]));
        for (const auto& t : x) CHECK(WeightMultiset::of(t) == w);
    }
    CHECK_THROWS_AS(enumerate_tw(WeightMultiset(std::vector<double>(9, 1.0))), GuardError);
}

TEST_CASE("extremal scans") {
    {
        const FamilyReport r = extremal_scan(WeightMultiset(std::vector<double>(5, 1.0)), Statistic::alpha);
        CHECK(r.family_size == 6);
        REQUIRE(r.argmax.size() == 1);
        CHECK(r.argmax[0].is_path);
        REQUIRE(r.argmin.size() == 1);
        CHECK(is_star(r.argmin[0].tree));
    }
    {
        const WeightMultiset w({3, 2, 1, 0.5});
        const FamilyReport r = extremal_scan(w, Statistic::alpha);
        CHECK(r.argmax.size() == 2);
        CHECK(r.polarized.size() == 2);
        REQUIRE(r.argmin.size() == 1);
        CHECK(r.argmin[0].code == canonical_form(star_of(w)));
        CHECK(r.min_margin > 0);
        for (const auto& m : r.argmax) CHECK(m.layout->is_polarized());
    }
    {
        const WeightMultiset w({3, 2, 1, 0.5});
        const FamilyReport r = extremal_scan(w, Statistic::kappa);
        for (const auto& m : r.argmax) CHECK(m.is_path);
        const PathSearchResult s = best_path_assignment(w);
        REQUIRE(r.argmax.size() == 1);
        CHECK(*r.argmax[0].layout == s.best.layout);
    }
    {
        const WeightMultiset w({10, 8, 1, 1, 0.1});
        const FamilyReport r = scan_family(w, Statistic::kappa);
        CHECK(r.violations.empty());
        REQUIRE(r.argmax.size() == 1);
        CHECK(r.argmax[0].is_path);
        CHECK_FALSE(r.argmax[0].layout->is_polarized());
    }
}

TEST_CASE("brute-force scan agrees with exact walks on a small family") {
    const WeightMultiset w({2, 1, 0.5});
    const FamilyReport r = scan_family(w, Statistic::kappa);
    for (const auto& t : enumerate_tw(w)) {
        const ScalarStats s = exact_stats(t);
        CHECK(s.kappa <= r.max_value * (1 + 1e-9));
        CHECK(s.kappa >= r.min_value * (1 - 1e-9));
        CHECK(approx_equal(s.alpha, alpha_forest(t), 1e-9));
    }
}

TEST_CASE("path objective and closed forms") {
    const double w1[] = {1, 1};
    const double w2[] = {1, 1, 1};
    const double w3[] = {2, 1, 3};
    CHECK(path_kappa_objective(w1) == 0.0);
    CHECK(path_kappa_objective(w2) == 1.0);
    CHECK(path_kappa_objective(w3) == 6.0);
    const double bad[] = {1, 0, 1};
    CHECK_THROWS_AS(path_kappa_objective(bad), GuardError);

    Xorshift64Star rng(99);
    for (int i = 0; i < 50; ++i) {
        std::vector<double> w;
        const std::size_t m = 1 + rng.below(7);
        for (std::size_t j = 0; j < m; ++j) w.push_back(0.1 + 9.9 * rng.uniform01());
        const WeightedGraph p = make_path(w);
        const ScalarStats s = exact_stats(p);
        CHECK(approx_equal(path_alpha_closed_form(w), s.alpha, 1e-9));
        CHECK(approx_equal(path_kappa_closed_form(w), s.kappa, 1e-9));
    }

    // 2S κ - 4J is constant over every permutation of a fixed multiset
    std::vector<double> v{0.5, 1, 2, 3, 7};
    const double S = 13.5;
    const double n = 6;
    do {
        const double k = kappa_forest(make_path(v));
        CHECK(approx_equal(2 * S * k - 4 * path_kappa_objective(v), (2 * n - 3) * S, 1e-10));
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("best path assignment") {
    const PathSearchResult r = best_path_assignment(WeightMultiset({10, 8, 1, 1, 0.1}));
    CHECK(r.assignments == 60);
    CHECK(r.all.size() == 60);
    CHECK(r.maximizers == 1);
    CHECK(r.rankings_agree);
    CHECK(r.best.layout == PathLayout({10, 0.1, 1, 1, 8}));
    CHECK_FALSE(r.best.layout.is_polarized());

    const PathSearchResult t = best_path_assignment(WeightMultiset({1, 1, 1}));
    CHECK(t.assignments == 1);
    CHECK(t.best.objective == 1.0);

    const PathSearchResult s = best_path_assignment(WeightMultiset({3, 2, 1}));
    CHECK(s.assignments == 6);
    CHECK(s.rankings_agree);
    CHECK_THROWS_AS(best_path_assignment(WeightMultiset(std::vector<double>(11, 1.0))), GuardError);
}

TEST_CASE("statistic names") {
    CHECK(parse_statistic("alpha") == Statistic::alpha);
    CHECK(to_string(Statistic::kappa) == "kappa");
    CHECK_THROWS_AS(parse_statistic("beta"), GuardError);
}
