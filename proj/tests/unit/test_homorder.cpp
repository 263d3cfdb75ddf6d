#include "oracles.hpp"

#include "treewalk/canonical.hpp"
#include "treewalk/enumerate.hpp"
#include "treewalk/error.hpp"
#include "treewalk/forest.hpp"
#include "treewalk/homorder.hpp"

#include <doctest.h>

#include <set>

using namespace treewalk;

namespace {

SimpleGraph path_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph(n, e, "P" + std::to_string(n));
}

}  // namespace

TEST_CASE("simple graph validation") {
    const std::vector<std::pair<Vertex, Vertex>> loop{{0, 0}};
    CHECK_THROWS_AS(SimpleGraph(2, loop), GraphError);
    const std::vector<std::pair<Vertex, Vertex>> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(SimpleGraph(2, dup), GraphError);
    const std::vector<std::pair<Vertex, Vertex>> range{{0, 2}};
    CHECK_THROWS_AS(SimpleGraph(2, range), GraphError);
    const SimpleGraph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.adjacent(3, 0));
}

TEST_CASE("hom counts match brute force on small pairs") {
    const auto corpus = connected_graph_corpus(1, 4);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& t : enumerate_free_trees(n)) {
            for (const auto& g : corpus) CHECK(hom_count(t, g) == oracle::hom_brute_force(t, g));
        }
    }
}

TEST_CASE("hom counts into complete graphs") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& t : enumerate_free_trees(n)) {
            for (std::uint64_t k = 1; k <= 5; ++k) {
                CHECK(hom_count(t, complete_graph(k)) == k * oracle::ipow(k - 1, n - 1));
            }
        }
    }
    CHECK(hom_count(make_unit_path(3), complete_graph(3)) == 12);
}

TEST_CASE("trivial targets") {
    const WeightedGraph edge = make_unit_path(2);
    for (const auto& g : connected_graph_corpus(2, 5)) CHECK(hom_count(edge, g) == 2 * g.edge_count());
    const SimpleGraph point(1, {});
    CHECK(hom_count(make_unit_star(5), point) == 0);
    CHECK(hom_count(make_unit_path(1), point) == 1);
    const WeightedGraph cycle(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    CHECK_THROWS_AS(hom_count(cycle, complete_graph(3)), GraphError);
}

TEST_CASE("hom counts are invariant under relabeling") {
    Xorshift64Star rng(5);
    const auto corpus = connected_graph_corpus(3, 5);
    for (int i = 0; i < 20; ++i) {
        const WeightedGraph t = random_weighted_tree(rng, 7, 1.0, 1.0);
        std::vector<Vertex> perm(7);
        for (Vertex v = 0; v < 7; ++v) perm[v] = (v * 3 + i) % 7;
        const WeightedGraph u = relabeled(t, perm);
        for (const auto& g : corpus) CHECK(hom_count(t, g) == hom_count(u, g));
    }
}

TEST_CASE("hom counts ignore weights and report overflow") {
    const double w[] = {2, 0.5};
    CHECK(hom_count(make_path(w), complete_graph(4)) == 36);
    // the center of the target alone contributes 39^20
    CHECK_THROWS_AS(hom_count(make_unit_star(21), SimpleGraph::from(make_unit_star(40))), NumericalError);
}

TEST_CASE("connected graph corpus") {
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
    for (std::size_t n = 1; n <= 6; ++n) CHECK(connected_graph_corpus(n, n).size() == expected[n - 1]);
    const auto corpus = connected_graph_corpus(2, 5);
    CHECK(corpus.size() == 30);
    CHECK(corpus.front().id() == "g2_0");
    std::set<std::string> ids;
    for (const auto& g : corpus) {
        ids.insert(g.id());
        CHECK(is_connected(WeightedGraph(g.vertex_count(), [&] {
            std::vector<Edge> e;
            for (auto [u, v] : g.edges()) e.push_back({u, v, 1.0});
            return e;
        }())));
    }
    CHECK(ids.size() == corpus.size());
    // pairwise non-isomorphic on 4 vertices
    const auto four = connected_graph_corpus(4, 4);
    for (std::size_t i = 0; i < four.size(); ++i) {
        for (std::size_t j = i + 1; j < four.size(); ++j) {
            std::vector<Edge> a, b;
            for (auto [u, v] : four[i].edges()) a.push_back({u, v, 1.0});
            for (auto [u, v] : four[j].edges()) b.push_back({u, v, 1.0});
            CHECK_FALSE(oracle::isomorphic_brute_force(WeightedGraph(4, a), WeightedGraph(4, b)));
        }
    }
    CHECK_THROWS_AS(connected_graph_corpus(2, 7), GuardError);
}

TEST_CASE("corpus dominance verdicts") {
    const WeightedGraph p4 = make_unit_path(4);
    const WeightedGraph s4 = make_unit_star(4);
    const std::vector<SimpleGraph> corpus{complete_graph(2), complete_graph(3), path_graph(3)};
    for (const auto& g : corpus) {
        CHECK(hom_count(p4, g) == oracle::hom_brute_force(p4, g));
        CHECK(hom_count(s4, g) == oracle::hom_brute_force(s4, g));
    }
    // P4 into P3 gives 8 walks of length 3; the star gives the sum of cubed degrees, 10
    const HomComparison c = corpus_dominates(s4, p4, corpus);
    CHECK(c.verdict == HomVerdict::dominates);
    REQUIRE(c.witnesses.size() == 1);
    CHECK(c.witnesses[0].graph == 2);
    CHECK(c.witnesses[0].first == 10);
    CHECK(c.witnesses[0].second == 8);
    CHECK(corpus_dominates(p4, s4, corpus).verdict == HomVerdict::dominated);
    CHECK(corpus_dominates(p4, p4, corpus).verdict == HomVerdict::equal);
    CHECK_THROWS_AS(corpus_dominates(p4, make_unit_path(5), corpus), GraphError);

    // an edgeless target separates nothing
    const SimpleGraph g0(2, {}, "empty2");
    const std::vector<SimpleGraph> mixed{g0};
    CHECK(corpus_dominates(p4, s4, mixed).verdict == HomVerdict::equal);
    CHECK(to_string(HomVerdict::incomparable) == "incomparable");
}

TEST_CASE("conjecture scans on small sizes") {
    const auto corpus = connected_graph_corpus(2, 5);
    const HomDominanceReport r3 = conjecture_scan(3, corpus);
    CHECK(r3.trees.size() == 1);
    CHECK(r3.pairs.empty());
    CHECK(r3.violations.empty());

    const HomDominanceReport r4 = conjecture_scan(4, corpus);
    REQUIRE(r4.pairs.size() == 1);
    CHECK(r4.violations.empty());
    CHECK(r4.corpus_ids.size() == 30);

    HomDominanceReport r6 = conjecture_scan(6, corpus);
    CHECK(r6.trees.size() == 6);
    CHECK(r6.pairs.size() == 15);
    for (std::size_t i = 0; i < r6.trees.size(); ++i) {
        CHECK(approx_equal(r6.alpha[i], alpha_tree(tree_from_canonical(r6.trees[i])), 1e-12));
    }
    CHECK_THROWS_AS(conjecture_scan(9, corpus), GuardError);
}

TEST_CASE("the five-vertex corpus cannot separate the spiders (3,1,1) and (2,2,1)") {
    // spider with legs 3,1,1 and spider with legs 2,2,1
    const WeightedGraph s311(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}, {4, 5, 1}});
    const WeightedGraph s221(6, {{0, 1, 1}, {0, 2, 1}, {2, 3, 1}, {0, 4, 1}, {4, 5, 1}});
    CHECK(corpus_dominates(s311, s221, connected_graph_corpus(2, 5)).verdict == HomVerdict::dominates);

    // found by an independent search over all graphs on six vertices
    const std::vector<std::pair<Vertex, Vertex>> e{{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}};
    const SimpleGraph g(6, e);
    CHECK(hom_count(s311, g) == 968);
    CHECK(hom_count(s221, g) == 970);
    CHECK(oracle::hom_brute_force(s311, g) == 968);
    CHECK(oracle::hom_brute_force(s221, g) == 970);

    HomDominanceReport r = conjecture_scan(6, connected_graph_corpus(2, 5));
    REQUIRE(r.violations.size() == 1);
    const ConjectureViolation& v = r.violations[0];
    CHECK(r.trees[v.dominant] == canonical_form(s311));
    CHECK(r.trees[v.dominated] == canonical_form(s221));
    CHECK(v.alpha_dominant > v.alpha_dominated);
    CHECK_FALSE(v.corpus_false_positive);
    refine_violations(r, connected_graph_corpus(2, 6));
    CHECK(r.violations[0].corpus_false_positive);
}
