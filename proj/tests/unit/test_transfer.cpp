#include "treewalk/canonical.hpp"
#include "treewalk/enumerate.hpp"
#include "treewalk/error.hpp"
#include "treewalk/extremal.hpp"
#include "treewalk/forest.hpp"
#include "treewalk/transfer.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace treewalk;

namespace {

bool has_move(const std::vector<TransferMove>& moves, Vertex v1, Vertex v2, Vertex v3) {
    return std::any_of(moves.begin(), moves.end(), [&](const TransferMove& m) {
        return m.v1 == v1 && m.v2 == v2 && m.v3 == v3;
    });
}

}  // namespace

TEST_CASE("legal moves on small unit trees") {
    const WeightedGraph p4 = make_unit_path(4);
    const auto moves = legal_moves(p4, TransferMode::size);
    REQUIRE(has_move(moves, 1, 2, 3));
    const auto& m = *std::find_if(moves.begin(), moves.end(),
                                  [](const TransferMove& x) { return x.v1 == 1 && x.v2 == 2; });
    CHECK(m.t1_stat == 2.0);
    CHECK(m.t2_stat == 1.0);
    const MoveComponents c = move_components(p4, 1, 2, 3);
    CHECK(c.t1 == std::vector<Vertex>{0, 1});
    CHECK(c.t2 == std::vector<Vertex>{2});
    CHECK(c.t3 == std::vector<Vertex>{3});
    // the reversed orientation (v1=3) has |T1| = 1 = |T2|
    CHECK_FALSE(has_move(moves, 3, 2, 1));

    for (TransferMode mode : {TransferMode::size, TransferMode::volume}) {
        CHECK(legal_moves(make_unit_star(4), mode).empty());
        CHECK(legal_moves(make_unit_path(3), mode).empty());
    }
    const WeightedGraph cycle(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    CHECK_THROWS_AS(legal_moves(cycle, TransferMode::size), GraphError);
}

TEST_CASE("apply_move replaces e2 by (v1, v3) with the same weight") {
    const WeightedGraph p4 = make_unit_path(4);
    const TransferMove m{1, 2, 3, TransferMode::size, 2.0, 1.0};
    const WeightedGraph s = apply_move(p4, m);
    CHECK(is_star(s));
    CHECK(s.neighbors(1).size() == 3);

    const double w[] = {5.0, 3.0, 0.5};
    const WeightedGraph p = make_path(w);
    const WeightedGraph t = apply_move(p, m);
    CHECK(t.weight(1, 3) == 0.5);
    CHECK_FALSE(t.has_edge(2, 3));
    CHECK(WeightMultiset::of(t) == WeightMultiset::of(p));

    const TransferMove illegal{3, 2, 1, TransferMode::size, 0, 0};
    CHECK_THROWS_AS(apply_move(p4, illegal), GraphError);
    const TransferMove not_adjacent{0, 2, 3, TransferMode::size, 0, 0};
    CHECK_THROWS_AS(apply_move(p4, not_adjacent), GraphError);
}

TEST_CASE("monotonicity on the path-to-star move") {
    const WeightedGraph p4 = make_unit_path(4);
    const auto [a0, a1] = verify_monotonicity(p4, {1, 2, 3, TransferMode::size, 2, 1});
    CHECK(approx_equal(a0, 15.0 / 4.0, 1e-12));
    CHECK(approx_equal(a1, 27.0 / 8.0, 1e-12));
    const auto [k0, k1] = verify_monotonicity(p4, {1, 2, 3, TransferMode::volume, 2, 0});
    CHECK(approx_equal(k0, 19.0 / 6.0, 1e-12));
    CHECK(approx_equal(k1, 5.0 / 2.0, 1e-12));

    const TransferIdentity id = transfer_identity(p4, {1, 2, 3, TransferMode::size, 2, 1});
    // (4/6)(15/4 - 27/8) = 1/4; (S(T\e1) - S(T'\e1)) / (n w1) = (4 - 3) / 4
    CHECK(approx_equal(id.lhs, 0.25, 1e-12));
    CHECK(approx_equal(id.rhs, 0.25, 1e-12));
}

TEST_CASE("property: legal moves decrease the statistic and satisfy the cut identities") {
    Xorshift64Star rng(1234);
    std::size_t checked = 0;
    for (int i = 0; i < 250; ++i) {
        const WeightedGraph t = random_weighted_tree(rng, 2 + rng.below(9), 0.1, 10.0);
        for (TransferMode mode : {TransferMode::size, TransferMode::volume}) {
            for (const TransferMove& m : legal_moves(t, mode)) {
                CHECK(m.t1_stat > m.t2_stat);
                const auto [before, after] = verify_monotonicity(t, m);
                CHECK(after < before);
                CHECK(transfer_identity(t, m).residual <= 1e-9);
                CHECK(volume_bookkeeping_residual(t, m) <= 1e-12);
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("size and volume legality coincide on simple trees (n <= 8)") {
    for (std::size_t n = 2; n <= 8; ++n) {
        for (const auto& t : enumerate_free_trees(n)) {
            const auto a = legal_moves(t, TransferMode::size);
            const auto b = legal_moves(t, TransferMode::volume);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(a[i].v1 == b[i].v1);
                CHECK(a[i].v2 == b[i].v2);
                CHECK(a[i].v3 == b[i].v3);
                // standalone volumes of unit components are 2(|T|-1)
                CHECK(b[i].t1_stat == 2.0 * (a[i].t1_stat - 1.0));
                CHECK(b[i].t2_stat == 2.0 * (a[i].t2_stat - 1.0));
            }
        }
    }
}

TEST_CASE("Hasse diagrams of simple trees") {
    {
        const auto trees = enumerate_free_trees(4);
        const HasseDiagram d = build_hasse(trees, TransferMode::size);
        CHECK(d.codes.size() == 2);
        REQUIRE(d.covers.size() == 1);
        CHECK(is_path(d.trees[d.covers[0].first]));
        CHECK(is_star(d.trees[d.covers[0].second]));
    }
    {
        const HasseDiagram d = build_hasse(enumerate_free_trees(5), TransferMode::size);
        CHECK(d.codes.size() == 3);
        CHECK(d.covers.size() == 2);  // chain path > spider > star
        REQUIRE(d.maximal().size() == 1);
        REQUIRE(d.minimal().size() == 1);
        CHECK(is_path(d.trees[d.maximal()[0]]));
        CHECK(is_star(d.trees[d.minimal()[0]]));
    }
    {
        const HasseDiagram d = build_hasse(enumerate_free_trees(7), TransferMode::size);
        CHECK(d.codes.size() == 11);
        REQUIRE(d.maximal().size() == 1);
        REQUIRE(d.minimal().size() == 1);
        CHECK(is_path(d.trees[d.maximal()[0]]));
        CHECK(is_star(d.trees[d.minimal()[0]]));
    }
    {
        const HasseDiagram d = build_hasse(enumerate_free_trees(2), TransferMode::size);
        CHECK(d.codes.size() == 1);
        CHECK(d.covers.empty());
    }
}

TEST_CASE("covers are a transitive reduction") {
    const HasseDiagram d = build_hasse(enumerate_free_trees(8), TransferMode::size);
    const std::set<std::pair<std::size_t, std::size_t>> covers(d.covers.begin(), d.covers.end());
    for (auto [a, b] : d.covers) {
        for (auto [c, e] : d.covers) {
            if (c == b) CHECK(covers.count({a, e}) == 0);
        }
    }
    // every cover lowers alpha
    for (auto [hi, lo] : d.covers) CHECK(alpha_tree(d.trees[hi]) > alpha_tree(d.trees[lo]));
}

TEST_CASE("weighted families: maximal elements are paths, minimum is S_W") {
    for (const auto& w : {WeightMultiset({3, 2, 1, 0.5}), WeightMultiset({2, 2, 1, 1}),
                          WeightMultiset({4, 1, 1, 0.5, 0.25})}) {
        const auto family = enumerate_tw(w);
        for (TransferMode mode : {TransferMode::size, TransferMode::volume}) {
            const HasseDiagram d = build_hasse(family, mode);
            std::set<std::size_t> paths;
            for (std::size_t i = 0; i < d.trees.size(); ++i)
                if (is_path(d.trees[i])) paths.insert(i);
            const auto max = d.maximal();
            CHECK(std::set<std::size_t>(max.begin(), max.end()) == paths);
            const auto min = d.minimal();
            REQUIRE(min.size() == 1);
            CHECK(d.codes[min[0]] == canonical_form(star_of(w)));
        }
    }
}

TEST_CASE("Hasse input validation and DOT output") {
    const double a[] = {1, 2};
    const double b[] = {1, 3};
    const std::vector<WeightedGraph> mixed{make_path(a), make_path(b)};
    CHECK_THROWS_AS(build_hasse(mixed, TransferMode::size), GraphError);
    const std::vector<WeightedGraph> dup{make_unit_path(4), make_unit_path(4)};
    CHECK_THROWS_AS(build_hasse(dup, TransferMode::size), GraphError);

    const HasseDiagram d = build_hasse(enumerate_free_trees(4), TransferMode::volume);
    const std::string dot = to_dot(d);
    CHECK(dot == to_dot(build_hasse(enumerate_free_trees(4), TransferMode::volume)));
    CHECK(dot.find("digraph hasse {") == 0);
    CHECK(dot.find("// mode: volume") != std::string::npos);
    CHECK(dot.find("deg: 3,1,1,1") != std::string::npos);
    CHECK(dot.find("deg: 2,2,1,1") != std::string::npos);
    CHECK(dot.find(" -> ") != std::string::npos);
}
