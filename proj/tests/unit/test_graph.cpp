#include "treewalk/enumerate.hpp"
#include "treewalk/error.hpp"
#include "treewalk/graph.hpp"
#include "treewalk/io.hpp"

#include <doctest.h>

using namespace treewalk;

TEST_CASE("parse_graph reads paths") {
    const WeightedGraph p = parse_graph("3\n0 1 1\n1 2 1\n");
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_count() == 2);
    CHECK(is_path(p));

    const WeightedGraph w = parse_graph("# weighted\n3\n0 1 2\n\n1 2 1\n");
    CHECK(w.weight(0, 1) == 2.0);
    CHECK(w.weight(1, 2) == 1.0);
    CHECK(w.weight(0, 2) == 0.0);
}

TEST_CASE("parse_graph reports errors with line numbers") {
    auto line_of = [](std::string_view text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{999};
    };
    CHECK(line_of("2\n0 0 1\n") == 2);               // loop
    CHECK(line_of("3\n0 1 1\n1 0 2\n") == 3);        // duplicate
    CHECK(line_of("3\n0 1 0\n") == 2);               // non-positive
    CHECK(line_of("3\n0 1 -1\n") == 2);
    CHECK(line_of("3\n0 3 1\n") == 2);               // index >= n
    CHECK(line_of("# c\nthree\n") == 2);             // bad n
    CHECK(line_of("3\n0 1\n") == 2);                 // malformed
    CHECK(line_of("3\n0 1 x\n") == 2);
    CHECK(line_of("# only comments\n") == 0);
}

TEST_CASE("WeightedGraph constructor enforces invariants") {
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 0, 1.0}}), GraphError);
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, 1.0}, {1, 0, 1.0}}), GraphError);
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, 0.0}}), GraphError);
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 2, 1.0}}), GraphError);
}

TEST_CASE("degree and volume") {
    const WeightedGraph star = make_unit_star(4);
    CHECK(degree(star, 0) == 3.0);

    const double w[] = {2.0, 1.0};
    const WeightedGraph p = make_path(w);
    CHECK(degree(p, 1) == 3.0);
    const Vertex s12[] = {1, 2};
    const Vertex s2[] = {2};
    CHECK(volume_of(p, s12) == 4.0);
    CHECK(volume_of(p, s2) == 1.0);
    const Vertex all[] = {0, 1, 2};
    CHECK(volume_of(p, all) == 2.0 * p.total_weight());
    // standalone volume of {1,2} only counts the inner edge
    CHECK(induced_volume(p, s12) == 2.0);

    const WeightedGraph isolated(3, {{0, 1, 1.0}});
    CHECK(degree(isolated, 2) == 0.0);
    CHECK_THROWS_AS(degree(isolated, 3), GraphError);
}

TEST_CASE("subgraph_weight") {
    const double w[] = {2.0, 1.0};
    const WeightedGraph p = make_path(w);
    CHECK(subgraph_weight(p, std::span<const std::size_t>{}) == 1.0);
    const std::size_t both[] = {0, 1};
    CHECK(subgraph_weight(p, both) == 2.0);
    const std::pair<Vertex, Vertex> bad[] = {{0, 2}};
    CHECK_THROWS_AS(subgraph_weight(p, bad), GraphError);
    const std::size_t unknown[] = {5};
    CHECK_THROWS_AS(subgraph_weight(p, unknown), GraphError);
    const WeightedGraph unit = make_unit_star(5);
    const std::size_t some[] = {1, 3};
    CHECK(subgraph_weight(unit, some) == 1.0);
}

TEST_CASE("remove_edges_partition") {
    const WeightedGraph p4 = make_unit_path(4);
    {
        const std::pair<Vertex, Vertex> cut[] = {{1, 2}};
        const VertexPartition part = remove_edges_partition(p4, cut);
        REQUIRE(part.block_count() == 2);
        CHECK(part.block(0) == std::vector<Vertex>{0, 1});
        CHECK(part.block(1) == std::vector<Vertex>{2, 3});
    }
    {
        const std::pair<Vertex, Vertex> cut[] = {{0, 1}, {1, 2}};
        const VertexPartition part = remove_edges_partition(p4, cut);
        REQUIRE(part.block_count() == 3);
        CHECK(part.block(0) == std::vector<Vertex>{0});
        CHECK(part.block(1) == std::vector<Vertex>{1});
        CHECK(part.block(2) == std::vector<Vertex>{2, 3});
    }
    {
        const WeightedGraph star = make_unit_star(5);
        const std::pair<Vertex, Vertex> cut[] = {{0, 3}};
        const VertexPartition part = remove_edges_partition(star, cut);
        CHECK(part.size_of_block_containing(3) == 1);
        CHECK(part.size_of_block_containing(0) == 4);
    }
    const std::pair<Vertex, Vertex> absent[] = {{0, 3}};
    CHECK_THROWS_AS(remove_edges_partition(p4, absent), GraphError);
    const WeightedGraph cycle(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
    const std::pair<Vertex, Vertex> one[] = {{0, 1}};
    CHECK_THROWS_AS(remove_edges_partition(cycle, one), GraphError);
}

TEST_CASE("property: handshake, tree volume, k+1 components") {
    Xorshift64Star rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 2 + rng.below(9);
        const WeightedGraph g = random_connected_graph(rng, n, 0.3, 0.1, 10.0);
        double sum = 0.0;
        for (Vertex u = 0; u < n; ++u) sum += degree(g, u);
        CHECK(approx_equal(sum, 2.0 * g.total_weight(), 1e-12));

        const WeightedGraph t = prufer_decode(std::vector<Vertex>(n - 2, rng.below(n)), n);
        std::vector<Vertex> all(n);
        for (Vertex u = 0; u < n; ++u) all[u] = u;
        CHECK(volume_of(t, all) == doctest::Approx(2.0 * static_cast<double>(n - 1)));

        const WeightedGraph rt = random_weighted_tree(rng, n, 0.1, 10.0);
        std::vector<std::pair<Vertex, Vertex>> cut;
        for (const Edge& e : rt.edges())
            if (rng.below(2)) cut.emplace_back(e.u, e.v);
        CHECK(remove_edges_partition(rt, cut).block_count() == cut.size() + 1);
    }
}

TEST_CASE("format_graph sorts edges and round-trips") {
    const WeightedGraph g(4, {{2, 3, 0.25}, {1, 0, 3.0}, {2, 1, 1.0 / 3.0}});
    const std::string text = format_graph(g);
    CHECK(text == "4\n0 1 3\n1 2 0.333333333333\n2 3 0.25\n");
    const WeightedGraph back = parse_graph(text);
    CHECK(format_graph(back) == text);
}

TEST_CASE("connectivity helpers") {
    const WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    CHECK_FALSE(is_connected(split));
    CHECK(components(split).block_count() == 2);
    CHECK_THROWS_AS(require_connected(split), DisconnectedError);
    CHECK(is_star(make_unit_star(5)));
    CHECK_FALSE(is_star(make_unit_path(5)));
    CHECK(is_star(make_unit_path(3)));
    CHECK(is_path(make_unit_path(1)));
}
