#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace treewalk {

using Vertex = std::size_t;

/// Relative tolerance used by default for floating equality.
inline constexpr double kDefaultRelTol = 1e-9;

inline bool approx_equal(double a, double b, double rel_tol = kDefaultRelTol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel_tol * scale;
}

inline double relative_difference(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

struct Edge {
    Vertex u;
    Vertex v;
    double w;
};

struct Neighbor {
    Vertex v;
    double w;
    std::size_t edge;  // index into WeightedGraph::edges()
};

/// Loopless undirected graph with positive edge weights on vertices
/// 0..n-1. Edges are stored normalized (u < v) in insertion order.
/// Connectivity is not enforced; operations that need it check it.
class WeightedGraph {
public:
    WeightedGraph() = default;
    /// Throws GraphError on a loop, duplicate pair, non-positive or
    /// non-finite weight, or an endpoint >= n.
    WeightedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    std::span<const Neighbor> neighbors(Vertex u) const { return adj_.at(u); }

    /// Index of the edge {u, v}, or npos.
    std::size_t find_edge(Vertex u, Vertex v) const noexcept;
    bool has_edge(Vertex u, Vertex v) const noexcept { return find_edge(u, v) != npos; }
    /// Weight of {u, v}; 0 when absent.
    double weight(Vertex u, Vertex v) const noexcept;

    double total_weight() const noexcept;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
};

/// Multiset of positive reals, kept sorted descending.
class WeightMultiset {
public:
    WeightMultiset() = default;
    /// Throws GuardError for non-positive or non-finite entries.
    explicit WeightMultiset(std::vector<double> weights);

    std::span<const double> values() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    bool empty() const noexcept { return weights_.empty(); }
    double sum() const noexcept;

    /// Multiset of the edge weights of g.
    static WeightMultiset of(const WeightedGraph& g);

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
    std::vector<double> weights_;
};

/// Disjoint blocks covering 0..n-1. Blocks are sorted internally and
/// ordered by their smallest vertex.
class VertexPartition {
public:
    VertexPartition() = default;
    /// Throws GraphError if blocks overlap, are empty, or miss a vertex.
    VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks);

    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::span<const std::vector<Vertex>> blocks() const noexcept { return blocks_; }
    const std::vector<Vertex>& block(std::size_t i) const { return blocks_.at(i); }
    /// Index of the block that holds u.
    std::size_t block_of(Vertex u) const { return owner_.at(u); }
    std::size_t size_of_block_containing(Vertex u) const { return blocks_[block_of(u)].size(); }

    friend bool operator==(const VertexPartition& a, const VertexPartition& b) {
        return a.blocks_ == b.blocks_;
    }

private:
    std::vector<std::vector<Vertex>> blocks_;
    std::vector<std::size_t> owner_;
};

/// d_G(u): sum of weights incident to u.
double degree(const WeightedGraph& g, Vertex u);

/// std::vector of all degrees.
std::vector<double> degrees(const WeightedGraph& g);

/// vol_G(S): degrees are taken in g, not in the induced subgraph.
double volume_of(const WeightedGraph& g, std::span<const Vertex> s);

/// Volume of the subgraph induced by s, viewed as a standalone graph:
/// twice the weight of edges with both ends in s.
double induced_volume(const WeightedGraph& g, std::span<const Vertex> s);

/// Product of edge weights for the given edge indices; 1 when empty.
/// Throws GraphError on an unknown index.
double subgraph_weight(const WeightedGraph& g, std::span<const std::size_t> edge_indices);

/// Same, with edges named by endpoints.
double subgraph_weight(const WeightedGraph& g, std::span<const std::pair<Vertex, Vertex>> edges);

/// Connected components (BFS), as a partition.
VertexPartition components(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);
bool is_tree(const WeightedGraph& g);
/// True when g is a tree whose maximum degree is at most 2.
bool is_path(const WeightedGraph& g);
/// True when g is a tree with a vertex adjacent to every other vertex.
bool is_star(const WeightedGraph& g);

/// Throws DisconnectedError unless g is connected.
void require_connected(const WeightedGraph& g);
/// Throws GraphError unless g is a tree.
void require_tree(const WeightedGraph& g);

/// Components of t after deleting the listed edges (given by endpoints).
/// Deleting k distinct tree edges always yields k+1 blocks.
VertexPartition remove_edges_partition(const WeightedGraph& t,
                                       std::span<const std::pair<Vertex, Vertex>> removed);

/// Path 0-1-...-m with the given weights in order.
WeightedGraph make_path(std::span<const double> weights_in_order);
/// Unit-weight path on n vertices.
WeightedGraph make_unit_path(std::size_t n);
/// Star with center 0 and spokes 0-(i+1) carrying weights[i].
WeightedGraph make_star(std::span<const double> spoke_weights);
WeightedGraph make_unit_star(std::size_t n);

/// Replace every weight by c*w.
WeightedGraph scaled(const WeightedGraph& g, double c);

/// Apply the vertex relabeling u -> perm[u].
WeightedGraph relabeled(const WeightedGraph& g, std::span<const Vertex> perm);

/// Unweighted degree sequence (neighbor counts), sorted descending.
std::vector<std::size_t> degree_sequence(const WeightedGraph& g);

}  // namespace treewalk
