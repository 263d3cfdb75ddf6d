#include "treewalk/graph.hpp"

#include "treewalk/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace treewalk {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), adj_(n) {
    std::set<std::pair<Vertex, Vertex>> seen;
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u >= n || e.v >= n) {
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint >= n=" + std::to_string(n));
        }
        if (e.u == e.v) {
            throw GraphError("loop at vertex " + std::to_string(e.u));
        }
        if (!(e.w > 0.0) || !std::isfinite(e.w)) {
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has non-positive weight");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.emplace(e.u, e.v).second) {
            throw GraphError("duplicate edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        }
        const std::size_t idx = edges_.size();
        edges_.push_back(e);
        adj_[e.u].push_back({e.v, e.w, idx});
        adj_[e.v].push_back({e.u, e.w, idx});
    }
}

std::size_t WeightedGraph::find_edge(Vertex u, Vertex v) const noexcept {
    if (u >= n_ || v >= n_) return npos;
    const auto& row = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
    for (const Neighbor& nb : row) {
        if (nb.v == other) return nb.edge;
    }
    return npos;
}

double WeightedGraph::weight(Vertex u, Vertex v) const noexcept {
    const std::size_t i = find_edge(u, v);
    return i == npos ? 0.0 : edges_[i].w;
}

double WeightedGraph::total_weight() const noexcept {
    double s = 0.0;
    for (const Edge& e : edges_) s += e.w;
    return s;
}

WeightMultiset::WeightMultiset(std::vector<double> weights) : weights_(std::move(weights)) {
    for (double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw GuardError("weight multiset entries must be positive and finite");
        }
    }
    std::sort(weights_.begin(), weights_.end(), std::greater<>());
}

double WeightMultiset::sum() const noexcept {
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

WeightMultiset WeightMultiset::of(const WeightedGraph& g) {
    std::vector<double> w;
    w.reserve(g.edge_count());
    for (const Edge& e : g.edges()) w.push_back(e.w);
    return WeightMultiset(std::move(w));
}

VertexPartition::VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks)
    : blocks_(std::move(blocks)), owner_(n, static_cast<std::size_t>(-1)) {
    for (auto& b : blocks_) {
        if (b.empty()) throw GraphError("partition has an empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        for (Vertex u : blocks_[i]) {
            if (u >= n) throw GraphError("partition vertex out of range");
            if (owner_[u] != static_cast<std::size_t>(-1)) {
                throw GraphError("partition blocks overlap at vertex " + std::to_string(u));
            }
            owner_[u] = i;
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (owner_[u] == static_cast<std::size_t>(-1)) {
            throw GraphError("partition misses vertex " + std::to_string(u));
        }
    }
}

double degree(const WeightedGraph& g, Vertex u) {
    if (u >= g.vertex_count()) throw GraphError("vertex " + std::to_string(u) + " out of range");
    double d = 0.0;
    for (const Neighbor& nb : g.neighbors(u)) d += nb.w;
    return d;
}

std::vector<double> degrees(const WeightedGraph& g) {
    std::vector<double> d(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) d[u] = degree(g, u);
    return d;
}

double volume_of(const WeightedGraph& g, std::span<const Vertex> s) {
    double vol = 0.0;
    for (Vertex u : s) vol += degree(g, u);
    return vol;
}

double induced_volume(const WeightedGraph& g, std::span<const Vertex> s) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex u : s) in.at(u) = 1;
    double vol = 0.0;
    for (const Edge& e : g.edges()) {
        if (in[e.u] && in[e.v]) vol += 2.0 * e.w;
    }
    return vol;
}

double subgraph_weight(const WeightedGraph& g, std::span<const std::size_t> edge_indices) {
    double w = 1.0;
    for (std::size_t i : edge_indices) {
        if (i >= g.edge_count()) throw GraphError("unknown edge index " + std::to_string(i));
        w *= g.edge(i).w;
    }
    return w;
}

double subgraph_weight(const WeightedGraph& g,
                       std::span<const std::pair<Vertex, Vertex>> edges) {
    double w = 1.0;
    for (auto [u, v] : edges) {
        const std::size_t i = g.find_edge(u, v);
        if (i == WeightedGraph::npos) {
            throw GraphError("unknown edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        w *= g.edge(i).w;
    }
    return w;
}

namespace {

// BFS components, skipping edges flagged in `skip`.
std::vector<std::vector<Vertex>> component_blocks(const WeightedGraph& g,
                                                  const std::vector<char>& skip) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> blocks;
    std::queue<Vertex> q;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        blocks.emplace_back();
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            blocks.back().push_back(u);
            for (const Neighbor& nb : g.neighbors(u)) {
                if (!skip.empty() && skip[nb.edge]) continue;
                if (!seen[nb.v]) {
                    seen[nb.v] = 1;
                    q.push(nb.v);
                }
            }
        }
    }
    return blocks;
}

}  // namespace

VertexPartition components(const WeightedGraph& g) {
    return VertexPartition(g.vertex_count(), component_blocks(g, {}));
}

bool is_connected(const WeightedGraph& g) {
    if (g.vertex_count() == 0) return false;
    return component_blocks(g, {}).size() == 1;
}

bool is_tree(const WeightedGraph& g) {
    return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool is_path(const WeightedGraph& g) {
    if (!is_tree(g)) return false;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (g.neighbors(u).size() > 2) return false;
    }
    return true;
}

bool is_star(const WeightedGraph& g) {
    if (!is_tree(g)) return false;
    const std::size_t n = g.vertex_count();
    if (n <= 2) return true;
    for (Vertex u = 0; u < n; ++u) {
        if (g.neighbors(u).size() == n - 1) return true;
    }
    return false;
}

void require_connected(const WeightedGraph& g) {
    if (!is_connected(g)) throw DisconnectedError();
}

void require_tree(const WeightedGraph& g) {
    if (!is_tree(g)) throw GraphError("input is not a tree");
}

VertexPartition remove_edges_partition(const WeightedGraph& t,
                                       std::span<const std::pair<Vertex, Vertex>> removed) {
    require_tree(t);
    std::vector<char> skip(t.edge_count(), 0);
    for (auto [u, v] : removed) {
        const std::size_t i = t.find_edge(u, v);
        if (i == WeightedGraph::npos) {
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is not in the tree");
        }
        skip[i] = 1;
    }
    return VertexPartition(t.vertex_count(), component_blocks(t, skip));
}

WeightedGraph make_path(std::span<const double> weights_in_order) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < weights_in_order.size(); ++i) {
        edges.push_back({i, i + 1, weights_in_order[i]});
    }
    return WeightedGraph(weights_in_order.size() + 1, std::move(edges));
}

WeightedGraph make_unit_path(std::size_t n) {
    if (n == 0) throw GuardError("path needs at least one vertex");
    return make_path(std::vector<double>(n - 1, 1.0));
}

WeightedGraph make_star(std::span<const double> spoke_weights) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < spoke_weights.size(); ++i) {
        edges.push_back({0, i + 1, spoke_weights[i]});
    }
    return WeightedGraph(spoke_weights.size() + 1, std::move(edges));
}

WeightedGraph make_unit_star(std::size_t n) {
    if (n == 0) throw GuardError("star needs at least one vertex");
    return make_star(std::vector<double>(n - 1, 1.0));
}

WeightedGraph scaled(const WeightedGraph& g, double c) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge& e : edges) e.w *= c;
    return WeightedGraph(g.vertex_count(), std::move(edges));
}

WeightedGraph relabeled(const WeightedGraph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.vertex_count()) throw GraphError("relabeling has wrong length");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.w});
    return WeightedGraph(g.vertex_count(), std::move(edges));
}

std::vector<std::size_t> degree_sequence(const WeightedGraph& g) {
    std::vector<std::size_t> d(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) d[u] = g.neighbors(u).size();
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

}  // namespace treewalk
