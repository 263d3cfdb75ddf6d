#include "treewalk/forest.hpp"

#include "treewalk/error.hpp"
#include "treewalk/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace treewalk {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

// Visits every k-subset of 0..m-1 in lexicographic order.
void for_each_subset(std::size_t m, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > m) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Components of the acyclic edge set, or nullopt when it has a cycle.
bool acyclic_partition(const WeightedGraph& g, const std::vector<std::size_t>& subset,
                       std::vector<std::vector<Vertex>>* blocks) {
    UnionFind uf(g.vertex_count());
    for (std::size_t i : subset) {
        if (!uf.unite(g.edge(i).u, g.edge(i).v)) return false;
    }
    if (blocks) {
        std::vector<std::size_t> slot(g.vertex_count(), static_cast<std::size_t>(-1));
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            const std::size_t r = uf.find(u);
            if (slot[r] == static_cast<std::size_t>(-1)) {
                slot[r] = blocks->size();
                blocks->emplace_back();
            }
            (*blocks)[slot[r]].push_back(u);
        }
    }
    return true;
}

void require_enumerable(const WeightedGraph& g) {
    if (g.edge_count() > kMaxEnumeratedEdges) {
        throw GuardError("explicit forest enumeration is limited to " +
                         std::to_string(kMaxEnumeratedEdges) + " edges");
    }
}

TwoForestCut make_cut(const WeightedGraph& g, const std::vector<double>& deg,
                      std::vector<std::size_t> kept, std::vector<std::vector<Vertex>> blocks) {
    TwoForestCut cut;
    cut.partition = VertexPartition(g.vertex_count(), std::move(blocks));
    const auto& b0 = cut.partition.block(0);
    const auto& b1 = cut.partition.block(1);
    double vol0 = 0.0, vol1 = 0.0;
    for (Vertex u : b0) vol0 += deg[u];
    for (Vertex u : b1) vol1 += deg[u];
    cut.s_value = static_cast<double>(b0.size()) * static_cast<double>(b1.size());
    cut.v_value = vol0 * vol1;
    cut.weight = subgraph_weight(g, kept);
    cut.kept_edges = std::move(kept);
    return cut;
}

}  // namespace

double tau_determinant(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw GraphError("empty graph");
    if (n == 1) return 1.0;
    Matrix lap(n, n);
    for (const Edge& e : g.edges()) {
        lap(e.u, e.u) += e.w;
        lap(e.v, e.v) += e.w;
        lap(e.u, e.v) -= e.w;
        lap(e.v, e.u) -= e.w;
    }
    try {
        return LuDecomposition(lap.minor(0, 0)).determinant();
    } catch (const NumericalError&) {
        return 0.0;
    }
}

double tau_enumerated(const WeightedGraph& g) {
    require_enumerable(g);
    const std::size_t n = g.vertex_count();
    if (n == 0) throw GraphError("empty graph");
    double total = 0.0;
    for_each_subset(g.edge_count(), n - 1, [&](const std::vector<std::size_t>& s) {
        if (acyclic_partition(g, s, nullptr)) total += subgraph_weight(g, s);
    });
    return total;
}

double tau(const WeightedGraph& g) {
    require_connected(g);
    const double det = tau_determinant(g);
    if (g.edge_count() > kMaxEnumeratedEdges) {
        if (!(det > 0.0)) throw DisconnectedError();
        return det;
    }
    const double enumerated = tau_enumerated(g);
    if (!(enumerated > 0.0)) throw DisconnectedError();
    if (!approx_equal(det, enumerated, 1e-9)) {
        throw ViolationError("matrix-tree determinant disagrees with spanning-tree enumeration");
    }
    return enumerated;
}

std::vector<TwoForestCut> two_forest_cuts(const WeightedGraph& g) {
    require_connected(g);
    const std::size_t n = g.vertex_count();
    if (n < 2) return {};
    const auto deg = degrees(g);
    std::vector<TwoForestCut> cuts;

    if (is_tree(g)) {
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            std::vector<std::size_t> kept;
            for (std::size_t j = 0; j < g.edge_count(); ++j)
                if (j != i) kept.push_back(j);
            std::vector<std::vector<Vertex>> blocks;
            acyclic_partition(g, kept, &blocks);
            cuts.push_back(make_cut(g, deg, std::move(kept), std::move(blocks)));
        }
        return cuts;
    }

    require_enumerable(g);
    for_each_subset(g.edge_count(), n - 2, [&](const std::vector<std::size_t>& s) {
        std::vector<std::vector<Vertex>> blocks;
        if (acyclic_partition(g, s, &blocks)) cuts.push_back(make_cut(g, deg, s, std::move(blocks)));
    });
    return cuts;
}

ForestSums forest_sums(const WeightedGraph& g) {
    ForestSums sums;
    sums.tau = tau(g);
    for (const TwoForestCut& c : two_forest_cuts(g)) {
        sums.s_sum += c.s_value * c.weight;
        sums.v_sum += c.v_value * c.weight;
    }
    return sums;
}

namespace {

// Cut profile with extended-precision volumes. The closed forms below sum
// terms divided by small weights, so rounding in the degrees would
// otherwise dominate differences between nearby trees.
struct WideProfile {
    std::vector<std::size_t> side_size;
    std::vector<long double> side_volume;
    long double vol = 0.0L;
};

WideProfile wide_profile(const WeightedGraph& t) {
    require_tree(t);
    const std::size_t n = t.vertex_count();
    WideProfile prof;
    prof.side_size.assign(t.edge_count(), 0);
    prof.side_volume.assign(t.edge_count(), 0.0L);
    for (const Edge& e : t.edges()) prof.vol += 2.0L * e.w;
    if (n < 2) return prof;

    // Iterative DFS from 0; accumulate subtree size and ambient volume.
    std::vector<Vertex> order;
    std::vector<Vertex> parent(n, static_cast<Vertex>(-1));
    std::vector<std::size_t> parent_edge(n, WeightedGraph::npos);
    std::vector<Vertex> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (const Neighbor& nb : t.neighbors(u)) {
            if (nb.v == parent[u] && parent_edge[u] == nb.edge) continue;
            parent[nb.v] = u;
            parent_edge[nb.v] = nb.edge;
            stack.push_back(nb.v);
        }
    }
    std::vector<std::size_t> size(n, 1);
    std::vector<long double> vol(n, 0.0L);
    for (Vertex u = 0; u < n; ++u) {
        for (const Neighbor& nb : t.neighbors(u)) vol[u] += nb.w;
    }
    for (std::size_t i = order.size(); i-- > 1;) {
        const Vertex u = order[i];
        size[parent[u]] += size[u];
        vol[parent[u]] += vol[u];
        prof.side_size[parent_edge[u]] = size[u];
        prof.side_volume[parent_edge[u]] = vol[u];
    }
    return prof;
}

}  // namespace

TreeCutProfile tree_cut_profile(const WeightedGraph& t) {
    const WideProfile w = wide_profile(t);
    TreeCutProfile prof;
    prof.side_size = w.side_size;
    prof.side_volume.assign(w.side_volume.begin(), w.side_volume.end());
    prof.vol = static_cast<double>(w.vol);
    return prof;
}

double alpha_tree(const WeightedGraph& t) {
    const WideProfile prof = wide_profile(t);
    const std::size_t n = t.vertex_count();
    long double acc = 0.0L;
    for (std::size_t i = 0; i < t.edge_count(); ++i) {
        const long double s = static_cast<long double>(prof.side_size[i]);
        acc += s * (static_cast<long double>(n) - s) / t.edge(i).w;
    }
    return static_cast<double>(prof.vol * acc / static_cast<long double>(n * n));
}

double kappa_tree(const WeightedGraph& t) {
    const WideProfile prof = wide_profile(t);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < t.edge_count(); ++i) {
        const long double v = prof.side_volume[i];
        acc += v * (prof.vol - v) / t.edge(i).w;
    }
    return prof.vol > 0.0L ? static_cast<double>(acc / prof.vol) : 0.0;
}

double alpha_forest(const WeightedGraph& g) {
    require_connected(g);
    if (is_tree(g)) return alpha_tree(g);
    const ForestSums s = forest_sums(g);
    const double n = static_cast<double>(g.vertex_count());
    return 2.0 * g.total_weight() * s.s_sum / (n * n * s.tau);
}

double kappa_forest(const WeightedGraph& g) {
    require_connected(g);
    if (is_tree(g)) return kappa_tree(g);
    const ForestSums s = forest_sums(g);
    return s.v_sum / (2.0 * g.total_weight() * s.tau);
}

}  // namespace treewalk
