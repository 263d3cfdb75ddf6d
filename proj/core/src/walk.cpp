#include "treewalk/walk.hpp"

#include "treewalk/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace treewalk {

namespace {

void require_walkable(const WeightedGraph& g) {
    if (g.vertex_count() < 2) throw GraphError("random walk needs at least two vertices");
    require_connected(g);
}

}  // namespace

TransitionMatrix transition_matrix(const WeightedGraph& g) {
    require_walkable(g);
    const std::size_t n = g.vertex_count();
    TransitionMatrix t{Matrix(n, n)};
    for (Vertex u = 0; u < n; ++u) {
        const double d = degree(g, u);
        for (const Neighbor& nb : g.neighbors(u)) t.p(u, nb.v) = nb.w / d;
    }
    return t;
}

StationaryDistribution stationary(const WeightedGraph& g) {
    require_walkable(g);
    const std::size_t n = g.vertex_count();
    const auto d = degrees(g);
    const double vol = std::accumulate(d.begin(), d.end(), 0.0);
    StationaryDistribution s{std::vector<double>(n)};
    for (Vertex u = 0; u < n; ++u) s.pi[u] = d[u] / vol;

    const TransitionMatrix t = transition_matrix(g);
    for (Vertex v = 0; v < n; ++v) {
        double acc = 0.0;
        for (Vertex u = 0; u < n; ++u) acc += s.pi[u] * t.p(u, v);
        if (std::abs(acc - s.pi[v]) > 1e-10) {
            throw ViolationError("stationary fixed point violated");
        }
    }
    return s;
}

HittingMatrix hitting_matrix(const TransitionMatrix& t) {
    const std::size_t n = t.p.rows();
    HittingMatrix out{Matrix(n, n)};
    std::vector<Vertex> rest;
    rest.reserve(n - 1);
    for (Vertex target = 0; target < n; ++target) {
        rest.clear();
        for (Vertex u = 0; u < n; ++u)
            if (u != target) rest.push_back(u);
        const std::size_t m = rest.size();
        Matrix a(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) a(i, j) = -t.p(rest[i], rest[j]);
            a(i, i) += 1.0;
        }
        std::vector<double> x;
        try {
            x = LuDecomposition(std::move(a)).solve(std::vector<double>(m, 1.0));
        } catch (const NumericalError&) {
            throw NumericalError("singular hitting-time system (disconnected graph?)");
        }
        for (std::size_t i = 0; i < m; ++i) out.h(rest[i], target) = x[i];
    }
    return out;
}

HittingMatrix hitting_matrix(const WeightedGraph& g) {
    return hitting_matrix(transition_matrix(g));
}

double recurrence_residual(const TransitionMatrix& t, const HittingMatrix& h) {
    const std::size_t n = t.p.rows();
    double worst = 0.0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            double rhs = 1.0;
            for (Vertex x = 0; x < n; ++x) rhs += t.p(u, x) * h.h(x, v);
            worst = std::max(worst, relative_difference(h.h(u, v), rhs));
        }
    }
    return worst;
}

double average_hitting_time(const HittingMatrix& h) {
    const std::size_t n = h.h.rows();
    double s = 0.0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) s += h.h(u, v);
    return s / static_cast<double>(n * n);
}

double average_hitting_time(const WeightedGraph& g) {
    return average_hitting_time(hitting_matrix(g));
}

std::vector<double> kemeny_by_start(const HittingMatrix& h, const StationaryDistribution& pi) {
    const std::size_t n = h.h.rows();
    std::vector<double> k(n, 0.0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) k[u] += h.h(u, v) * pi.pi[v];
    return k;
}

double kemeny(const HittingMatrix& h, const StationaryDistribution& pi) {
    const auto k = kemeny_by_start(h, pi);
    const double mean = std::accumulate(k.begin(), k.end(), 0.0) / static_cast<double>(k.size());
    for (double x : k) {
        if (std::abs(x - mean) > 1e-8 * std::abs(mean)) {
            throw ViolationError("Kemeny constant depends on the start vertex beyond 1e-8");
        }
    }
    return mean;
}

double kemeny(const WeightedGraph& g) {
    return kemeny(hitting_matrix(g), stationary(g));
}

ScalarStats exact_stats(const WeightedGraph& g) {
    const HittingMatrix h = hitting_matrix(g);
    const StationaryDistribution pi = stationary(g);
    return ScalarStats{average_hitting_time(h), kemeny(h, pi), 2.0 * g.total_weight(),
                       g.vertex_count()};
}

}  // namespace treewalk
