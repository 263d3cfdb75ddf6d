#include "treewalk/simulate.hpp"

#include "treewalk/error.hpp"

#include <algorithm>
#include <cmath>

namespace treewalk {

WalkSampler::WalkSampler(const WeightedGraph& g)
    : prefix_(g.vertex_count()), target_(g.vertex_count()) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        double acc = 0.0;
        for (const Neighbor& nb : g.neighbors(u)) {
            acc += nb.w;
            prefix_[u].push_back(acc);
            target_[u].push_back(nb.v);
        }
    }
}

Vertex WalkSampler::step(Vertex from, Xorshift64Star& rng) const {
    const auto& p = prefix_[from];
    const double x = rng.uniform01() * p.back();
    const auto it = std::upper_bound(p.begin(), p.end(), x);
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - p.begin()), p.size() - 1);
    return target_[from][i];
}

WalkEstimate estimate_hitting(const WeightedGraph& g, Vertex from, Vertex to, std::uint64_t trials,
                              std::uint64_t seed, std::uint64_t step_cap) {
    if (trials == 0) throw GuardError("trials must be >= 1");
    if (from >= g.vertex_count() || to >= g.vertex_count()) throw GraphError("vertex out of range");
    require_connected(g);
    const WalkSampler sampler(g);

    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Xorshift64Star rng(derive_seed(seed, t));
        Vertex at = from;
        std::uint64_t steps = 0;
        while (at != to) {
            if (steps == step_cap) throw ViolationError("random walk hit the step safety cap");
            at = sampler.step(at, rng);
            ++steps;
        }
        const double s = static_cast<double>(steps);
        sum += s;
        sum_sq += s * s;
    }
    WalkEstimate est;
    est.trials = trials;
    est.seed = seed;
    const double n = static_cast<double>(trials);
    est.mean = sum / n;
    if (trials > 1) {
        const double var = std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1.0));
        est.standard_error = std::sqrt(var / n);
    }
    return est;
}

}  // namespace treewalk
