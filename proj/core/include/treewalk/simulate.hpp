#pragma once

#include "treewalk/graph.hpp"
#include "treewalk/rng.hpp"

#include <cstdint>
#include <vector>

namespace treewalk {

struct WalkEstimate {
    double mean = 0.0;
    double standard_error = 0.0;  // sample stddev / sqrt(trials); 0 for one trial
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Per-vertex cumulative weight arrays; a step draws u ~ U[0, d(u)) and
/// inverts the prefix sums by binary search.
class WalkSampler {
public:
    explicit WalkSampler(const WeightedGraph& g);

    Vertex step(Vertex from, Xorshift64Star& rng) const;

private:
    std::vector<std::vector<double>> prefix_;
    std::vector<std::vector<Vertex>> target_;
};

inline constexpr std::uint64_t kWalkSafetyCap = 1'000'000'000ULL;

/// Monte Carlo estimate of H(from, to). Trial i walks with its own stream
/// seeded by derive_seed(seed, i), so results are bit-identical for a
/// fixed seed. DisconnectedError for disconnected g; ViolationError if a
/// single trial exceeds `step_cap` steps.
WalkEstimate estimate_hitting(const WeightedGraph& g, Vertex from, Vertex to, std::uint64_t trials,
                              std::uint64_t seed, std::uint64_t step_cap = kWalkSafetyCap);

}  // namespace treewalk
