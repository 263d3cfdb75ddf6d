#pragma once

#include <cstdint>

namespace treewalk {

/// SplitMix64 step: advances `state` and returns the mixed output.
/// Used for seeding and for deriving per-trial streams.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Stream seed for trial `index` under master `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
    return splitmix64(s);
}

/// xorshift64* (Vigna 2014): state ^= state >> 12; ^= << 25; ^= >> 27;
/// output state * 0x2545F4914F6CDD1D. The state is never zero.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed) noexcept {
        std::uint64_t s = seed;
        state_ = splitmix64(s);
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next_u64() noexcept {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [0, bound), bound > 0. Rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace treewalk
