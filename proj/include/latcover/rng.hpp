#pragma once

#include <cstdint>

namespace latcover {

/// SplitMix64 step; used for seeding and stream derivation.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// xoshiro256** by Blackman & Vigna. Portable and fully reproducible:
/// identical output for identical seeds on every platform. Per-restart
/// streams are a pure function of (seed, stream index).
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    static Xoshiro256StarStar stream(std::uint64_t seed, std::uint64_t stream_index) {
        return Xoshiro256StarStar(seed ^ (0xD1B54A32D192ED03ull * (stream_index + 1)));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound); bound >= 1. Debiased multiply-shift
    /// (Lemire), avoiding std::uniform_int_distribution's
    /// implementation-defined output.
    std::uint64_t below(std::uint64_t bound) {
        while (true) {
            const std::uint64_t x = next();
            const __uint128_t m = static_cast<__uint128_t>(x) * bound;
            const auto low = static_cast<std::uint64_t>(m);
            if (low < bound) {
                const std::uint64_t threshold = (0 - bound) % bound;
                if (low < threshold) continue;
            }
            return static_cast<std::uint64_t>(m >> 64);
        }
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace latcover
