#pragma once
// Deterministic 64-bit PRNG for sample-point generation: xorshift64* with the
// shift triple (12, 25, 27) and multiplier 2685821657736338717, seeded
// through one splitmix64 step (increment 0x9E3779B97F4A7C15, mixers
// 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB) so that seed 0 is usable.
// Identical sequences on every platform; default seed 0.

#include <cstdint>

namespace coxinv {

class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        state_ = z ^ (z >> 31);
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next_u64() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 2685821657736338717ULL;
    }

    // Uniform integer in [lo, hi] via rejection sampling (unbiased).
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t threshold = (-span) % span;  // 2^64 mod span
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v < threshold);
        return lo + static_cast<long>(v % span);
    }

  private:
    std::uint64_t state_;
};

}  // namespace coxinv
