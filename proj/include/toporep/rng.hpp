#pragma once

#include <cstdint>

namespace toporep {

// Deterministic per-trial random streams. Each stream is an xoshiro256**
// generator seeded by splitmix64 from (master_seed, purpose, index), so a
// batch reproduces bit-for-bit regardless of execution order or thread count.
//
// Stream purposes keep trial noise and calibration noise statistically
// disjoint under the same master seed.
enum class StreamPurpose : std::uint64_t {
    trial = 0,
    calibration = 1,
    fit_synthetic = 2,
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace detail

class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = detail::splitmix64(sm);
    }

    Rng(std::uint64_t master_seed, StreamPurpose purpose, std::uint64_t index) {
        std::uint64_t sm = master_seed;
        sm = detail::splitmix64(sm) ^ (static_cast<std::uint64_t>(purpose) * 0xd1b54a32d192ed03ULL);
        sm = detail::splitmix64(sm) ^ (index * 0x9e3779b97f4a7c15ULL);
        for (auto& word : state_) word = detail::splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform integer in [0, n). Lemire's multiply-shift without the
    // rejection step; bias is < 2^-32 for the small n used here.
    std::uint32_t uniform_int(std::uint32_t n) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // std::uniform_random_bit_generator interface.
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }
    result_type operator()() { return next_u64(); }

  private:
    std::uint64_t state_[4];
};

}  // namespace toporep
