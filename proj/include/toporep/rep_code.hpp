#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toporep/noise.hpp"
#include "toporep/pauli.hpp"
#include "toporep/rng.hpp"

namespace toporep {

// Schedule for one encoded CZ between two length-n repetition blocks:
// n rounds of n parallel physical CZ gates, n^2 cross-block pairs in total.
// Round t pairs qubit i of block A with qubit (i+t) mod n of block B, so no
// qubit is idle within a round and every pair occurs exactly once.
struct CzSchedule {
    std::uint32_t n = 0;
    // rounds[t] lists (rep index in A, rep index in B).
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rounds;
};

inline CzSchedule encoded_cz_schedule(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("encoded_cz_schedule: n must be >= 1");
    CzSchedule schedule;
    schedule.n = n;
    schedule.rounds.resize(n);
    for (std::uint32_t t = 0; t < n; ++t) {
        schedule.rounds[t].reserve(n);
        for (std::uint32_t i = 0; i < n; ++i)
            schedule.rounds[t].emplace_back(i, (i + t) % n);
    }
    return schedule;
}

// Applies one noisy encoded CZ between the blocks starting at flat indices
// block_a and block_b. Gate noise follows every physical CZ; there is no
// idle noise between rounds.
inline void apply_encoded_cz(PauliFrame& frame, std::size_t block_a, std::size_t block_b,
                             const CzSchedule& schedule, const NoiseModel& noise, Rng& rng) {
    const std::uint32_t n = schedule.n;
    if (block_a < block_b + n && block_b < block_a + n)
        throw std::invalid_argument("apply_encoded_cz: blocks overlap");
    for (const auto& round : schedule.rounds) {
        for (const auto& [i, j] : round) {
            const std::size_t qa = block_a + i;
            const std::size_t qb = block_b + j;
            frame.apply_cz(qa, qb);
            if (noise.p > 0.0) {
                auto [ea, eb] = sample_cz_noise(noise, rng);
                if (ea != Pauli::I) frame.apply_pauli(qa, ea);
                if (eb != Pauli::I) frame.apply_pauli(qb, eb);
            }
        }
    }
}

// Majority-vote readout of one repetition block. For even n a split vote is
// a located error: the encoded outcome is unknown and the posterior is 1/2.
struct RepBlockReadout {
    std::vector<std::uint8_t> outcomes;  // per-physical-qubit flip bits
    bool majority_flip = false;
    bool located = false;
    double posterior_flip_prob = 0.0;
};

inline RepBlockReadout majority_vote(const std::vector<std::uint8_t>& outcomes,
                                     bool located_allowed = true) {
    if (outcomes.empty()) throw std::invalid_argument("majority_vote: empty outcomes");
    RepBlockReadout readout;
    readout.outcomes = outcomes;
    std::size_t ones = 0;
    for (auto o : outcomes) ones += (o != 0);
    const std::size_t n = outcomes.size();
    if (2 * ones > n) {
        readout.majority_flip = true;
    } else if (2 * ones < n) {
        readout.majority_flip = false;
    } else {
        if (!located_allowed)
            throw std::invalid_argument("majority_vote: split vote with located_allowed=false");
        readout.located = true;
        readout.majority_flip = false;  // convention: located blocks report 0
        readout.posterior_flip_prob = 0.5;
    }
    return readout;
}

// Bayes posterior that the majority vote is wrong, under i.i.d. outcome
// flips at rate q_phys. Only the size of the minority matters:
//   P(wrong) = q^(n-k) (1-q)^k / (q^(n-k) (1-q)^k + q^k (1-q)^(n-k)),
// with k the minority count. Equals exhaustive enumeration over the two
// flip patterns consistent with the observed agreement pattern.
inline double posterior_flip_prob(const std::vector<std::uint8_t>& outcomes, double q_phys) {
    if (outcomes.empty()) throw std::invalid_argument("posterior_flip_prob: empty outcomes");
    if (q_phys < 0.0 || q_phys >= 0.5)
        throw std::invalid_argument("posterior_flip_prob: q_phys must be in [0, 1/2)");
    const std::size_t n = outcomes.size();
    std::size_t ones = 0;
    for (auto o : outcomes) ones += (o != 0);
    const std::size_t k = ones < n - ones ? ones : n - ones;  // minority count
    if (2 * k == n) return 0.5;
    if (q_phys == 0.0) return 0.0;
    double wrong = 1.0, right = 1.0;
    for (std::size_t i = 0; i < n - k; ++i) wrong *= q_phys, right *= 1.0 - q_phys;
    for (std::size_t i = 0; i < k; ++i) wrong *= 1.0 - q_phys, right *= q_phys;
    return wrong / (wrong + right);
}

}  // namespace toporep
