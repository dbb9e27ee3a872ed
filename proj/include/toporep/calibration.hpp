#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "toporep/lattice.hpp"
#include "toporep/noise.hpp"
#include "toporep/prep_circuit.hpp"
#include "toporep/rng.hpp"

namespace toporep {

// Empirical per-qubit X-measurement flip rate, by position class, estimated
// by running the full noisy preparation circuit and comparing outcomes
// against the noiseless circuit. This is the i.i.d. rate behind the Bayes
// posterior; correlations within a block are deliberately ignored there.
//
// Uses its own stream purpose so the estimate is independent of the trial
// noise drawn under the same master seed.
inline CalibrationTable calibrate_flip_rate(const LatticeGeometry& geometry,
                                            const PrepSchedule& schedule, std::uint32_t n,
                                            const NoiseModel& noise,
                                            std::uint64_t calibration_trials,
                                            std::uint64_t master_seed) {
    if (calibration_trials < 1000)
        throw std::invalid_argument("calibrate_flip_rate: need at least 10^3 trials");
    noise.validate();

    CalibrationTable table;
    table.trials = calibration_trials;
    if (noise.p == 0.0) return table;  // exactly zero, no sampling needed

    std::array<std::uint64_t, LatticeGeometry::kNumPositionClasses> flips{};
    std::array<std::uint64_t, LatticeGeometry::kNumPositionClasses> measurements{};
    const CalibrationTable no_soft_info{};  // posteriors unused here

    for (std::uint64_t trial = 0; trial < calibration_trials; ++trial) {
        Rng rng(master_seed, StreamPurpose::calibration, trial);
        const PrepResult result =
            run_preparation(geometry, schedule, n, noise, no_soft_info, rng);
        for (std::uint32_t cq = 0; cq < geometry.num_cluster_qubits(); ++cq) {
            const std::uint32_t cls = geometry.position_class(cq);
            for (auto outcome : result.readouts[cq].outcomes) {
                flips[cls] += outcome;
                ++measurements[cls];
            }
        }
    }

    std::uint64_t total_flips = 0;
    for (std::uint32_t cls = 0; cls < LatticeGeometry::kNumPositionClasses; ++cls) {
        table.q_hat[cls] =
            static_cast<double>(flips[cls]) / static_cast<double>(measurements[cls]);
        total_flips += flips[cls];
    }
    if (total_flips == 0)
        throw std::runtime_error(
            "calibrate_flip_rate: no flips observed at p > 0; increase calibration_trials");
    return table;
}

}  // namespace toporep
