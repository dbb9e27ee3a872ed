#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "toporep/lattice.hpp"
#include "toporep/noise.hpp"
#include "toporep/pauli.hpp"
#include "toporep/rep_code.hpp"
#include "toporep/rng.hpp"

namespace toporep {

// Per-position-class physical X-measurement flip rates, estimated by
// calibrate_flip_rate. q_hat[k] feeds the Bayes posterior of every block in
// class k. All zeros is exact for p = 0.
struct CalibrationTable {
    std::array<double, LatticeGeometry::kNumPositionClasses> q_hat{};
    std::uint64_t trials = 0;
};

struct PrepResult {
    std::vector<RepBlockReadout> readouts;  // one per cluster qubit
};

namespace detail {

// Hook for tests: Paulis injected on physical qubits at fixed points of the
// schedule. stage 0 = after prep, before any CZ round; stage 1 = after all
// CZ rounds, before measurement noise.
struct Injection {
    int stage = 0;
    std::size_t physical_qubit = 0;
    Pauli pauli = Pauli::I;
};

inline PrepResult run_preparation_impl(const LatticeGeometry& geometry,
                                       const PrepSchedule& schedule, std::uint32_t n,
                                       const NoiseModel& noise, const CalibrationTable& calib,
                                       Rng& rng, const std::vector<Injection>& injections) {
    noise.validate();
    const CzSchedule block_schedule = encoded_cz_schedule(n);
    const BlockLayout layout{n};
    const std::size_t num_physical =
        static_cast<std::size_t>(geometry.num_cluster_qubits()) * n;
    PauliFrame frame(num_physical);

    // Encoded |+> preparation of every block: noisy physical prep only
    // (a fresh frame already is the noiseless |+> record).
    if (noise.p > 0.0 && !noise.fused_init_measure) {
        for (std::size_t q = 0; q < num_physical; ++q) {
            const Pauli e = sample_prep_noise(noise, rng);
            if (e != Pauli::I) frame.apply_pauli(q, e);
        }
    }
    for (const auto& inj : injections)
        if (inj.stage == 0 && inj.pauli != Pauli::I)
            frame.apply_pauli(inj.physical_qubit, inj.pauli);

    // Four encoded-CZ rounds; every face-edge adjacency exactly once.
    for (const auto& round : schedule.rounds)
        for (const auto& [face, edge] : round)
            apply_encoded_cz(frame, layout.block_begin(face), layout.block_begin(edge),
                             block_schedule, noise, rng);

    for (const auto& inj : injections)
        if (inj.stage == 1 && inj.pauli != Pauli::I)
            frame.apply_pauli(inj.physical_qubit, inj.pauli);

    // Encoded X-measurement of every block: per-qubit measurement noise,
    // then majority vote with Bayes soft information.
    PrepResult result;
    result.readouts.resize(geometry.num_cluster_qubits());
    std::vector<std::uint8_t> outcomes(n);
    const double meas_rate = noise.p * noise.meas_scale;
    for (std::uint32_t cq = 0; cq < geometry.num_cluster_qubits(); ++cq) {
        const std::size_t base = layout.block_begin(cq);
        for (std::uint32_t i = 0; i < n; ++i) {
            const std::size_t q = base + i;
            if (meas_rate > 0.0) {
                const Pauli e = sample_meas_noise(noise, rng);
                if (e != Pauli::I) frame.apply_pauli(q, e);
            }
            outcomes[i] = frame.measure_x_flip(q) ? 1 : 0;
        }
        RepBlockReadout readout = majority_vote(outcomes);
        if (!readout.located) {
            // A saturated flip rate carries no vote information; cap just
            // below 1/2 so the posterior stays defined.
            const double q =
                std::min(calib.q_hat[geometry.position_class(cq)], 0.4999);
            readout.posterior_flip_prob = posterior_flip_prob(outcomes, q);
        }
        result.readouts[cq] = std::move(readout);
    }
    return result;
}

}  // namespace detail

// Runs the full noisy concatenated preparation: encoded prep, four encoded
// CZ rounds, encoded X-measurement. Returns per-cluster-qubit readouts.
inline PrepResult run_preparation(const LatticeGeometry& geometry, const PrepSchedule& schedule,
                                  std::uint32_t n, const NoiseModel& noise,
                                  const CalibrationTable& calib, Rng& rng) {
    return detail::run_preparation_impl(geometry, schedule, n, noise, calib, rng, {});
}

}  // namespace toporep
