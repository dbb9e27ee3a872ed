#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "toporep/pauli.hpp"
#include "toporep/rng.hpp"

namespace toporep {

enum class NoiseMode { circuit, code_capacity, erasure };

inline std::string to_string(NoiseMode mode) {
    switch (mode) {
        case NoiseMode::circuit: return "circuit";
        case NoiseMode::code_capacity: return "code_capacity";
        case NoiseMode::erasure: return "erasure";
    }
    return "?";
}

inline NoiseMode noise_mode_from_string(const std::string& s) {
    if (s == "circuit") return NoiseMode::circuit;
    if (s == "code_capacity") return NoiseMode::code_capacity;
    if (s == "erasure") return NoiseMode::erasure;
    throw std::invalid_argument("unknown mode: " + s);
}

// Stochastic dephasing-biased error model. Two-qubit gates draw an X-type
// event with total probability p/beta and an independent Z-type event with
// total probability p, each split uniformly over its three two-qubit Paulis.
// Preparation and measurement errors are uniform over {X,Y,Z} at rate p and
// p*meas_scale respectively. With fused_init_measure set, the separate
// preparation error location is removed (one physical init/measure
// operation means one error location).
struct NoiseModel {
    double p = 0.0;
    double beta = 1.0;
    double meas_scale = 1.0;
    bool fused_init_measure = false;
    NoiseMode mode = NoiseMode::circuit;

    void validate() const {
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("NoiseModel: p must be in [0, 1]");
        if (beta < 1.0)
            throw std::invalid_argument("NoiseModel: beta must be >= 1");
        if (meas_scale < 0.0)
            throw std::invalid_argument("NoiseModel: meas_scale must be >= 0");
        if (mode == NoiseMode::circuit && p * (1.0 + 1.0 / beta) > 1.0)
            throw std::invalid_argument(
                "NoiseModel: p*(1 + 1/beta) > 1, two-qubit channel ill-formed");
    }
};

// One noisy CZ: independent X-type and Z-type draws, either or both may fire.
inline std::pair<Pauli, Pauli> sample_cz_noise(const NoiseModel& model, Rng& rng) {
    std::uint8_t xa = 0, xb = 0, za = 0, zb = 0;
    if (rng.bernoulli(model.p / model.beta)) {
        switch (rng.uniform_int(3)) {
            case 0: xb = 1; break;  // I(x)X
            case 1: xa = 1; break;  // X(x)I
            default: xa = xb = 1;   // X(x)X
        }
    }
    if (rng.bernoulli(model.p)) {
        switch (rng.uniform_int(3)) {
            case 0: zb = 1; break;  // I(x)Z
            case 1: za = 1; break;  // Z(x)I
            default: za = zb = 1;   // Z(x)Z
        }
    }
    auto compose = [](std::uint8_t x, std::uint8_t z) {
        if (x && z) return Pauli::Y;
        if (x) return Pauli::X;
        if (z) return Pauli::Z;
        return Pauli::I;
    };
    return {compose(xa, za), compose(xb, zb)};
}

inline Pauli sample_uniform_xyz(double rate, Rng& rng) {
    if (!rng.bernoulli(rate)) return Pauli::I;
    switch (rng.uniform_int(3)) {
        case 0: return Pauli::X;
        case 1: return Pauli::Y;
        default: return Pauli::Z;
    }
}

inline Pauli sample_prep_noise(const NoiseModel& model, Rng& rng) {
    if (model.fused_init_measure) return Pauli::I;
    return sample_uniform_xyz(model.p, rng);
}

inline Pauli sample_meas_noise(const NoiseModel& model, Rng& rng) {
    return sample_uniform_xyz(model.p * model.meas_scale, rng);
}

}  // namespace toporep
