#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toporep {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Address of one physical qubit in the concatenated layout: cluster qubit
// index (face or edge of the 3D lattice) plus position within its length-n
// repetition block.
struct PhysicalQubitId {
    std::uint32_t cluster_qubit = 0;
    std::uint32_t rep_index = 0;
};

// Maps (cluster_qubit, rep_index) to a flat physical index.
struct BlockLayout {
    std::uint32_t n = 1;

    std::size_t flat(PhysicalQubitId id) const {
        return static_cast<std::size_t>(id.cluster_qubit) * n + id.rep_index;
    }
    std::size_t block_begin(std::uint32_t cluster_qubit) const {
        return static_cast<std::size_t>(cluster_qubit) * n;
    }
};

// Binary X/Z error record over all physical qubits of one trial. Global
// phases are discarded; Y is both bits set. Each qubit is single-use:
// measure_x_flip marks it consumed and later operations on it throw.
class PauliFrame {
  public:
    explicit PauliFrame(std::size_t num_qubits) {
        if (num_qubits == 0)
            throw std::invalid_argument("PauliFrame: num_qubits must be >= 1");
        x_record_.assign(num_qubits, 0);
        z_record_.assign(num_qubits, 0);
        consumed_.assign(num_qubits, 0);
    }

    std::size_t size() const { return x_record_.size(); }

    bool x_bit(std::size_t q) const { return x_record_[q] != 0; }
    bool z_bit(std::size_t q) const { return z_record_[q] != 0; }

    void apply_pauli(std::size_t q, Pauli p) {
        check_live(q, "apply_pauli");
        switch (p) {
            case Pauli::I: break;
            case Pauli::X: x_record_[q] ^= 1; break;
            case Pauli::Z: z_record_[q] ^= 1; break;
            case Pauli::Y:
                x_record_[q] ^= 1;
                z_record_[q] ^= 1;
                break;
        }
    }

    // CZ conjugation: X on one side spreads Z onto the other; Z commutes.
    void apply_cz(std::size_t a, std::size_t b) {
        if (a == b) throw std::invalid_argument("apply_cz: a == b");
        check_live(a, "apply_cz");
        check_live(b, "apply_cz");
        z_record_[b] ^= x_record_[a];
        z_record_[a] ^= x_record_[b];
    }

    // X-basis measurement outcome flip relative to the noiseless circuit:
    // Z and Y anticommute with X. Marks the qubit consumed.
    bool measure_x_flip(std::size_t q) {
        check_live(q, "measure_x_flip");
        consumed_[q] = 1;
        return z_record_[q] != 0;
    }

    bool consumed(std::size_t q) const { return consumed_[q] != 0; }

  private:
    void check_live(std::size_t q, const char* op) const {
        if (q >= x_record_.size())
            throw std::invalid_argument(std::string(op) + ": qubit index out of range");
        if (consumed_[q])
            throw std::logic_error(std::string(op) + ": qubit already measured");
    }

    std::vector<std::uint8_t> x_record_;
    std::vector<std::uint8_t> z_record_;
    std::vector<std::uint8_t> consumed_;
};

}  // namespace toporep
