#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace toporep {

// Periodic d x d x d lattice of primal cells with cluster qubits on faces
// and edges. Indexing is deterministic:
//   cell (x,y,z)            -> x + d*y + d^2*z
//   face qubit (cell c, a)  -> 3*cell(c) + a          (low face of c, normal a)
//   edge qubit (cell c, a)  -> 3d^3 + 3*cell(c) + a   (edge from vertex c along a)
// with a in {0,1,2} = {x,y,z}. Faces come first, so face ids double as
// indices into per-face arrays.
class LatticeGeometry {
  public:
    explicit LatticeGeometry(std::uint32_t d) : d_(d) {
        if (d < 2) throw std::invalid_argument("LatticeGeometry: d must be >= 2");
        const std::uint32_t cells = d * d * d;
        num_cells_ = cells;
        num_faces_ = 3 * cells;
        num_edges_ = 3 * cells;

        cell_faces_.resize(num_cells_);
        face_cells_.resize(num_faces_);
        face_edges_.resize(num_faces_);
        edge_faces_.resize(num_edges_);

        for (std::uint32_t z = 0; z < d; ++z)
            for (std::uint32_t y = 0; y < d; ++y)
                for (std::uint32_t x = 0; x < d; ++x) {
                    const std::array<std::uint32_t, 3> c{x, y, z};
                    const std::uint32_t ci = cell_index(x, y, z);
                    for (std::uint32_t a = 0; a < 3; ++a) {
                        // Low face of this cell and the low face of the
                        // +a neighbour (this cell's high face).
                        cell_faces_[ci][2 * a] = face_id(c, a);
                        cell_faces_[ci][2 * a + 1] = face_id(shift(c, a, +1), a);

                        const std::uint32_t f = face_id(c, a);
                        face_cells_[f] = {ci, cell_index_of(shift(c, a, -1))};

                        // Boundary edges of face (c, a), spanning axes u, v.
                        // Slot k is also the edge-colour class of the
                        // adjacency: every edge qubit meets its four faces
                        // in four distinct slots, so each slot forms a
                        // perfect face-edge matching.
                        const std::uint32_t u = (a + 1) % 3;
                        const std::uint32_t v = (a + 2) % 3;
                        face_edges_[f][0] = edge_id(c, u);
                        face_edges_[f][1] = edge_id(shift(c, v, +1), u);
                        face_edges_[f][2] = edge_id(c, v);
                        face_edges_[f][3] = edge_id(shift(c, u, +1), v);
                    }
                }

        // Invert face->edge incidence.
        std::vector<std::uint8_t> fill(num_edges_, 0);
        for (std::uint32_t f = 0; f < num_faces_; ++f)
            for (std::uint32_t k = 0; k < 4; ++k) {
                const std::uint32_t e = face_edges_[f][k] - num_faces_;
                if (fill[e] >= 4) throw std::logic_error("lattice: edge degree > 4");
                edge_faces_[e][fill[e]++] = f;
            }
        for (auto count : fill)
            if (count != 4) throw std::logic_error("lattice: edge degree != 4");
    }

    std::uint32_t d() const { return d_; }
    std::uint32_t num_cells() const { return num_cells_; }
    std::uint32_t num_faces() const { return num_faces_; }
    std::uint32_t num_edges() const { return num_edges_; }
    std::uint32_t num_cluster_qubits() const { return num_faces_ + num_edges_; }

    bool is_face(std::uint32_t qubit) const { return qubit < num_faces_; }
    std::uint32_t orientation(std::uint32_t qubit) const { return qubit % 3; }

    // Position class for calibration: {face,edge} x {x,y,z}.
    std::uint32_t position_class(std::uint32_t qubit) const {
        return (is_face(qubit) ? 0 : 3) + orientation(qubit);
    }
    static constexpr std::uint32_t kNumPositionClasses = 6;

    std::uint32_t cell_index(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
        return x + d_ * (y + d_ * z);
    }
    std::array<std::uint32_t, 3> cell_coord(std::uint32_t ci) const {
        return {ci % d_, (ci / d_) % d_, ci / (d_ * d_)};
    }
    std::uint32_t face_id(const std::array<std::uint32_t, 3>& c, std::uint32_t axis) const {
        return 3 * cell_index_of(c) + axis;
    }
    std::uint32_t edge_id(const std::array<std::uint32_t, 3>& c, std::uint32_t axis) const {
        return num_faces_ + 3 * cell_index_of(c) + axis;
    }
    std::array<std::uint32_t, 3> face_coord(std::uint32_t f) const { return cell_coord(f / 3); }
    std::array<std::uint32_t, 3> edge_coord(std::uint32_t e) const {
        return cell_coord((e - num_faces_) / 3);
    }

    const std::array<std::uint32_t, 6>& cell_faces(std::uint32_t ci) const {
        return cell_faces_[ci];
    }
    const std::array<std::uint32_t, 2>& face_cells(std::uint32_t f) const {
        return face_cells_[f];
    }
    const std::array<std::uint32_t, 4>& face_edges(std::uint32_t f) const {
        return face_edges_[f];
    }
    // Faces incident to an edge qubit (edge id includes the face-count offset).
    const std::array<std::uint32_t, 4>& edge_faces(std::uint32_t e) const {
        return edge_faces_[e - num_faces_];
    }
    // CZ-round class of the k-th boundary edge of face f (equal to the
    // slot index by construction).
    std::uint32_t face_edge_round(std::uint32_t, std::uint32_t k) const { return k; }

    // Neighbour cell across the given axis/sign, and the face crossed.
    std::pair<std::uint32_t, std::uint32_t> cell_step(std::uint32_t ci, std::uint32_t axis,
                                                      int sign) const {
        const auto c = cell_coord(ci);
        const auto nc = shift(c, axis, sign);
        // Moving -a crosses this cell's low face; moving +a crosses the
        // neighbour's low face.
        const std::uint32_t f = sign < 0 ? face_id(c, axis) : face_id(nc, axis);
        return {cell_index_of(nc), f};
    }

  private:
    std::uint32_t cell_index_of(const std::array<std::uint32_t, 3>& c) const {
        return cell_index(c[0], c[1], c[2]);
    }
    std::array<std::uint32_t, 3> shift(std::array<std::uint32_t, 3> c, std::uint32_t axis,
                                       int sign) const {
        c[axis] = (c[axis] + d_ + static_cast<std::uint32_t>(sign)) % d_;
        return c;
    }

    std::uint32_t d_;
    std::uint32_t num_cells_;
    std::uint32_t num_faces_;
    std::uint32_t num_edges_;
    std::vector<std::array<std::uint32_t, 6>> cell_faces_;
    std::vector<std::array<std::uint32_t, 2>> face_cells_;
    std::vector<std::array<std::uint32_t, 4>> face_edges_;
    std::vector<std::array<std::uint32_t, 4>> edge_faces_;
};

inline LatticeGeometry build_lattice(std::uint32_t d) { return LatticeGeometry(d); }

// Time-ordered preparation schedule: encoded prep of every block, then four
// encoded-CZ rounds (a proper 4-edge-colouring of the 4-regular face-edge
// adjacency graph, classified by direction and offset), then encoded
// X-measurement of every block. round_order permutes the four colour
// classes for sensitivity studies.
struct PrepSchedule {
    // rounds[r] lists (face qubit, edge qubit) pairs, disjoint within a round.
    std::array<std::vector<std::pair<std::uint32_t, std::uint32_t>>, 4> rounds;
};

inline PrepSchedule build_prep_schedule(const LatticeGeometry& geometry,
                                        const std::array<std::uint32_t, 4>& round_order = {0, 1, 2,
                                                                                           3}) {
    {
        auto sorted = round_order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<std::uint32_t, 4>{0, 1, 2, 3})
            throw std::invalid_argument("build_prep_schedule: round_order must permute 0..3");
    }
    PrepSchedule schedule;
    for (auto& round : schedule.rounds) round.reserve(geometry.num_faces());
    for (std::uint32_t f = 0; f < geometry.num_faces(); ++f)
        for (std::uint32_t k = 0; k < 4; ++k) {
            const std::uint32_t cls = geometry.face_edge_round(f, k);
            schedule.rounds[round_order[cls]].emplace_back(f, geometry.face_edges(f)[k]);
        }
    return schedule;
}

// Syndrome of one trial: odd-parity primal cells plus per-face soft
// information (posterior flip probability, 1/2 when located).
struct Syndrome {
    std::vector<std::uint32_t> odd_cells;
    std::vector<double> face_soft_info;
};

inline Syndrome extract_syndrome(const LatticeGeometry& geometry,
                                 const std::vector<std::uint8_t>& face_flips,
                                 std::vector<double> face_soft_info) {
    if (face_flips.size() != geometry.num_faces())
        throw std::invalid_argument("extract_syndrome: need one flip bit per face");
    if (face_soft_info.size() != geometry.num_faces())
        throw std::invalid_argument("extract_syndrome: need soft info per face");
    Syndrome syndrome;
    syndrome.face_soft_info = std::move(face_soft_info);
    for (std::uint32_t ci = 0; ci < geometry.num_cells(); ++ci) {
        std::uint8_t parity = 0;
        for (auto f : geometry.cell_faces(ci)) parity ^= face_flips[f];
        if (parity) syndrome.odd_cells.push_back(ci);
    }
    return syndrome;
}

// Per-axis wrap parities of an error-plus-correction chain, and the failure
// verdict (any odd parity is a nontrivial homology class on the 3-torus).
struct HomologyVerdict {
    std::array<bool, 3> axis_parity{false, false, false};
    bool failure = false;
};

inline HomologyVerdict logical_failure(const LatticeGeometry& geometry,
                                       const std::vector<std::uint8_t>& error_faces,
                                       const std::vector<std::uint8_t>& correction_faces) {
    if (error_faces.size() != geometry.num_faces() ||
        correction_faces.size() != geometry.num_faces())
        throw std::invalid_argument("logical_failure: need one bit per face");

    std::vector<std::uint8_t> combined(geometry.num_faces());
    for (std::uint32_t f = 0; f < geometry.num_faces(); ++f)
        combined[f] = error_faces[f] ^ correction_faces[f];

    for (std::uint32_t ci = 0; ci < geometry.num_cells(); ++ci) {
        std::uint8_t parity = 0;
        for (auto f : geometry.cell_faces(ci)) parity ^= combined[f];
        if (parity) throw std::logic_error("logical_failure: syndrome not cleared");
    }

    // Count crossings of a fixed transverse cross-section per axis: all
    // faces with that normal at coordinate 0.
    HomologyVerdict verdict;
    for (std::uint32_t f = 0; f < geometry.num_faces(); ++f) {
        if (!combined[f]) continue;
        const std::uint32_t axis = geometry.orientation(f);
        if (geometry.face_coord(f)[axis] == 0)
            verdict.axis_parity[axis] = !verdict.axis_parity[axis];
    }
    verdict.failure =
        verdict.axis_parity[0] || verdict.axis_parity[1] || verdict.axis_parity[2];
    return verdict;
}

}  // namespace toporep
