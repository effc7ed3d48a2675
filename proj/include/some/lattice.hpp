// Copyright 2026 The SOME Decoder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOME_LATTICE_HPP
#define SOME_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace some {

using AncillaIndex = int32_t;
using QubitIndex = int32_t;

/// Position of a Z ancilla on the (d+1) x d syndrome grid.
struct AncillaCoord {
    int row = 0;
    int col = 0;

    friend bool operator==(const AncillaCoord&, const AncillaCoord&) = default;
};

/// The four families of data qubits. Stubs touch a single ancilla and
/// terminate chains at the top or bottom boundary.
enum class QubitKind : uint8_t { top_stub, bottom_stub, vertical, horizontal };

struct QubitPlacement {
    QubitKind kind;
    int row;
    int col;
};

struct LatticeOptions {
    /// Even distances have no integral (d-1)/2 and are rejected unless set.
    bool allow_even = false;
};

/// Planar surface-code geometry for X errors seen by Z ancillas.
///
/// Ancilla A(i, j) has index i*d + j with i in [0, d] and j in [0, d).
/// Rows 1..d-1 carry the d(d-1) active checks; rows 0 and d complete the
/// d(d+1) index space and are never touched by a data qubit.
///
/// Data qubit indices, in order:
///   top stubs       St(j)               -> A(1, j)
///   bottom stubs    Sb(j)               -> A(d-1, j)
///   verticals       V(i, j), i in 1..d-2 -> A(i, j), A(i+1, j)
///   horizontals     H(i, j), i in 1..d-1, j in 0..d-2 -> A(i, j), A(i, j+1)
///
/// Instances are immutable once built and may be shared across threads.
class Lattice {
   public:
    static constexpr int kMaxDistance = 255;

    /// Throws std::invalid_argument for d < 3, d > kMaxDistance, or an even d
    /// without `allow_even`.
    explicit Lattice(int distance, LatticeOptions options = {});

    int distance() const { return d_; }
    int num_data_qubits() const { return static_cast<int>(placement_.size()); }
    /// Size of the ancilla index space, d(d+1).
    int num_syndromes() const { return d_ * (d_ + 1); }
    /// Ancillas that some data qubit can flip, d(d-1).
    int num_active_syndromes() const { return d_ * (d_ - 1); }

    AncillaIndex ancilla(AncillaCoord c) const;
    AncillaCoord coord(AncillaIndex a) const;
    bool is_active(AncillaIndex a) const;

    QubitIndex top_stub(int col) const;
    QubitIndex bottom_stub(int col) const;
    QubitIndex vertical(int row, int col) const;
    QubitIndex horizontal(int row, int col) const;
    QubitPlacement placement(QubitIndex q) const;

    /// Ancillas flipped by an X error on `q` (one or two entries).
    std::span<const AncillaIndex> incidence(QubitIndex q) const;
    /// Data qubits whose errors flip `a`.
    std::span<const QubitIndex> adjacent_qubits(AncillaIndex a) const;

    /// Bulk shortest-path length between two ancillas; 0 when a == b.
    std::optional<int> pair_distance(AncillaIndex a, AncillaIndex b) const;
    /// Minimal chain length from `a` to the boundary through a stub.
    std::optional<int> boundary_distance(AncillaIndex a) const;
    /// Errors on the chain a matching edge stands for: the bulk path when
    /// a != b, the boundary path when a == b. Empty when no such chain exists.
    std::optional<int> chain_weight(AncillaIndex a, AncillaIndex b) const;

    /// Bulk BFS distances from `source` to every ancilla, truncated at
    /// `max_depth` (-1 for unreachable or beyond the horizon).
    std::vector<int> distances_from(AncillaIndex source, int max_depth) const;

    /// Horizontal cut sets; every cut separates the top boundary from the
    /// bottom boundary, so a syndrome-free residual crosses each of them with
    /// the same parity.
    const std::vector<std::vector<QubitIndex>>& cuts() const { return cuts_; }

    bool has_distance_table() const { return !pair_table_.empty(); }

   private:
    void check_ancilla(AncillaIndex a) const;
    void build_incidence();
    void build_distances();

    int d_;
    std::vector<QubitPlacement> placement_;
    std::vector<AncillaIndex> incidence_flat_;   // two slots per qubit
    std::vector<uint8_t> incidence_len_;
    std::vector<int32_t> adjacency_offsets_;     // CSR over ancillas
    std::vector<QubitIndex> adjacency_;
    std::vector<int32_t> neighbor_offsets_;      // bulk matching-graph CSR
    std::vector<AncillaIndex> neighbors_;
    std::vector<int32_t> boundary_;              // -1 when unreachable
    std::vector<uint16_t> pair_table_;           // dense all-pairs, small d only
    std::vector<std::vector<QubitIndex>> cuts_;
};

/// Equivalent to `Lattice(d, options)`.
Lattice build_lattice(int d, LatticeOptions options = {});

}  // namespace some

#endif  // SOME_LATTICE_HPP
