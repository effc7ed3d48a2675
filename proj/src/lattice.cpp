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

#include "some/lattice.hpp"

#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace some {

namespace {

constexpr uint16_t kUnreachable = std::numeric_limits<uint16_t>::max();
// All-pairs table is kept only while it stays under ~8 MB.
constexpr int kDenseTableLimit = 2048;

}  // namespace

Lattice::Lattice(int distance, LatticeOptions options) : d_(distance) {
    if (distance < 3 || distance > kMaxDistance) {
        throw std::invalid_argument(
            "code distance must be in [3, " + std::to_string(kMaxDistance) + "], got " + std::to_string(distance));
    }
    if (distance % 2 == 0 && !options.allow_even) {
        throw std::invalid_argument("code distance must be odd, got " + std::to_string(distance));
    }
    build_incidence();
    build_distances();
}

Lattice build_lattice(int d, LatticeOptions options) {
    return Lattice(d, options);
}

void Lattice::build_incidence() {
    const int d = d_;
    placement_.reserve(static_cast<size_t>(d * d + (d - 1) * (d - 1)));
    for (int j = 0; j < d; ++j) placement_.push_back({QubitKind::top_stub, 0, j});
    for (int j = 0; j < d; ++j) placement_.push_back({QubitKind::bottom_stub, d, j});
    for (int i = 1; i <= d - 2; ++i)
        for (int j = 0; j < d; ++j) placement_.push_back({QubitKind::vertical, i, j});
    for (int i = 1; i <= d - 1; ++i)
        for (int j = 0; j <= d - 2; ++j) placement_.push_back({QubitKind::horizontal, i, j});

    const auto nq = placement_.size();
    incidence_flat_.assign(2 * nq, -1);
    incidence_len_.assign(nq, 0);
    for (size_t q = 0; q < nq; ++q) {
        const auto& p = placement_[q];
        auto* slot = &incidence_flat_[2 * q];
        switch (p.kind) {
            case QubitKind::top_stub:
                slot[0] = ancilla({1, p.col});
                incidence_len_[q] = 1;
                break;
            case QubitKind::bottom_stub:
                slot[0] = ancilla({d - 1, p.col});
                incidence_len_[q] = 1;
                break;
            case QubitKind::vertical:
                slot[0] = ancilla({p.row, p.col});
                slot[1] = ancilla({p.row + 1, p.col});
                incidence_len_[q] = 2;
                break;
            case QubitKind::horizontal:
                slot[0] = ancilla({p.row, p.col});
                slot[1] = ancilla({p.row, p.col + 1});
                incidence_len_[q] = 2;
                break;
        }
    }

    const int na = num_syndromes();
    std::vector<int32_t> degree(static_cast<size_t>(na), 0);
    std::vector<int32_t> bulk_degree(static_cast<size_t>(na), 0);
    for (size_t q = 0; q < nq; ++q) {
        for (int k = 0; k < incidence_len_[q]; ++k) ++degree[incidence_flat_[2 * q + k]];
        if (incidence_len_[q] == 2) {
            ++bulk_degree[incidence_flat_[2 * q]];
            ++bulk_degree[incidence_flat_[2 * q + 1]];
        }
    }
    adjacency_offsets_.assign(static_cast<size_t>(na) + 1, 0);
    neighbor_offsets_.assign(static_cast<size_t>(na) + 1, 0);
    for (int a = 0; a < na; ++a) {
        adjacency_offsets_[a + 1] = adjacency_offsets_[a] + degree[a];
        neighbor_offsets_[a + 1] = neighbor_offsets_[a] + bulk_degree[a];
    }
    adjacency_.resize(static_cast<size_t>(adjacency_offsets_[na]));
    neighbors_.resize(static_cast<size_t>(neighbor_offsets_[na]));
    std::vector<int32_t> fill_adj(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
    std::vector<int32_t> fill_nb(neighbor_offsets_.begin(), neighbor_offsets_.end() - 1);
    for (size_t q = 0; q < nq; ++q) {
        for (int k = 0; k < incidence_len_[q]; ++k) {
            adjacency_[fill_adj[incidence_flat_[2 * q + k]]++] = static_cast<QubitIndex>(q);
        }
        if (incidence_len_[q] == 2) {
            const auto a = incidence_flat_[2 * q];
            const auto b = incidence_flat_[2 * q + 1];
            neighbors_[fill_nb[a]++] = b;
            neighbors_[fill_nb[b]++] = a;
        }
    }

    cuts_.clear();
    std::vector<QubitIndex> cut;
    for (int j = 0; j < d; ++j) cut.push_back(top_stub(j));
    cuts_.push_back(cut);
    for (int i = 1; i <= d - 2; ++i) {
        cut.clear();
        for (int j = 0; j < d; ++j) cut.push_back(vertical(i, j));
        cuts_.push_back(cut);
    }
    cut.clear();
    for (int j = 0; j < d; ++j) cut.push_back(bottom_stub(j));
    cuts_.push_back(cut);
}

void Lattice::build_distances() {
    const int na = num_syndromes();

    // Multi-source BFS from the virtual boundary node: each stub is an edge of
    // length one into its ancilla.
    boundary_.assign(static_cast<size_t>(na), -1);
    std::deque<AncillaIndex> queue;
    for (size_t q = 0; q < placement_.size(); ++q) {
        if (incidence_len_[q] != 1) continue;
        const auto a = incidence_flat_[2 * q];
        if (boundary_[a] < 0) {
            boundary_[a] = 1;
            queue.push_back(a);
        }
    }
    while (!queue.empty()) {
        const auto a = queue.front();
        queue.pop_front();
        for (int32_t k = neighbor_offsets_[a]; k < neighbor_offsets_[a + 1]; ++k) {
            const auto b = neighbors_[k];
            if (boundary_[b] < 0) {
                boundary_[b] = boundary_[a] + 1;
                queue.push_back(b);
            }
        }
    }

    pair_table_.clear();
    if (na > kDenseTableLimit) return;
    pair_table_.assign(static_cast<size_t>(na) * static_cast<size_t>(na), kUnreachable);
    for (AncillaIndex s = 0; s < na; ++s) {
        const auto row = distances_from(s, std::numeric_limits<int>::max());
        for (AncillaIndex t = 0; t < na; ++t) {
            if (row[t] >= 0) pair_table_[static_cast<size_t>(s) * na + t] = static_cast<uint16_t>(row[t]);
        }
    }
}

std::vector<int> Lattice::distances_from(AncillaIndex source, int max_depth) const {
    check_ancilla(source);
    std::vector<int> dist(static_cast<size_t>(num_syndromes()), -1);
    std::vector<AncillaIndex> frontier{source};
    std::vector<AncillaIndex> next;
    dist[source] = 0;
    for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        next.clear();
        for (auto a : frontier) {
            for (int32_t k = neighbor_offsets_[a]; k < neighbor_offsets_[a + 1]; ++k) {
                const auto b = neighbors_[k];
                if (dist[b] < 0) {
                    dist[b] = depth;
                    next.push_back(b);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

void Lattice::check_ancilla(AncillaIndex a) const {
    if (a < 0 || a >= num_syndromes()) {
        throw std::out_of_range("ancilla index " + std::to_string(a) + " out of range [0, " +
                                std::to_string(num_syndromes()) + ")");
    }
}

AncillaIndex Lattice::ancilla(AncillaCoord c) const {
    if (c.row < 0 || c.row > d_ || c.col < 0 || c.col >= d_) {
        throw std::out_of_range("ancilla coordinate (" + std::to_string(c.row) + ", " + std::to_string(c.col) +
                                ") outside the " + std::to_string(d_ + 1) + "x" + std::to_string(d_) + " grid");
    }
    return c.row * d_ + c.col;
}

AncillaCoord Lattice::coord(AncillaIndex a) const {
    check_ancilla(a);
    return {a / d_, a % d_};
}

bool Lattice::is_active(AncillaIndex a) const {
    check_ancilla(a);
    return adjacency_offsets_[a + 1] > adjacency_offsets_[a];
}

QubitIndex Lattice::top_stub(int col) const {
    if (col < 0 || col >= d_) throw std::out_of_range("top stub column out of range");
    return col;
}

QubitIndex Lattice::bottom_stub(int col) const {
    if (col < 0 || col >= d_) throw std::out_of_range("bottom stub column out of range");
    return d_ + col;
}

QubitIndex Lattice::vertical(int row, int col) const {
    if (row < 1 || row > d_ - 2 || col < 0 || col >= d_) throw std::out_of_range("vertical qubit out of range");
    return 2 * d_ + (row - 1) * d_ + col;
}

QubitIndex Lattice::horizontal(int row, int col) const {
    if (row < 1 || row > d_ - 1 || col < 0 || col > d_ - 2) throw std::out_of_range("horizontal qubit out of range");
    return 2 * d_ + d_ * (d_ - 2) + (row - 1) * (d_ - 1) + col;
}

QubitPlacement Lattice::placement(QubitIndex q) const {
    if (q < 0 || q >= num_data_qubits()) throw std::out_of_range("data qubit index out of range");
    return placement_[q];
}

std::span<const AncillaIndex> Lattice::incidence(QubitIndex q) const {
    if (q < 0 || q >= num_data_qubits()) throw std::out_of_range("data qubit index out of range");
    return {&incidence_flat_[2 * static_cast<size_t>(q)], incidence_len_[q]};
}

std::span<const QubitIndex> Lattice::adjacent_qubits(AncillaIndex a) const {
    check_ancilla(a);
    const auto begin = adjacency_offsets_[a];
    return {adjacency_.data() + begin, static_cast<size_t>(adjacency_offsets_[a + 1] - begin)};
}

std::optional<int> Lattice::pair_distance(AncillaIndex a, AncillaIndex b) const {
    check_ancilla(a);
    check_ancilla(b);
    if (a == b) return 0;
    if (!pair_table_.empty()) {
        const auto v = pair_table_[static_cast<size_t>(a) * num_syndromes() + b];
        if (v == kUnreachable) return std::nullopt;
        return v;
    }
    const auto row = distances_from(a, std::numeric_limits<int>::max());
    if (row[b] < 0) return std::nullopt;
    return row[b];
}

std::optional<int> Lattice::boundary_distance(AncillaIndex a) const {
    check_ancilla(a);
    if (boundary_[a] < 0) return std::nullopt;
    return boundary_[a];
}

std::optional<int> Lattice::chain_weight(AncillaIndex a, AncillaIndex b) const {
    if (a == b) return boundary_distance(a);
    return pair_distance(a, b);
}

}  // namespace some
