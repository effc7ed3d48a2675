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


// Reference computations used only by the tests. Nothing here calls into the
// library's geometry, solvers or energy code; inputs and outputs are plain
// containers so results can be compared against the library.

#ifndef SOME_TESTS_ORACLES_HPP
#define SOME_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Cell = std::pair<int, int>;  // (row, col)

/// Checks touched by each data qubit, listed in the library's index order:
/// top stubs, bottom stubs, verticals, horizontals.
std::vector<std::vector<Cell>> qubit_touches(int d);

/// Syndrome of a set of data-qubit indices, by parity counting.
std::set<Cell> syndrome_of(int d, const std::vector<int>& errors);

/// Fewest errors reproducing exactly `target`, by enumerating every subset
/// of data qubits (use only for d = 3).
std::optional<int> min_errors_for(int d, const std::set<Cell>& target);

/// Shortest path between two checks using two-check qubits only.
std::optional<int> bulk_distance(int d, Cell a, Cell b);
/// Shortest path from a check to a stub, stub included.
std::optional<int> boundary_distance(int d, Cell a);

/// Dense cost table in half-error units; nullopt marks an excluded entry.
using HalfTable = std::vector<std::vector<std::optional<int64_t>>>;

struct InvolutionMin {
    int64_t halves = 0;
    bool feasible = true;
    std::vector<int> vector;
};

/// Recursive enumeration of every involution. A pair needs both directed
/// entries finite; an excluded diagonal strands its row at `stranded_halves`.
/// Ties keep the first involution found (partners tried in increasing order,
/// self-match before any partner).
InvolutionMin involution_min(const HalfTable& w, int64_t stranded_halves);

/// Twice the one-hot QUBO energy from its definition,
///   sum_v cost_v x_v + P * sum_i (1 - sum_{v touches i} x_v)^2,
/// with variables given as (i, j), i <= j, and costs in half-error units.
int64_t qubo_energy_halves(int n, int64_t penalty, const std::vector<Cell>& vars,
                           const std::vector<int64_t>& cost_halves, const std::vector<uint8_t>& x);

struct BruteQubo {
    int64_t halves = 0;
    uint64_t mask = 0;
};

/// Minimum of qubo_energy_halves over all assignments; lowest mask on ties.
BruteQubo brute_qubo_min(int n, int64_t penalty, const std::vector<Cell>& vars,
                         const std::vector<int64_t>& cost_halves);

/// Expected number of flipped checks when each data qubit fails with
/// probability p: sum over checks of (1 - (1 - 2p)^deg) / 2.
double expected_flipped(int d, double p);

}  // namespace oracle

#endif  // SOME_TESTS_ORACLES_HPP
