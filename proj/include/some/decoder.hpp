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

#ifndef SOME_DECODER_HPP
#define SOME_DECODER_HPP

#include <vector>

#include "some/ohq.hpp"

namespace some {

/// Involution over flipped syndromes: v[i] is i's partner, v[i] == i is a
/// boundary match.
using PermutationVector = std::vector<int>;

bool is_involution(const PermutationVector& v);

/// A finite upper-triangle entry with its full chain cost (w_ii, or
/// w_ij + w_ji off the diagonal).
struct RankedPair {
    int i = 0;
    int j = 0;
    int64_t cost_halves = 0;

    bool diagonal() const { return i == j; }
    friend bool operator==(const RankedPair&, const RankedPair&) = default;
};

/// Ascending cost; equal costs put off-diagonal pairs first, then (i, j).
std::vector<RankedPair> rank_pairs(const WeightMatrix& wm);

struct DecodeOptions {
    /// Upper bound on the number of minimum-cost seeds expanded.
    int max_seeds = 64;
    /// Pair up leftover boundary matches when that lowers the energy.
    bool diagonal_swap = true;
};

struct DecodeOutcome {
    PermutationVector vector;
    Energy energy;
    int seeds_tried = 0;
    /// False when some row had to take an EXCLUDED entry.
    bool feasible = true;
};

/// Sum over rows of W[i][v[i]]; rows on an EXCLUDED entry cost
/// wm.stranded_cost(). Throws std::invalid_argument if `v` is not an
/// involution of size n.
Energy outcome_energy(const WeightMatrix& wm, const PermutationVector& v);

/// True when no row of `v` lands on an EXCLUDED entry.
bool is_feasible_matching(const WeightMatrix& wm, const PermutationVector& v);

/// Greedy multi-seed election: each minimum-cost pair seeds one candidate that
/// is completed greedily in ranked order, refined by diagonal swaps, and the
/// lowest-energy candidate (first seed on ties) is returned.
DecodeOutcome decode(const WeightMatrix& wm, const DecodeOptions& options = {});

}  // namespace some

#endif  // SOME_DECODER_HPP
