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

#ifndef SOME_SOLVERS_HPP
#define SOME_SOLVERS_HPP

#include <optional>

#include "some/decoder.hpp"
#include "some/noise.hpp"
#include "some/ohq.hpp"

namespace some {

struct SolveResult {
    Assignment assignment;
    Energy energy;
    /// Only the exhaustive solver sets this.
    bool optimal = false;
};

/// Metropolis single-bit-flip annealing with a geometric inverse-temperature
/// ramp. Betas are in units of 1/error.
struct AnnealSchedule {
    int sweeps = 200;
    double beta_start = 0.05;
    double beta_end = 5.0;
    int restarts = 8;
    RngSeed seed{};

    /// Throws std::invalid_argument unless beta_start < beta_end, sweeps >= 1
    /// and restarts >= 1.
    void validate() const;
};

inline constexpr int kMaxExhaustiveVariables = 24;
inline constexpr int kMaxInvolutionSize = 20;

/// Global minimum over all 2^m assignments; ties go to the assignment with the
/// lowest binary value (variable 0 is the least significant bit).
/// Throws std::length_error above kMaxExhaustiveVariables.
SolveResult solve_exhaustive(const QuboInstance& q);

struct InvolutionResult {
    PermutationVector vector;
    Energy energy;
    /// False when the optimum strands a row on an EXCLUDED diagonal.
    bool feasible = true;
};

/// Exact minimum of outcome_energy over involutions that never pair two
/// indices through an EXCLUDED entry (EXCLUDED diagonals cost the stranded
/// weight). Throws std::length_error above kMaxInvolutionSize.
InvolutionResult solve_involutions(const WeightMatrix& wm);

/// Best assignment seen across all restarts; deterministic for a given seed.
SolveResult solve_anneal(const QuboInstance& q, const AnnealSchedule& schedule = {});

/// Reads a symmetric one-hot assignment back as a permutation vector; empty
/// when some row does not sum to exactly one.
std::optional<PermutationVector> assignment_to_matching(const QuboInstance& q, const Assignment& x);

/// The assignment setting x_{i, v[i]} for every row. Throws
/// std::invalid_argument if a needed variable is absent.
Assignment matching_to_assignment(const QuboInstance& q, const PermutationVector& v);

}  // namespace some

#endif  // SOME_SOLVERS_HPP
