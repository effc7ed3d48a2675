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

#ifndef SOME_CORRECT_HPP
#define SOME_CORRECT_HPP

#include <cstdint>
#include <string_view>

#include "some/decoder.hpp"
#include "some/error_pattern.hpp"
#include "some/lattice.hpp"
#include "some/noise.hpp"
#include "some/solvers.hpp"

namespace some {

enum class DecoderKind { some, anneal, exact };

std::string_view to_string(DecoderKind kind);
/// Accepts "some", "anneal", "exact"; throws std::invalid_argument otherwise.
DecoderKind parse_decoder_kind(std::string_view name);

/// Flips one minimal chain whose syndrome is exactly {a, b} ({a} when a == b).
/// When both L-shaped routes exist the orientation is a fair coin drawn from
/// `rng`. Throws std::invalid_argument when no chain exists.
Correction path_correction(const Lattice& lat, AncillaIndex a, AncillaIndex b, TrialRng& rng);
Correction path_correction(const Lattice& lat, AncillaIndex a, AncillaIndex b, RngSeed seed);

/// XOR of the path corrections of every matched pair in `v`; rows on an
/// EXCLUDED entry are skipped.
Correction matching_correction(const Lattice& lat, const WeightMatrix& wm, const PermutationVector& v,
                               TrialRng& rng);

struct TrialOptions {
    DecodeOptions some;
    AnnealSchedule anneal;
};

/// Runs the chosen decoder on a weight matrix. The anneal and exact paths
/// report infeasible when they cannot produce a one-hot matching (exact is
/// limited to n <= kMaxInvolutionSize). `seed` feeds the annealer.
DecodeOutcome decode_with(const WeightMatrix& wm, DecoderKind kind, const TrialOptions& options, RngSeed seed);

struct TrialResult {
    bool success = true;
    bool logical_failure = false;
    bool infeasible = false;
    /// Post-correction syndrome was empty.
    bool residual_clean = true;
    /// Weight-matrix construction plus decoding only.
    int64_t decode_nanos = 0;
    int n_flipped = 0;
    int n_vars_some = 0;
    int n_vars_ohq = 0;
    Energy energy;
    bool is_involution = true;
};

/// Sample, extract, decode, correct, classify. Infeasible decodes are
/// recorded as failures rather than thrown.
TrialResult run_trial(const Lattice& lat, double p, DecoderKind decoder, RngSeed seed,
                      const TrialOptions& options = {});

/// Decoding half of run_trial for an already-sampled error pattern.
TrialResult run_trial_on(const Lattice& lat, const ErrorPattern& errors, DecoderKind decoder, RngSeed seed,
                         const TrialOptions& options = {});

}  // namespace some

#endif  // SOME_CORRECT_HPP
