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

// Monte Carlo experiments over (distance, error-rate) grids.
//
// Trial t of a cell always uses stream t of the cell seed, and per-trial
// results are reduced in trial order, so the thread count never changes an
// emitted value.

#ifndef SOME_HARNESS_HPP
#define SOME_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "some/correct.hpp"

namespace some {

struct ExperimentConfig {
    std::vector<int> distances;
    std::vector<double> rates;
    uint64_t trials = 10000;
    DecoderKind decoder = DecoderKind::some;
    uint64_t seed = 0;
    unsigned threads = 1;
    bool skip_trivial = false;
    /// Fill the timing columns of `sweep` (never byte-stable across runs).
    bool timing = false;
    int warmup = 100;
    TrialOptions options;

    /// Throws std::invalid_argument on empty grids, trials == 0, rates outside
    /// [0, 1] or threads == 0.
    void validate() const;
};

/// "0.01,0.02" or "start:end:step" (end inclusive).
std::vector<double> parse_rate_spec(std::string_view spec);
/// Comma-separated distances, e.g. "5,9,13".
std::vector<int> parse_distance_list(std::string_view spec);

/// Seed of the (distance) cell derived from the master seed.
uint64_t cell_seed(uint64_t master, int d);

struct SweepRow {
    int d = 0;
    double p = 0;
    uint64_t trials = 0;
    uint64_t logical_failures = 0;
    double logical_error_rate = 0;
    double mean_flipped = 0;
    double mean_vars_some = 0;
    double mean_vars_ohq = 0;
    double mean_decode_nanos = 0;
    int64_t p50_decode_nanos = 0;
    int64_t p99_decode_nanos = 0;
    /// Not emitted; kept for soundness checks.
    uint64_t infeasible = 0;
    uint64_t unclean_residuals = 0;
    uint64_t non_involutions = 0;
};

struct VarsRow {
    int d = 0;
    double p = 0;
    uint64_t trials = 0;
    double mean_flipped = 0;
    double mean_vars_some = 0;
    double mean_vars_ohq = 0;
};

/// Runs `body(t)` for t in [0, count) on `threads` workers.
void parallel_for(uint64_t count, unsigned threads, const std::function<void(uint64_t)>& body);

std::vector<SweepRow> run_sweep(const ExperimentConfig& config);
/// Single-threaded latency run: `warmup` untimed decodes first, then `trials`
/// timed ones (non-empty syndromes only when skip_trivial is set). Rejects
/// the exact decoder.
std::vector<SweepRow> run_bench(const ExperimentConfig& config);
/// Sampling and weight construction only; no decoding.
std::vector<VarsRow> run_vars(const ExperimentConfig& config);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string vars_csv(const std::vector<VarsRow>& rows);

struct OracleCell {
    int d = 0;
    double p = 0;
    uint64_t instances = 0;
    uint64_t some_checked = 0;
    uint64_t some_optimal = 0;
    uint64_t some_below_oracle = 0;
    uint64_t qubo_checked = 0;
    uint64_t qubo_agree = 0;
    uint64_t qubo_one_hot = 0;
    uint64_t anneal_agree = 0;
};

struct OracleReport {
    std::vector<OracleCell> cells;
    bool passed = true;
    std::string text;
};

inline constexpr int kOracleMaxSyndromes = 10;

/// Cross-checks SOME, the annealer, exhaustive QUBO search and involution
/// enumeration on instances with n <= 10. Exhaustive search only runs when
/// the QUBO has at most kMaxExhaustiveVariables variables. Passes when the
/// exhaustive QUBO minimum always equals the involution minimum and is
/// one-hot, and SOME never beats the oracle.
OracleReport run_oracle_check(const ExperimentConfig& config);

}  // namespace some

#endif  // SOME_HARNESS_HPP
