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

#include "some/solvers.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace some {

void AnnealSchedule::validate() const {
    if (sweeps < 1) throw std::invalid_argument("anneal schedule needs at least one sweep");
    if (restarts < 1) throw std::invalid_argument("anneal schedule needs at least one restart");
    if (!(beta_start > 0.0 && beta_start < beta_end)) {
        throw std::invalid_argument("anneal schedule needs 0 < beta_start < beta_end");
    }
}

SolveResult solve_exhaustive(const QuboInstance& q) {
    const int m = q.num_variables();
    if (m > kMaxExhaustiveVariables) {
        throw std::length_error("exhaustive search is limited to " + std::to_string(kMaxExhaustiveVariables) +
                                    " variables, instance has " + std::to_string(m));
    }
    Assignment x(static_cast<size_t>(m), 0);
    int64_t current = q.offset().halves;
    int64_t best = current;
    uint64_t mask = 0;
    uint64_t best_mask = 0;
    const uint64_t total = uint64_t{1} << m;
    // Gray-code walk: one variable changes per step.
    for (uint64_t k = 1; k < total; ++k) {
        const int v = std::countr_zero(k);
        current += q.flip_delta_halves(x, v);
        x[v] ^= 1;
        mask ^= uint64_t{1} << v;
        if (current < best || (current == best && mask < best_mask)) {
            best = current;
            best_mask = mask;
        }
    }
    SolveResult r;
    r.assignment.assign(static_cast<size_t>(m), 0);
    for (int v = 0; v < m; ++v) r.assignment[v] = static_cast<uint8_t>((best_mask >> v) & 1);
    r.energy = {best};
    r.optimal = true;
    return r;
}

InvolutionResult solve_involutions(const WeightMatrix& wm) {
    const int n = wm.size();
    if (n > kMaxInvolutionSize) {
        throw std::length_error("involution search is limited to n <= " + std::to_string(kMaxInvolutionSize) +
                                    ", got " + std::to_string(n));
    }
    InvolutionResult result;
    if (n == 0) return result;

    // best[mask] is the cheapest matching of exactly the indices in `mask`,
    // always resolving the lowest index first.
    const size_t states = size_t{1} << n;
    constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
    std::vector<int64_t> best(states, kInf);
    std::vector<int8_t> choice(states, -1);
    best[0] = 0;
    for (size_t mask = 1; mask < states; ++mask) {
        const int i = std::countr_zero(mask);
        const size_t rest = mask & ~(size_t{1} << i);
        const auto self = wm.at(i, i);
        best[mask] = (self.is_finite() ? self.halves() : wm.stranded_cost().halves()) + best[rest];
        choice[mask] = static_cast<int8_t>(i);
        for (size_t others = rest; others; others &= others - 1) {
            const int j = std::countr_zero(others);
            const auto pc = wm.pair_cost(i, j);
            if (pc.is_excluded()) continue;
            const auto sub = best[rest & ~(size_t{1} << j)];
            if (pc.halves() + sub < best[mask]) {
                best[mask] = pc.halves() + sub;
                choice[mask] = static_cast<int8_t>(j);
            }
        }
    }

    result.vector.assign(static_cast<size_t>(n), -1);
    size_t mask = states - 1;
    while (mask) {
        const int i = std::countr_zero(mask);
        const int j = choice[mask];
        result.vector[i] = j;
        result.vector[j] = i;
        mask &= ~(size_t{1} << i);
        mask &= ~(size_t{1} << j);
    }
    result.energy = {best[states - 1]};
    result.feasible = is_feasible_matching(wm, result.vector);
    return result;
}

SolveResult solve_anneal(const QuboInstance& q, const AnnealSchedule& schedule) {
    schedule.validate();
    const int m = q.num_variables();
    SolveResult best;
    best.assignment.assign(static_cast<size_t>(m), 0);
    best.energy = q.energy(best.assignment);
    if (m == 0) return best;

    bool have_best = false;
    Assignment x(static_cast<size_t>(m));
    const double ratio = schedule.beta_end / schedule.beta_start;
    for (int r = 0; r < schedule.restarts; ++r) {
        TrialRng rng({schedule.seed.seed + 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(r), schedule.seed.stream},
                     RngPurpose::anneal);
        for (auto& bit : x) bit = rng.coin() ? 1 : 0;
        int64_t current = q.energy(x).halves;
        if (!have_best || current < best.energy.halves) {
            best.assignment = x;
            best.energy = {current};
            have_best = true;
        }
        for (int s = 0; s < schedule.sweeps; ++s) {
            const double frac = schedule.sweeps == 1 ? 1.0 : static_cast<double>(s) / (schedule.sweeps - 1);
            const double beta = schedule.beta_start * std::pow(ratio, frac);
            for (int v = 0; v < m; ++v) {
                const int64_t delta = q.flip_delta_halves(x, v);
                if (delta > 0 && rng.uniform() >= std::exp(-beta * (static_cast<double>(delta) / 2.0))) continue;
                x[v] ^= 1;
                current += delta;
                if (current < best.energy.halves) {
                    best.assignment = x;
                    best.energy = {current};
                }
            }
        }
    }
    return best;
}

std::optional<PermutationVector> assignment_to_matching(const QuboInstance& q, const Assignment& x) {
    if (x.size() != static_cast<size_t>(q.num_variables())) throw std::invalid_argument("assignment length mismatch");
    PermutationVector v(static_cast<size_t>(q.num_syndromes()), -1);
    for (int k = 0; k < q.num_variables(); ++k) {
        if (!x[k]) continue;
        const auto& var = q.variables()[k];
        if (v[var.i] >= 0 || v[var.j] >= 0) return std::nullopt;
        v[var.i] = var.j;
        v[var.j] = var.i;
    }
    for (int p : v)
        if (p < 0) return std::nullopt;
    return v;
}

Assignment matching_to_assignment(const QuboInstance& q, const PermutationVector& v) {
    if (static_cast<int>(v.size()) != q.num_syndromes() || !is_involution(v)) {
        throw std::invalid_argument("matching is not an involution over the instance's syndromes");
    }
    Assignment x(static_cast<size_t>(q.num_variables()), 0);
    for (int i = 0; i < q.num_syndromes(); ++i) {
        if (v[i] < i) continue;
        bool found = false;
        for (int k = 0; k < q.num_variables(); ++k) {
            if (q.variables()[k] == QuboVariable{i, v[i]}) {
                x[k] = 1;
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::invalid_argument("no QUBO variable for pair (" + std::to_string(i) + ", " +
                                        std::to_string(v[i]) + ")");
        }
    }
    return x;
}

}  // namespace some
