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

#include "some/decoder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace some {

namespace {

int64_t self_cost(const WeightMatrix& wm, int i) {
    const auto w = wm.at(i, i);
    return w.is_finite() ? w.halves() : wm.stranded_cost().halves();
}

// Pairs every index of `diags` that lowers the energy, best improvement
// first, until no improving pair remains.
void refine_diagonals(const WeightMatrix& wm, PermutationVector& v) {
    std::vector<int> diags;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] == i) diags.push_back(i);

    while (diags.size() >= 2) {
        int64_t best_delta = 0;
        size_t best_a = 0;
        size_t best_b = 0;
        for (size_t a = 0; a < diags.size(); ++a) {
            for (size_t b = a + 1; b < diags.size(); ++b) {
                const auto pc = wm.pair_cost(diags[a], diags[b]);
                if (pc.is_excluded()) continue;
                const int64_t delta = pc.halves() - self_cost(wm, diags[a]) - self_cost(wm, diags[b]);
                if (delta < best_delta) {
                    best_delta = delta;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        if (best_delta >= 0) break;
        const int i = diags[best_a];
        const int j = diags[best_b];
        v[i] = j;
        v[j] = i;
        diags.erase(diags.begin() + static_cast<std::ptrdiff_t>(best_b));
        diags.erase(diags.begin() + static_cast<std::ptrdiff_t>(best_a));
    }
}

}  // namespace

bool is_involution(const PermutationVector& v) {
    const int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
        if (v[i] < 0 || v[i] >= n || v[v[i]] != i) return false;
    }
    return true;
}

std::vector<RankedPair> rank_pairs(const WeightMatrix& wm) {
    std::vector<RankedPair> pairs;
    const int n = wm.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const auto c = wm.pair_cost(i, j);
            if (c.is_finite()) pairs.push_back({i, j, c.halves()});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const RankedPair& x, const RankedPair& y) {
        if (x.cost_halves != y.cost_halves) return x.cost_halves < y.cost_halves;
        if (x.diagonal() != y.diagonal()) return !x.diagonal();
        if (x.i != y.i) return x.i < y.i;
        return x.j < y.j;
    });
    return pairs;
}

Energy outcome_energy(const WeightMatrix& wm, const PermutationVector& v) {
    if (static_cast<int>(v.size()) != wm.size() || !is_involution(v)) {
        throw std::invalid_argument("permutation vector is not an involution of size " + std::to_string(wm.size()));
    }
    int64_t total = 0;
    for (int i = 0; i < wm.size(); ++i) {
        const auto w = wm.at(i, v[i]);
        total += w.is_finite() ? w.halves() : wm.stranded_cost().halves();
    }
    return {total};
}

bool is_feasible_matching(const WeightMatrix& wm, const PermutationVector& v) {
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (wm.at(i, v[i]).is_excluded()) return false;
    }
    return true;
}

DecodeOutcome decode(const WeightMatrix& wm, const DecodeOptions& options) {
    const int n = wm.size();
    DecodeOutcome best;
    if (n == 0) return best;

    const auto pairs = rank_pairs(wm);
    size_t seeds = 0;
    while (seeds < pairs.size() && pairs[seeds].cost_halves == pairs[0].cost_halves) ++seeds;
    seeds = std::min(seeds, static_cast<size_t>(std::max(options.max_seeds, 1)));
    if (pairs.empty()) {
        // Nothing finite at all: every row is stranded.
        PermutationVector v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[i] = i;
        return {v, outcome_energy(wm, v), 0, false};
    }

    PermutationVector v(static_cast<size_t>(n));
    bool have_best = false;
    for (size_t s = 0; s < seeds; ++s) {
        std::fill(v.begin(), v.end(), -1);
        v[pairs[s].i] = pairs[s].j;
        v[pairs[s].j] = pairs[s].i;
        for (const auto& p : pairs) {
            if (v[p.i] < 0 && v[p.j] < 0) {
                v[p.i] = p.j;
                v[p.j] = p.i;
            }
        }
        for (int i = 0; i < n; ++i)
            if (v[i] < 0) v[i] = i;
        if (options.diagonal_swap) refine_diagonals(wm, v);

        const auto e = outcome_energy(wm, v);
        if (!have_best || e < best.energy) {
            best.vector = v;
            best.energy = e;
            have_best = true;
        }
    }
    best.seeds_tried = static_cast<int>(seeds);
    best.feasible = is_feasible_matching(wm, best.vector);
    return best;
}

}  // namespace some
