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

#include "some/ohq.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace some {

WeightMatrix::WeightMatrix(int n, int code_distance) : n_(n), d_(code_distance) {
    if (n < 0) throw std::invalid_argument("weight matrix size must be nonnegative");
    if (code_distance < 1) throw std::invalid_argument("code distance must be positive");
    w_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), Weight::excluded());
}

size_t WeightMatrix::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
        throw std::out_of_range("weight matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") out of range for n = " + std::to_string(n_));
    }
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
}

void WeightMatrix::set_chain(int i, int j, int k) {
    if (k < 0) throw std::invalid_argument("chain length must be nonnegative");
    if (i == j) {
        set(i, i, Weight::from_errors(k));
    } else {
        set(i, j, Weight::from_halves(k));
        set(j, i, Weight::from_halves(k));
    }
}

void WeightMatrix::set_syndrome_ids(std::vector<AncillaIndex> ids) {
    if (static_cast<int>(ids.size()) != n_) throw std::invalid_argument("syndrome id count must equal n");
    ids_ = std::move(ids);
}

Weight WeightMatrix::pair_cost(int i, int j) const {
    if (i == j) return at(i, i);
    const auto a = at(i, j);
    const auto b = at(j, i);
    if (a.is_excluded() || b.is_excluded()) return Weight::excluded();
    return Weight::from_halves(a.halves() + b.halves());
}

bool WeightMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

WeightMatrix build_weight_matrix(const Lattice& lat, const SyndromeSet& s) {
    const int n = static_cast<int>(s.size());
    const int d = lat.distance();
    WeightMatrix wm(n, d);
    wm.set_syndrome_ids(s.flipped);
    // 2k > d - 1 is the exclusion rule; this is the largest admissible k.
    const int max_k = (d - 1) / 2;
    const auto admissible = [&](std::optional<int> k) { return k.has_value() && 2 * *k <= d - 1; };

    for (int i = 0; i < n; ++i) {
        const auto k = lat.boundary_distance(s.flipped[i]);
        if (admissible(k)) wm.set_chain(i, i, *k);
    }
    if (lat.has_distance_table()) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const auto k = lat.pair_distance(s.flipped[i], s.flipped[j]);
                if (admissible(k)) wm.set_chain(i, j, *k);
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const auto row = lat.distances_from(s.flipped[i], max_k);
            for (int j = i + 1; j < n; ++j) {
                const int k = row[s.flipped[j]];
                if (k >= 0) wm.set_chain(i, j, k);
            }
        }
    }
    return wm;
}

int ohq_variable_count(const WeightMatrix& wm) {
    int count = 0;
    for (int i = 0; i < wm.size(); ++i)
        for (int j = i; j < wm.size(); ++j)
            if (wm.pair_cost(i, j).is_finite()) ++count;
    return count;
}

QuboInstance::QuboInstance(int num_syndromes, int64_t penalty, std::vector<QuboVariable> variables,
                           std::vector<QuboTerm> terms)
    : n_(num_syndromes), penalty_(penalty), variables_(std::move(variables)), terms_(std::move(terms)) {
    if (n_ < 0) throw std::invalid_argument("syndrome count must be nonnegative");
    const int m = static_cast<int>(variables_.size());
    for (const auto& v : variables_) {
        if (v.i < 0 || v.i > v.j || v.j >= n_) {
            throw std::invalid_argument("variable (" + std::to_string(v.i) + ", " + std::to_string(v.j) +
                                        ") is not an upper-triangle entry of a " + std::to_string(n_) + "x" +
                                        std::to_string(n_) + " matrix");
        }
    }
    linear_.assign(static_cast<size_t>(m), 0);
    std::vector<int32_t> degree(static_cast<size_t>(m), 0);
    for (size_t t = 0; t < terms_.size(); ++t) {
        const auto& term = terms_[t];
        if (term.a < 0 || term.a > term.b || term.b >= m) {
            throw std::invalid_argument("term references invalid variables (" + std::to_string(term.a) + ", " +
                                        std::to_string(term.b) + ")");
        }
        if (t > 0) {
            const auto& prev = terms_[t - 1];
            if (std::pair(prev.a, prev.b) >= std::pair(term.a, term.b)) {
                throw std::invalid_argument("terms must be sorted by (a, b) without duplicates");
            }
        }
        if (term.a == term.b) {
            linear_[term.a] = term.halves;
        } else {
            ++degree[term.a];
            ++degree[term.b];
        }
    }
    coupling_offsets_.assign(static_cast<size_t>(m) + 1, 0);
    for (int v = 0; v < m; ++v) coupling_offsets_[v + 1] = coupling_offsets_[v] + degree[v];
    couplings_.resize(static_cast<size_t>(coupling_offsets_[m]));
    std::vector<int32_t> fill(coupling_offsets_.begin(), coupling_offsets_.end() - 1);
    for (const auto& term : terms_) {
        if (term.a == term.b) continue;
        couplings_[fill[term.a]++] = {term.b, term.halves};
        couplings_[fill[term.b]++] = {term.a, term.halves};
    }
}

std::span<const std::pair<int, int64_t>> QuboInstance::couplings(int var) const {
    const auto begin = coupling_offsets_.at(static_cast<size_t>(var));
    return {couplings_.data() + begin, static_cast<size_t>(coupling_offsets_[var + 1] - begin)};
}

Energy QuboInstance::energy(std::span<const uint8_t> x) const {
    if (x.size() != variables_.size()) {
        throw std::invalid_argument("assignment has " + std::to_string(x.size()) + " bits, instance has " +
                                    std::to_string(variables_.size()) + " variables");
    }
    int64_t total = offset().halves;
    for (const auto& term : terms_) {
        if (x[term.a] && x[term.b]) total += term.halves;
    }
    return {total};
}

int64_t QuboInstance::flip_delta_halves(std::span<const uint8_t> x, int var) const {
    int64_t field = linear_[static_cast<size_t>(var)];
    for (const auto& [other, coef] : couplings(var)) {
        if (x[other]) field += coef;
    }
    return x[var] ? -field : field;
}

QuboInstance build_qubo(const WeightMatrix& wm, int d) {
    const int n = wm.size();
    const int64_t penalty = static_cast<int64_t>(d) * d;
    std::vector<QuboVariable> vars;
    std::vector<int64_t> cost;
    std::vector<std::vector<int>> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const auto c = wm.pair_cost(i, j);
            if (c.is_excluded()) continue;
            const int v = static_cast<int>(vars.size());
            vars.push_back({i, j});
            cost.push_back(c.halves());
            rows[i].push_back(v);
            if (j != i) rows[j].push_back(v);
        }
    }

    // (S - 1)^2 = 1 - sum x + 2 sum_{u<v} x_u x_v for binary x, per row.
    std::map<std::pair<int, int>, int64_t> coef;
    for (int v = 0; v < static_cast<int>(vars.size()); ++v) {
        const int rows_touched = vars[v].i == vars[v].j ? 1 : 2;
        coef[{v, v}] += cost[v] - 2 * penalty * rows_touched;
    }
    for (const auto& row : rows) {
        for (size_t a = 0; a < row.size(); ++a)
            for (size_t b = a + 1; b < row.size(); ++b) coef[{row[a], row[b]}] += 4 * penalty;
    }
    std::vector<QuboTerm> terms;
    terms.reserve(coef.size());
    for (const auto& [key, halves] : coef) {
        if (halves != 0) terms.push_back({key.first, key.second, halves});
    }
    return QuboInstance(n, penalty, std::move(vars), std::move(terms));
}

bool satisfies_one_hot(const QuboInstance& q, std::span<const uint8_t> x) {
    if (x.size() != static_cast<size_t>(q.num_variables())) throw std::invalid_argument("assignment length mismatch");
    std::vector<int> row_sum(static_cast<size_t>(q.num_syndromes()), 0);
    for (int v = 0; v < q.num_variables(); ++v) {
        if (!x[v]) continue;
        const auto& var = q.variables()[v];
        ++row_sum[var.i];
        if (var.j != var.i) ++row_sum[var.j];
    }
    return std::all_of(row_sum.begin(), row_sum.end(), [](int s) { return s == 1; });
}

}  // namespace some
