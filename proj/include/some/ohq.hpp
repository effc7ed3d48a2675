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

// One-hot QUBO construction over flipped syndromes.
//
// All costs are kept in half-error units so that the k/2 off-diagonal weights
// stay exact integers.

#ifndef SOME_OHQ_HPP
#define SOME_OHQ_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "some/error_pattern.hpp"
#include "some/lattice.hpp"

namespace some {

/// A matching cost in half-error units, or the EXCLUDED marker.
class Weight {
   public:
    static constexpr Weight excluded() { return Weight(kExcludedRaw); }
    static constexpr Weight from_halves(int32_t halves) { return Weight(halves); }
    static constexpr Weight from_errors(int32_t k) { return Weight(2 * k); }

    constexpr bool is_excluded() const { return raw_ == kExcludedRaw; }
    constexpr bool is_finite() const { return raw_ != kExcludedRaw; }
    /// Only meaningful for finite weights.
    constexpr int32_t halves() const { return raw_; }
    constexpr double value() const { return raw_ / 2.0; }

    friend constexpr bool operator==(Weight, Weight) = default;

   private:
    static constexpr int32_t kExcludedRaw = std::numeric_limits<int32_t>::max();
    constexpr explicit Weight(int32_t raw) : raw_(raw) {}
    int32_t raw_;
};

/// Exact energy in half-error units.
struct Energy {
    int64_t halves = 0;

    double value() const { return static_cast<double>(halves) / 2.0; }
    friend constexpr auto operator<=>(const Energy&, const Energy&) = default;
};

/// n x n costs over the flipped syndromes. Symmetric when built from a
/// lattice, but asymmetric entries are representable.
class WeightMatrix {
   public:
    WeightMatrix() = default;
    /// All entries start EXCLUDED.
    WeightMatrix(int n, int code_distance);

    int size() const { return n_; }
    int code_distance() const { return d_; }

    Weight at(int i, int j) const { return w_[index(i, j)]; }
    void set(int i, int j, Weight w) { w_[index(i, j)] = w; }
    /// Sets w[i][j] = w[j][i] = k/2 for i != j, or w[i][i] = k.
    void set_chain(int i, int j, int k);

    /// Ancilla index for each row; empty for hand-built matrices.
    const std::vector<AncillaIndex>& syndrome_ids() const { return ids_; }
    void set_syndrome_ids(std::vector<AncillaIndex> ids);

    /// Cost charged for a row forced onto an EXCLUDED entry: d^2 errors.
    Weight stranded_cost() const { return Weight::from_errors(d_ * d_); }

    /// Full chain cost of matching i with j: w_ii on the diagonal,
    /// w_ij + w_ji otherwise. EXCLUDED if either direction is.
    Weight pair_cost(int i, int j) const;

    bool is_symmetric() const;

   private:
    size_t index(int i, int j) const;

    int n_ = 0;
    int d_ = 0;
    std::vector<Weight> w_;
    std::vector<AncillaIndex> ids_;
};

/// Weights over the flipped syndromes of `s`: w_ii = boundary chain length,
/// w_ij = k/2, EXCLUDED where no chain exists or 2k > d - 1.
WeightMatrix build_weight_matrix(const Lattice& lat, const SyndromeSet& s);

/// Number of OHQ variables: unordered pairs i <= j with a finite pair cost.
int ohq_variable_count(const WeightMatrix& wm);

/// x_ij for i <= j; x_ji is the same variable.
struct QuboVariable {
    int i = 0;
    int j = 0;

    friend bool operator==(const QuboVariable&, const QuboVariable&) = default;
};

/// Coefficient on x_a * x_b (a < b) or on x_a (a == b).
struct QuboTerm {
    int a = 0;
    int b = 0;
    int64_t halves = 0;

    friend bool operator==(const QuboTerm&, const QuboTerm&) = default;
};

using Assignment = std::vector<uint8_t>;

/// H(x) = sum_ij x_ij w_ij + penalty * sum_i (sum_j x_ij - 1)^2, expanded into
/// linear and quadratic terms plus the constant penalty * n.
class QuboInstance {
   public:
    QuboInstance() = default;
    /// Terms must be sorted by (a, b), unique, and reference valid variables;
    /// throws std::invalid_argument otherwise.
    QuboInstance(int num_syndromes, int64_t penalty, std::vector<QuboVariable> variables, std::vector<QuboTerm> terms);

    int num_syndromes() const { return n_; }
    int num_variables() const { return static_cast<int>(variables_.size()); }
    int64_t penalty() const { return penalty_; }
    const std::vector<QuboVariable>& variables() const { return variables_; }
    const std::vector<QuboTerm>& terms() const { return terms_; }
    Energy offset() const { return {2 * penalty_ * n_}; }

    int64_t linear_halves(int var) const { return linear_[static_cast<size_t>(var)]; }
    /// (other variable, coefficient) pairs coupled to `var`.
    std::span<const std::pair<int, int64_t>> couplings(int var) const;

    /// Throws std::invalid_argument when the assignment length is wrong.
    Energy energy(std::span<const uint8_t> x) const;
    /// Energy change from flipping variable `var` of `x`.
    int64_t flip_delta_halves(std::span<const uint8_t> x, int var) const;

   private:
    int n_ = 0;
    int64_t penalty_ = 0;
    std::vector<QuboVariable> variables_;
    std::vector<QuboTerm> terms_;
    std::vector<int64_t> linear_;
    std::vector<int32_t> coupling_offsets_;
    std::vector<std::pair<int, int64_t>> couplings_;
};

/// Penalty d^2; one variable per finite unordered pair.
QuboInstance build_qubo(const WeightMatrix& wm, int d);

/// Free-function form of QuboInstance::energy.
inline Energy energy(const QuboInstance& q, std::span<const uint8_t> x) { return q.energy(x); }

/// True when every syndrome row of `x` sums to exactly one.
bool satisfies_one_hot(const QuboInstance& q, std::span<const uint8_t> x);

/// Text serialization:
///   q ohq <n_syndromes> <n_variables> <penalty>
///   v <var_idx> <i> <j>
///   c <var_a> <var_b> <num>/<den>
std::string export_qubo(const QuboInstance& q);

/// Inverse of export_qubo. Errors are std::invalid_argument with a
/// "line N:" prefix.
QuboInstance parse_qubo(std::string_view text);

}  // namespace some

#endif  // SOME_OHQ_HPP
