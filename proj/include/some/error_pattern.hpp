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

#ifndef SOME_ERROR_PATTERN_HPP
#define SOME_ERROR_PATTERN_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "some/lattice.hpp"

namespace some {

/// One bit per data qubit; set bits are X flips. Corrections share the type.
class ErrorPattern {
   public:
    ErrorPattern() = default;
    explicit ErrorPattern(size_t num_qubits) : bits_(num_qubits, 0) {}

    size_t size() const { return bits_.size(); }
    bool test(QubitIndex q) const { return bits_.at(static_cast<size_t>(q)) != 0; }
    void set(QubitIndex q, bool value = true) { bits_.at(static_cast<size_t>(q)) = value ? 1 : 0; }
    void flip(QubitIndex q) { bits_.at(static_cast<size_t>(q)) ^= 1; }

    size_t count() const;
    bool none() const { return count() == 0; }
    std::vector<QubitIndex> set_bits() const;

    /// Throws std::invalid_argument on length mismatch.
    ErrorPattern& operator^=(const ErrorPattern& other);
    friend ErrorPattern operator^(ErrorPattern lhs, const ErrorPattern& rhs) { return lhs ^= rhs; }
    friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;

   private:
    std::vector<uint8_t> bits_;
};

using Correction = ErrorPattern;

/// Sorted, duplicate-free indices of ancillas reporting -1.
struct SyndromeSet {
    std::vector<AncillaIndex> flipped;

    size_t size() const { return flipped.size(); }
    bool empty() const { return flipped.empty(); }
    friend bool operator==(const SyndromeSet&, const SyndromeSet&) = default;
};

/// Validates ordering, uniqueness, and range against `lat`; throws
/// std::invalid_argument otherwise.
SyndromeSet make_syndrome_set(const Lattice& lat, std::vector<AncillaIndex> flipped);

/// Parity of `residual` over a horizontal cut. The residual must have an empty
/// syndrome (std::invalid_argument otherwise); true means a logical failure.
bool logical_cut_parity(const Lattice& lat, const ErrorPattern& residual, size_t cut_index = 0);

}  // namespace some

#endif  // SOME_ERROR_PATTERN_HPP
