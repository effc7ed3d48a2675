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

#include "some/noise.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace some {

size_t ErrorPattern::count() const {
    return static_cast<size_t>(std::count(bits_.begin(), bits_.end(), uint8_t{1}));
}

std::vector<QubitIndex> ErrorPattern::set_bits() const {
    std::vector<QubitIndex> out;
    for (size_t q = 0; q < bits_.size(); ++q) {
        if (bits_[q]) out.push_back(static_cast<QubitIndex>(q));
    }
    return out;
}

ErrorPattern& ErrorPattern::operator^=(const ErrorPattern& other) {
    if (other.bits_.size() != bits_.size()) {
        throw std::invalid_argument("error pattern length mismatch: " + std::to_string(bits_.size()) + " vs " +
                                    std::to_string(other.bits_.size()));
    }
    for (size_t q = 0; q < bits_.size(); ++q) bits_[q] ^= other.bits_[q];
    return *this;
}

SyndromeSet make_syndrome_set(const Lattice& lat, std::vector<AncillaIndex> flipped) {
    for (size_t k = 0; k < flipped.size(); ++k) {
        if (flipped[k] < 0 || flipped[k] >= lat.num_syndromes()) {
            throw std::invalid_argument("syndrome index " + std::to_string(flipped[k]) + " out of range");
        }
        if (k > 0 && flipped[k] <= flipped[k - 1]) {
            throw std::invalid_argument("syndrome indices must be strictly increasing");
        }
    }
    return SyndromeSet{std::move(flipped)};
}

TrialRng::TrialRng(RngSeed seed, RngPurpose purpose) {
    std::seed_seq seq{static_cast<uint32_t>(seed.seed), static_cast<uint32_t>(seed.seed >> 32),
                      static_cast<uint32_t>(seed.stream), static_cast<uint32_t>(seed.stream >> 32),
                      static_cast<uint32_t>(purpose)};
    engine_.seed(seq);
}

ErrorPattern sample_errors(const Lattice& lat, double p, RngSeed rng) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("error probability must lie in [0, 1], got " + std::to_string(p));
    }
    ErrorPattern e(static_cast<size_t>(lat.num_data_qubits()));
    if (p == 0.0) return e;
    TrialRng gen(rng, RngPurpose::errors);
    for (QubitIndex q = 0; q < lat.num_data_qubits(); ++q) {
        // uniform() < 1 always, so p == 1 flips every qubit.
        if (gen.uniform() < p) e.set(q);
    }
    return e;
}

SyndromeSet extract_syndrome(const Lattice& lat, const ErrorPattern& e) {
    if (e.size() != static_cast<size_t>(lat.num_data_qubits())) {
        throw std::invalid_argument("error pattern has " + std::to_string(e.size()) + " bits, lattice has " +
                                    std::to_string(lat.num_data_qubits()) + " data qubits");
    }
    std::vector<uint8_t> parity(static_cast<size_t>(lat.num_syndromes()), 0);
    for (auto q : e.set_bits()) {
        for (auto a : lat.incidence(q)) parity[a] ^= 1;
    }
    SyndromeSet s;
    for (AncillaIndex a = 0; a < lat.num_syndromes(); ++a) {
        if (parity[a]) s.flipped.push_back(a);
    }
    return s;
}

bool logical_cut_parity(const Lattice& lat, const ErrorPattern& residual, size_t cut_index) {
    if (!extract_syndrome(lat, residual).empty()) {
        throw std::invalid_argument("logical parity is only defined for residuals with an empty syndrome");
    }
    const auto& cuts = lat.cuts();
    if (cut_index >= cuts.size()) throw std::out_of_range("cut index out of range");
    bool parity = false;
    for (auto q : cuts[cut_index]) parity ^= residual.test(q);
    return parity;
}

}  // namespace some
