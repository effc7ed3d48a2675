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

#ifndef SOME_SYNDROME_IO_HPP
#define SOME_SYNDROME_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "some/correct.hpp"

namespace some {

/// Single-instance input:
///   d <distance>
///   s <ancilla_row> <ancilla_col>     (zero or more)
/// Blank lines and lines starting with '#' are ignored.
struct SyndromeFile {
    int distance = 0;
    std::vector<AncillaCoord> flipped;
};

/// Throws std::invalid_argument with a "line N:" prefix on malformed input,
/// out-of-grid coordinates, or repeated syndromes.
SyndromeFile parse_syndrome_file(std::string_view text);

/// Sorted syndrome set for `file` on `lat`.
SyndromeSet to_syndrome_set(const Lattice& lat, const SyndromeFile& file);

struct DecodeReport {
    SyndromeSet syndrome;
    DecodeOutcome outcome;
    Correction correction;
    /// Matching, energy, feasibility, and correction as a JSON object.
    std::string json;
};

/// Decodes one syndrome; the correction paths use stream 0 of `seed`.
DecodeReport decode_report(const Lattice& lat, const SyndromeSet& s, DecoderKind decoder, uint64_t seed,
                           const TrialOptions& options = {});

}  // namespace some

#endif  // SOME_SYNDROME_IO_HPP
