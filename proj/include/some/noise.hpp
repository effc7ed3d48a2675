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

#ifndef SOME_NOISE_HPP
#define SOME_NOISE_HPP

#include <cstdint>
#include <random>

#include "some/error_pattern.hpp"
#include "some/lattice.hpp"

namespace some {

/// A master seed plus a stream id (normally the trial index). The pair alone
/// determines every random draw made for that trial.
struct RngSeed {
    uint64_t seed = 0;
    uint64_t stream = 0;
};

/// Independent generators derived from one RngSeed.
enum class RngPurpose : uint32_t { errors = 0, correction_paths = 1, anneal = 2 };

class TrialRng {
   public:
    TrialRng(RngSeed seed, RngPurpose purpose);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool coin() { return (engine_() >> 63) != 0; }
    uint64_t next() { return engine_(); }

   private:
    std::mt19937_64 engine_;
};

/// Flips every data qubit independently with probability p.
/// Throws std::invalid_argument unless 0 <= p <= 1.
ErrorPattern sample_errors(const Lattice& lat, double p, RngSeed rng);

/// Ancillas with an odd number of flipped neighbours.
/// Throws std::invalid_argument on a length mismatch.
SyndromeSet extract_syndrome(const Lattice& lat, const ErrorPattern& e);

}  // namespace some

#endif  // SOME_NOISE_HPP
