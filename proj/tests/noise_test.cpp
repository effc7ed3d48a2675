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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"

namespace some {
namespace {

std::set<oracle::Cell> as_cells(const Lattice& lat, const SyndromeSet& s) {
    std::set<oracle::Cell> out;
    for (auto a : s.flipped) out.insert({lat.coord(a).row, lat.coord(a).col});
    return out;
}

// Products of plaquettes (syndrome-free, trivial) plus `logicals` copies of a
// straight top-to-bottom column chain.
ErrorPattern random_cycle(const Lattice& lat, std::mt19937_64& gen, int logicals) {
    const int d = lat.distance();
    ErrorPattern e(static_cast<size_t>(lat.num_data_qubits()));
    std::bernoulli_distribution coin(0.5);
    for (int j = 0; j + 1 < d; ++j) {
        if (coin(gen)) {
            e.flip(lat.top_stub(j));
            e.flip(lat.top_stub(j + 1));
            e.flip(lat.horizontal(1, j));
        }
        if (coin(gen)) {
            e.flip(lat.bottom_stub(j));
            e.flip(lat.bottom_stub(j + 1));
            e.flip(lat.horizontal(d - 1, j));
        }
        for (int i = 1; i <= d - 2; ++i) {
            if (!coin(gen)) continue;
            e.flip(lat.vertical(i, j));
            e.flip(lat.vertical(i, j + 1));
            e.flip(lat.horizontal(i, j));
            e.flip(lat.horizontal(i + 1, j));
        }
    }
    std::uniform_int_distribution<int> col(0, d - 1);
    for (int k = 0; k < logicals; ++k) {
        const int c = col(gen);
        e.flip(lat.top_stub(c));
        e.flip(lat.bottom_stub(c));
        for (int i = 1; i <= d - 2; ++i) e.flip(lat.vertical(i, c));
    }
    return e;
}

TEST(NoiseTest, SyndromeMatchesParityOracle) {
    for (int d : {3, 5, 9}) {
        const Lattice lat(d);
        for (uint64_t t = 0; t < 50; ++t) {
            const auto e = sample_errors(lat, 0.1, {7, t});
            EXPECT_EQ(as_cells(lat, extract_syndrome(lat, e)), oracle::syndrome_of(d, e.set_bits()));
        }
    }
}

TEST(NoiseTest, SyndromeExtractionIsLinearOverGf2) {
    const Lattice lat(9);
    for (uint64_t t = 0; t < 200; ++t) {
        const auto a = sample_errors(lat, 0.07, {1, t});
        const auto b = sample_errors(lat, 0.2, {2, t});
        const auto sa = as_cells(lat, extract_syndrome(lat, a));
        const auto sb = as_cells(lat, extract_syndrome(lat, b));
        std::set<oracle::Cell> sym;
        for (const auto& c : sa)
            if (!sb.count(c)) sym.insert(c);
        for (const auto& c : sb)
            if (!sa.count(c)) sym.insert(c);
        EXPECT_EQ(as_cells(lat, extract_syndrome(lat, a ^ b)), sym);
    }
}

TEST(NoiseTest, SamplingIsDeterministicPerStream) {
    const Lattice lat(13);
    EXPECT_EQ(sample_errors(lat, 0.1, {42, 3}), sample_errors(lat, 0.1, {42, 3}));
    EXPECT_NE(sample_errors(lat, 0.1, {42, 3}), sample_errors(lat, 0.1, {42, 4}));
    EXPECT_NE(sample_errors(lat, 0.1, {42, 3}), sample_errors(lat, 0.1, {43, 3}));
}

TEST(NoiseTest, SamplingEdgeRates) {
    const Lattice lat(5);
    EXPECT_TRUE(sample_errors(lat, 0.0, {1, 0}).none());
    EXPECT_EQ(sample_errors(lat, 1.0, {1, 0}).count(), static_cast<size_t>(lat.num_data_qubits()));
    EXPECT_THROW(sample_errors(lat, -0.01, {1, 0}), std::invalid_argument);
    EXPECT_THROW(sample_errors(lat, 1.5, {1, 0}), std::invalid_argument);
}

TEST(NoiseTest, SampledRateIsUnbiased) {
    const Lattice lat(25);
    const double p = 0.03;
    double flips = 0;
    const int trials = 2000;
    for (int t = 0; t < trials; ++t) flips += static_cast<double>(sample_errors(lat, p, {9, uint64_t(t)}).count());
    const double n = static_cast<double>(trials) * lat.num_data_qubits();
    const double sigma = std::sqrt(n * p * (1 - p));
    EXPECT_NEAR(flips, n * p, 5 * sigma);
}

TEST(NoiseTest, UniformStaysInUnitInterval) {
    TrialRng rng({5, 0}, RngPurpose::errors);
    for (int k = 0; k < 10000; ++k) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(NoiseTest, PurposesGiveIndependentStreams) {
    TrialRng a({5, 0}, RngPurpose::errors);
    TrialRng b({5, 0}, RngPurpose::correction_paths);
    TrialRng c({5, 0}, RngPurpose::errors);
    const auto x = a.next();
    EXPECT_NE(x, b.next());
    EXPECT_EQ(x, c.next());
}

TEST(NoiseTest, CutParityIsIndependentOfCut) {
    const Lattice lat(7);
    std::mt19937_64 gen(11);
    for (int t = 0; t < 300; ++t) {
        const int logicals = t % 3;
        const auto e = random_cycle(lat, gen, logicals);
        ASSERT_TRUE(extract_syndrome(lat, e).empty());
        for (size_t c = 0; c < lat.cuts().size(); ++c) {
            EXPECT_EQ(logical_cut_parity(lat, e, c), logicals % 2 == 1) << "cut " << c;
        }
    }
}

TEST(NoiseTest, CutParityRequiresCleanSyndrome) {
    const Lattice lat(5);
    ErrorPattern e(static_cast<size_t>(lat.num_data_qubits()));
    e.set(lat.horizontal(2, 1));
    EXPECT_THROW(logical_cut_parity(lat, e), std::invalid_argument);
    e.set(lat.horizontal(2, 1), false);
    EXPECT_THROW(logical_cut_parity(lat, e, lat.cuts().size()), std::out_of_range);
}

TEST(NoiseTest, SyndromeSetValidation) {
    const Lattice lat(5);
    EXPECT_NO_THROW(make_syndrome_set(lat, {5, 6, 29}));
    EXPECT_THROW(make_syndrome_set(lat, {6, 5}), std::invalid_argument);
    EXPECT_THROW(make_syndrome_set(lat, {5, 5}), std::invalid_argument);
    EXPECT_THROW(make_syndrome_set(lat, {30}), std::invalid_argument);
    EXPECT_THROW(extract_syndrome(lat, ErrorPattern(3)), std::invalid_argument);
}

TEST(NoiseTest, ErrorPatternBitOps) {
    ErrorPattern a(8), b(8);
    a.set(1);
    a.set(5);
    b.set(5);
    b.set(7);
    const auto c = a ^ b;
    EXPECT_EQ(c.set_bits(), (std::vector<QubitIndex>{1, 7}));
    EXPECT_EQ(c.count(), 2u);
    EXPECT_FALSE(c.none());
    EXPECT_THROW(a ^= ErrorPattern(4), std::invalid_argument);
}

}  // namespace
}  // namespace some
