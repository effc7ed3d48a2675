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


#include "some/correct.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "test_util.hpp"

namespace some {
namespace {

TEST(DecoderKindTest, NamesRoundTrip) {
    for (auto k : {DecoderKind::some, DecoderKind::anneal, DecoderKind::exact}) {
        EXPECT_EQ(parse_decoder_kind(to_string(k)), k);
    }
    EXPECT_THROW(parse_decoder_kind("mwpm"), std::invalid_argument);
    EXPECT_THROW(parse_decoder_kind("SOME"), std::invalid_argument);
}

TEST(PathCorrectionTest, ProducesExactlyTheEndpointsAtChainWeight) {
    const int d = 7;
    const Lattice lat(d);
    TrialRng rng({1, 0}, RngPurpose::correction_paths);
    for (int r1 = 1; r1 < d; ++r1)
        for (int c1 = 0; c1 < d; ++c1)
            for (int r2 = 1; r2 < d; ++r2)
                for (int c2 = 0; c2 < d; ++c2) {
                    const auto a = lat.ancilla({r1, c1});
                    const auto b = lat.ancilla({r2, c2});
                    const auto c = path_correction(lat, a, b, rng);
                    std::set<oracle::Cell> want{{r1, c1}, {r2, c2}};
                    if (a == b) want = {{r1, c1}};
                    ASSERT_EQ(oracle::syndrome_of(d, c.set_bits()), want);
                    ASSERT_EQ(static_cast<int>(c.count()), *lat.chain_weight(a, b));
                }
}

TEST(PathCorrectionTest, RejectsInertChecks) {
    const Lattice lat(5);
    EXPECT_THROW(path_correction(lat, lat.ancilla({0, 1}), lat.ancilla({1, 1}), RngSeed{}), std::invalid_argument);
}

TEST(PathCorrectionTest, OrientationCoinIsFair) {
    const Lattice lat(5);
    const auto a = lat.ancilla({1, 0});
    const auto b = lat.ancilla({3, 2});
    TrialRng rng({2026, 0}, RngPurpose::correction_paths);
    const int draws = 10000;
    int horizontal_first = 0;
    for (int k = 0; k < draws; ++k) horizontal_first += path_correction(lat, a, b, rng).test(lat.horizontal(1, 0));
    EXPECT_NEAR(static_cast<double>(horizontal_first) / draws, 0.5, 0.02);
}

TEST(PathCorrectionTest, StraightRoutesConsumeNoCoin) {
    const Lattice lat(5);
    TrialRng used({4, 0}, RngPurpose::correction_paths);
    TrialRng fresh({4, 0}, RngPurpose::correction_paths);
    path_correction(lat, lat.ancilla({2, 0}), lat.ancilla({2, 3}), used);
    path_correction(lat, lat.ancilla({1, 1}), lat.ancilla({3, 1}), used);
    path_correction(lat, lat.ancilla({1, 1}), lat.ancilla({1, 1}), used);
    EXPECT_EQ(used.next(), fresh.next());
}

TEST(MatchingCorrectionTest, ClearsTheSyndrome) {
    for (int d : {5, 9, 13}) {
        const Lattice lat(d);
        for (uint64_t t = 0; t < 200; ++t) {
            const auto e = sample_errors(lat, 0.04, {8, t});
            const auto s = extract_syndrome(lat, e);
            const auto wm = build_weight_matrix(lat, s);
            const auto out = decode(wm);
            if (!out.feasible) continue;
            TrialRng rng({8, t}, RngPurpose::correction_paths);
            const auto c = matching_correction(lat, wm, out.vector, rng);
            EXPECT_EQ(extract_syndrome(lat, c), s);
            EXPECT_TRUE(extract_syndrome(lat, e ^ c).empty());
        }
    }
}

TEST(DecodeWithTest, ExactFallsBackAboveLimit) {
    WeightMatrix wm(kMaxInvolutionSize + 2, 41);
    for (int i = 0; i < wm.size(); ++i) wm.set_chain(i, i, 1);
    const auto out = decode_with(wm, DecoderKind::exact, {}, {});
    EXPECT_FALSE(out.feasible);
    EXPECT_TRUE(is_involution(out.vector));
    const auto some = decode_with(wm, DecoderKind::some, {}, {});
    EXPECT_TRUE(some.feasible);
}

TEST(DecodeWithTest, AllKindsAgreeOnSmallInstances) {
    const Lattice lat(9);
    uint64_t stream = 0;
    for (int t = 0; t < 100; ++t) {
        const auto s = testing::sample_syndrome_in(lat, 0.02, 31, stream, 1, 4);
        const auto wm = build_weight_matrix(lat, s);
        const auto exact = decode_with(wm, DecoderKind::exact, {}, {31, stream});
        const auto sa = decode_with(wm, DecoderKind::anneal, {}, {31, stream});
        const auto some = decode_with(wm, DecoderKind::some, {}, {31, stream});
        EXPECT_TRUE(exact.feasible);
        EXPECT_LE(exact.energy, some.energy);
        if (sa.feasible) EXPECT_LE(exact.energy, sa.energy);
    }
}

TEST(RunTrialTest, DeterministicAndSound) {
    const Lattice lat(9);
    for (auto kind : {DecoderKind::some, DecoderKind::exact, DecoderKind::anneal}) {
        for (uint64_t t = 0; t < 50; ++t) {
            const auto a = run_trial(lat, 0.05, kind, {12, t});
            const auto b = run_trial(lat, 0.05, kind, {12, t});
            EXPECT_EQ(a.success, b.success);
            EXPECT_EQ(a.logical_failure, b.logical_failure);
            EXPECT_EQ(a.n_flipped, b.n_flipped);
            EXPECT_EQ(a.energy, b.energy);
            EXPECT_TRUE(a.is_involution);
            if (!a.infeasible) EXPECT_TRUE(a.residual_clean);
            EXPECT_EQ(a.success, !a.logical_failure && !a.infeasible && a.residual_clean);
            EXPECT_EQ(a.n_vars_some, a.n_flipped);
        }
    }
}

TEST(RunTrialTest, NoErrorsNoFailure) {
    const Lattice lat(5);
    const auto r = run_trial(lat, 0.0, DecoderKind::some, {1, 1});
    EXPECT_TRUE(r.success);
    EXPECT_EQ(r.n_flipped, 0);
    EXPECT_EQ(r.n_vars_ohq, 0);
}

TEST(RunTrialTest, LogicalChainIsAFailure) {
    const int d = 5;
    const Lattice lat(d);
    ErrorPattern e(static_cast<size_t>(lat.num_data_qubits()));
    e.set(lat.top_stub(2));
    e.set(lat.vertical(1, 2));
    e.set(lat.vertical(2, 2));
    // Three of five column errors: the decoder completes the chain downward.
    const auto r = run_trial_on(lat, e, DecoderKind::some, {1, 0});
    EXPECT_TRUE(r.residual_clean);
    EXPECT_TRUE(r.logical_failure);
    EXPECT_FALSE(r.success);

    ErrorPattern one(static_cast<size_t>(lat.num_data_qubits()));
    one.set(lat.vertical(1, 2));
    EXPECT_TRUE(run_trial_on(lat, one, DecoderKind::some, {1, 0}).success);
}

}  // namespace
}  // namespace some
