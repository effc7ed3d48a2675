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

#include <gtest/gtest.h>

#include <cstdio>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "test_util.hpp"

namespace some {
namespace {

constexpr double kPinnedAnnealAgreementD5 = 1.0;
constexpr double kPinnedAnnealAgreementD9 = 0.95;

TEST(ExhaustiveTest, MatchesBruteForceOracle) {
    std::mt19937_64 gen(3);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + t % 5;
        const auto wm = testing::random_weight_matrix(n, 5, 4, 0.3, gen);
        const auto q = build_qubo(wm, 5);
        if (q.num_variables() > 12) continue;
        const auto ref = testing::oracle_qubo(wm);
        const auto brute = oracle::brute_qubo_min(n, 25, ref.vars, ref.cost);
        const auto got = solve_exhaustive(q);
        ASSERT_TRUE(got.optimal);
        ASSERT_EQ(got.energy.halves, brute.halves);
        uint64_t mask = 0;
        for (size_t b = 0; b < got.assignment.size(); ++b) mask |= uint64_t{got.assignment[b]} << b;
        ASSERT_EQ(mask, brute.mask);
        ASSERT_EQ(q.energy(got.assignment), got.energy);
    }
}

TEST(ExhaustiveTest, TiesGoToLowestMask) {
    // Boundary matches (mask 0b101) and the pair (mask 0b010) both cost 2.
    WeightMatrix wm(2, 5);
    wm.set_chain(0, 0, 1);
    wm.set_chain(1, 1, 1);
    wm.set_chain(0, 1, 2);
    const auto got = solve_exhaustive(build_qubo(wm, 5));
    EXPECT_EQ(got.assignment, (Assignment{0, 1, 0}));
    EXPECT_EQ(got.energy.value(), 2.0);
}

TEST(ExhaustiveTest, RejectsLargeInstances) {
    WeightMatrix wm(7, 9);
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) wm.set_chain(i, j, 1);
    const auto q = build_qubo(wm, 9);
    ASSERT_GT(q.num_variables(), kMaxExhaustiveVariables);
    EXPECT_THROW(solve_exhaustive(q), std::length_error);
}

TEST(InvolutionTest, MatchesRecursiveEnumeration) {
    std::mt19937_64 gen(8);
    for (int t = 0; t < 1500; ++t) {
        const int n = t % 10;
        const auto wm = testing::random_weight_matrix(n, 7, 5, 0.35, gen);
        const auto got = solve_involutions(wm);
        const auto ref = oracle::involution_min(testing::half_table(wm), wm.stranded_cost().halves());
        ASSERT_TRUE(is_involution(got.vector));
        ASSERT_EQ(got.energy.halves, ref.halves) << "n=" << n;
        ASSERT_EQ(outcome_energy(wm, got.vector), got.energy);
        ASSERT_EQ(got.feasible, is_feasible_matching(wm, got.vector));
        for (int i = 0; i < n; ++i)
            if (got.vector[i] != i) ASSERT_TRUE(wm.pair_cost(i, got.vector[i]).is_finite());
    }
}

TEST(InvolutionTest, HandlesLimitSize) {
    WeightMatrix wm(kMaxInvolutionSize, 41);
    for (int i = 0; i < kMaxInvolutionSize; ++i) {
        wm.set_chain(i, i, 5);
        if (i + 1 < kMaxInvolutionSize) wm.set_chain(i, i + 1, 1);
    }
    const auto got = solve_involutions(wm);
    EXPECT_EQ(got.energy.value(), kMaxInvolutionSize / 2.0);
    EXPECT_THROW(solve_involutions(WeightMatrix(kMaxInvolutionSize + 1, 41)), std::length_error);
}

TEST(AnnealTest, ScheduleValidation) {
    EXPECT_NO_THROW(AnnealSchedule{}.validate());
    EXPECT_THROW((AnnealSchedule{.sweeps = 0}).validate(), std::invalid_argument);
    EXPECT_THROW((AnnealSchedule{.restarts = 0}).validate(), std::invalid_argument);
    EXPECT_THROW((AnnealSchedule{.beta_start = 2.0, .beta_end = 1.0}).validate(), std::invalid_argument);
    EXPECT_THROW((AnnealSchedule{.beta_start = 0.0}).validate(), std::invalid_argument);
}

TEST(AnnealTest, DeterministicForSeed) {
    WeightMatrix wm(4, 9);
    wm.set_chain(0, 1, 2);
    wm.set_chain(2, 3, 2);
    wm.set_chain(1, 2, 2);
    wm.set_chain(0, 0, 3);
    const auto q = build_qubo(wm, 9);
    AnnealSchedule s;
    s.seed = {77, 5};
    const auto a = solve_anneal(q, s);
    const auto b = solve_anneal(q, s);
    EXPECT_EQ(a.assignment, b.assignment);
    EXPECT_EQ(a.energy, q.energy(a.assignment));
    EXPECT_FALSE(a.optimal);
}

TEST(AnnealTest, EmptyInstance) {
    const auto q = build_qubo(WeightMatrix(0, 5), 5);
    const auto r = solve_anneal(q);
    EXPECT_TRUE(r.assignment.empty());
    EXPECT_EQ(r.energy.halves, 0);
}

struct Agreement {
    int agree = 0;
    int total = 0;
    double rate() const { return static_cast<double>(agree) / total; }
};

// 1000 sampled instances at distance d with at most ten QUBO variables.
Agreement anneal_agreement(int d) {
    Agreement a;
    uint64_t stream = 0;
    const Lattice lat(d);
    while (a.total < 1000) {
        const auto s = testing::sample_syndrome_in(lat, 0.02 + 0.01 * (a.total % 4), 515, stream, 1, 6);
        const auto wm = build_weight_matrix(lat, s);
        const auto q = build_qubo(wm, d);
        if (q.num_variables() > 10) continue;
        const auto exact = solve_exhaustive(q);
        AnnealSchedule schedule;
        schedule.seed = {515, stream};
        const auto sa = solve_anneal(q, schedule);
        EXPECT_GE(sa.energy, exact.energy);
        ++a.total;
        a.agree += sa.energy == exact.energy;
    }
    std::printf("d=%d anneal agreement: %d / %d = %.4f\n", d, a.agree, a.total, a.rate());
    return a;
}

TEST(AnnealTest, AgreementWithExhaustiveSearch) {
    const auto a = anneal_agreement(5);
    EXPECT_GE(a.rate(), 0.99);
    EXPECT_GE(a.rate(), kPinnedAnnealAgreementD5);
}

// The penalty grows as d^2, so barriers between one-hot states outgrow the
// fixed starting temperature; the rate at d = 9 is pinned separately.
TEST(AnnealTest, AgreementAtDistanceNine) {
    EXPECT_GE(anneal_agreement(9).rate(), kPinnedAnnealAgreementD9);
}

TEST(AnnealTest, SingleVariableWithPositiveCoefficient) {
    const QuboInstance q(1, 0, {{0, 0}}, {{0, 0, 2}});
    const auto r = solve_anneal(q);
    EXPECT_EQ(r.assignment, (Assignment{0}));
    EXPECT_EQ(r.energy.halves, 0);
}

TEST(MatchingConversionTest, RoundTrip) {
    WeightMatrix wm(3, 5);
    wm.set_chain(0, 0, 1);
    wm.set_chain(1, 1, 2);
    wm.set_chain(2, 2, 1);
    wm.set_chain(0, 2, 1);
    wm.set_chain(1, 2, 2);
    const auto q = build_qubo(wm, 5);
    for (const PermutationVector& v : {PermutationVector{0, 1, 2}, PermutationVector{2, 1, 0},
                                       PermutationVector{0, 2, 1}}) {
        const auto x = matching_to_assignment(q, v);
        EXPECT_TRUE(satisfies_one_hot(q, x));
        EXPECT_EQ(assignment_to_matching(q, x), v);
        EXPECT_EQ(q.energy(x), outcome_energy(wm, v));
    }
    EXPECT_THROW(matching_to_assignment(q, {1, 0, 2}), std::invalid_argument);
    EXPECT_THROW(matching_to_assignment(q, {1, 2, 0}), std::invalid_argument);
    EXPECT_FALSE(assignment_to_matching(q, Assignment(static_cast<size_t>(q.num_variables()), 0)).has_value());
    EXPECT_FALSE(assignment_to_matching(q, Assignment(static_cast<size_t>(q.num_variables()), 1)).has_value());
}

}  // namespace
}  // namespace some
