// Copyright 2026 The frselect Authors
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

#include "frselect/validation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"

using namespace frselect;
using frselect::testing::tail_by_enumeration;

TEST(tail, bound_formula) {
    EXPECT_NEAR(tail_bound(20, 5.0), std::exp(-2.5), 1e-15);
    EXPECT_DOUBLE_EQ(tail_bound(10, 0.0), 1.0);
}

TEST(tail, exact_matches_enumeration) {
    const int cases[][3] = {{10, 4, 5}, {12, 6, 6}, {9, 2, 4}, {14, 7, 3}, {11, 10, 6}, {8, 0, 4}};
    for (const auto& c : cases) {
        for (double g : {0.0, 0.4, 1.0, 1.5}) {
            const TailExperiment exp{c[0], c[1], c[2], g, 1, false};
            EXPECT_NEAR(tail_probability_exact(exp), tail_by_enumeration(c[0], c[1], c[2], g), 1e-12)
                << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << g;
        }
    }
}

TEST(tail, exact_matches_reference_value) {
    // scipy.stats.hypergeom(100, 50, 20).sf(14)
    EXPECT_NEAR(tail_probability_exact({100, 50, 20, 5.0, 1, false}), 0.011417490505707758, 1e-12);
}

TEST(tail, binomial_exact_for_a_small_case) {
    // s = 4, p = 1/2, threshold 2 + 1 = 3: (4 + 1) / 16.
    EXPECT_NEAR(tail_probability_exact({10, 5, 4, 1.0, 1, true}), 5.0 / 16.0, 1e-14);
}

TEST(tail, degenerate_cases) {
    EXPECT_DOUBLE_EQ(tail_probability_exact({50, 0, 10, 0.5, 1, false}), 0.0);
    EXPECT_DOUBLE_EQ(tail_probability_exact({50, 50, 10, 0.0, 1, false}), 1.0);
    Rng rng(3);
    EXPECT_DOUBLE_EQ(hypergeometric_tail_empirical({50, 0, 10, 0.5, 100, false}, rng), 0.0);
    EXPECT_DOUBLE_EQ(hypergeometric_tail_empirical({50, 50, 10, 0.0, 100, false}, rng), 1.0);
}

TEST(tail, grid_respects_the_bound) {
    const auto grid = default_tail_grid(1);
    ASSERT_EQ(grid.size(), 9u);
    for (const TailExperiment& p : grid) {
        EXPECT_LE(tail_probability_exact(p), tail_bound(p.s_draws, p.g));
        EXPECT_LT(tail_bound(p.s_draws, p.g), 1.0);
    }
}

TEST(tail, monte_carlo_within_bound) {
    Rng rng(17);
    const std::int64_t trials = 100000;
    const TailExperiment exp{100, 50, 20, 5.0, trials, false};
    const double bound = tail_bound(20, 5.0);
    EXPECT_NEAR(bound, 0.0821, 5e-5);
    const double freq = hypergeometric_tail_empirical(exp, rng);
    EXPECT_LE(freq, bound + binomial_tolerance(bound, trials, 4.0));
    const double exact = tail_probability_exact(exp);
    EXPECT_NEAR(freq, exact, binomial_tolerance(exact, trials, 4.0));
}

TEST(tail, monte_carlo_with_replacement_matches_binomial) {
    Rng rng(18);
    const TailExperiment exp{40, 10, 30, 2.0, 100000, true};
    const double exact = tail_probability_exact(exp);
    EXPECT_NEAR(hypergeometric_tail_empirical(exp, rng), exact, binomial_tolerance(exact, exp.trials, 4.0));
}

TEST(tail, errors) {
    Rng rng(1);
    EXPECT_THROW(tail_probability_exact({10, 11, 5, 1.0, 1, false}), std::invalid_argument);
    EXPECT_THROW(tail_probability_exact({10, 5, 11, 1.0, 1, false}), std::invalid_argument);
    EXPECT_THROW(tail_probability_exact({0, 0, 0, 1.0, 1, false}), std::invalid_argument);
    EXPECT_THROW(hypergeometric_tail_empirical({10, 5, 5, 1.0, 0, false}, rng), std::invalid_argument);
}

TEST(binomial_tolerance, formula) {
    EXPECT_NEAR(binomial_tolerance(0.5, 100, 4.0), 0.2, 1e-15);
    EXPECT_DOUBLE_EQ(binomial_tolerance(0.0, 100, 4.0), 0.0);
}

TEST(deviation, classification) {
    const SamplePlan plan = compute_plan(10000, PlanVariant{}, 0.5, 0.25);
    EXPECT_EQ(classify_rank(1000, 10000, plan, PivotRule::kMedianModified), DeviationCase::kLeft);
    EXPECT_EQ(classify_rank(5000, 10000, plan, PivotRule::kMedianModified), DeviationCase::kMiddle);
    EXPECT_EQ(classify_rank(9000, 10000, plan, PivotRule::kMedianModified), DeviationCase::kRight);
    EXPECT_EQ(classify_rank(4999, 10000, plan, PivotRule::kStandard), DeviationCase::kLeft);
    EXPECT_EQ(classify_rank(5000, 10000, plan, PivotRule::kStandard), DeviationCase::kRight);
}

TEST(deviation, frequencies_within_bound) {
    const std::int64_t n = 10000, trials = 3000;
    Rng rng(5);
    for (std::int64_t k : {n / 10, (n + 1) / 2, n - n / 10}) {
        for (PivotRule rule : {PivotRule::kMedianModified, PivotRule::kStandard}) {
            AlgoConfig cfg;
            cfg.pivot_rule = rule;
            const DeviationReport rep = pivot_rank_deviation_test(n, k, cfg, trials, rng);
            ASSERT_FALSE(rep.events.empty());
            const double limit = rep.bound + binomial_tolerance(rep.bound, trials, 4.0);
            for (const DeviationEvent& e : rep.events) {
                EXPECT_LE(e.frequency, limit) << e.name << " k=" << k;
                EXPECT_GE(e.threshold_rank, 1);
                EXPECT_LE(e.threshold_rank, n);
            }
        }
    }
}

TEST(deviation, case_specific_events) {
    const std::int64_t n = 10000;
    Rng rng(6);
    AlgoConfig cfg;
    const auto left = pivot_rank_deviation_test(n, 1000, cfg, 10, rng);
    EXPECT_EQ(left.which, DeviationCase::kLeft);
    ASSERT_EQ(left.events.size(), 2u);
    EXPECT_EQ(left.events[0].name, "v < x*[k]");
    const auto mid = pivot_rank_deviation_test(n, 5000, cfg, 10, rng);
    EXPECT_EQ(mid.which, DeviationCase::kMiddle);
    EXPECT_EQ(mid.iv, (mid.plan.s + 1) / 2);
    // At k = n the standard rank ceil(s - g) stays above 1, so the k event applies.
    cfg.pivot_rule = PivotRule::kStandard;
    const auto clamped = pivot_rank_deviation_test(100000, 100000, cfg, 5, rng);
    EXPECT_EQ(clamped.which, DeviationCase::kRight);
    EXPECT_EQ(clamped.events.front().name, "x*[k] < v");
}

TEST(deviation, all_equal_input_never_deviates) {
    const std::vector<double> same(5000, 2.0);
    Rng rng(7);
    for (std::int64_t k : {1, 2500, 5000}) {
        const auto rep = pivot_rank_deviation_test(std::span<const double>(same), k, AlgoConfig{}, 200, rng);
        for (const DeviationEvent& e : rep.events) EXPECT_EQ(e.count, 0);
    }
}

TEST(deviation, errors) {
    Rng rng(1);
    EXPECT_THROW(pivot_rank_deviation_test(1, 1, AlgoConfig{}, 10, rng), std::invalid_argument);
    EXPECT_THROW(pivot_rank_deviation_test(100, 0, AlgoConfig{}, 10, rng), std::invalid_argument);
    EXPECT_THROW(pivot_rank_deviation_test(100, 101, AlgoConfig{}, 10, rng), std::invalid_argument);
    EXPECT_THROW(pivot_rank_deviation_test(100, 5, AlgoConfig{}, 0, rng), std::invalid_argument);
}

TEST(bound_suite, passes_with_reduced_trials) {
    BoundSuiteOptions opts;
    opts.tail_trials = 20000;
    opts.deviation_n = 5000;
    opts.deviation_trials = 2000;
    const auto lines = run_bound_suite(opts);
    EXPECT_GE(lines.size(), 14u);
    for (const CheckLine& line : lines) EXPECT_TRUE(line.passed) << line.name << ": " << line.detail;
}
