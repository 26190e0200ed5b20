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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frselect/rng.hpp"
#include "frselect/sampling.hpp"
#include "frselect/select.hpp"

namespace frselect {

/// Draw s of n balls, r of them red, and ask whether the red count reaches
/// r s / n + g.
struct TailExperiment {
    std::int64_t n_balls = 0;
    std::int64_t r_red = 0;
    std::int64_t s_draws = 0;
    double g = 0.0;
    std::int64_t trials = 0;
    bool with_replacement = false;  // binomial instead of hypergeometric draws
};

/// exp(-2 g^2 / s), the tail bound for both draw models.
double tail_bound(std::int64_t s, double g);

/// Exact P[r' >= p s + g] by summing the hypergeometric (or binomial) pmf.
double tail_probability_exact(const TailExperiment& exp);

/// Monte-Carlo frequency of {r' >= p s + g} over exp.trials experiments.
/// Throws std::invalid_argument on inconsistent parameters.
double hypergeometric_tail_empirical(const TailExperiment& exp, Rng& rng);

/// Nine (n, r, s, g) points with nontrivial bounds.
std::vector<TailExperiment> default_tail_grid(std::int64_t trials);

enum class DeviationCase { kLeft, kMiddle, kRight };

const char* deviation_case_name(DeviationCase c);

struct DeviationEvent {
    std::string name;     // e.g. "v < x*[k_r]"
    std::int64_t threshold_rank = 0;  // 1-based rank the pivot is compared against
    std::int64_t count = 0;
    double frequency = 0.0;
};

struct DeviationReport {
    DeviationCase which = DeviationCase::kLeft;
    std::int64_t n = 0;
    std::int64_t k = 0;  // 1-based
    SamplePlan plan;
    std::int64_t iv = 0;
    double bound = 0.0;
    std::int64_t trials = 0;
    std::vector<DeviationEvent> events;
};

/// Which side of the pivot analysis rank k (1-based) of n falls on under
/// the given rule.
DeviationCase classify_rank(std::int64_t k, std::int64_t n, const SamplePlan& plan, PivotRule rule);

/// Runs only sample placement and pivot selection, `trials` times, on a copy
/// of `input`, and counts how often the pivot lands outside each rank bound
/// that applies to the case of k:
///   left   v < x*[k] (only when i_v is unclamped) and x*[k_r] < v
///   right  x*[k] < v (only when i_v is unclamped) and v < x*[k_l]
///   middle v < x*[j_l] and x*[j_r] < v
/// x*[j] is the j-th smallest input element.
DeviationReport pivot_rank_deviation_test(std::span<const double> input, std::int64_t k, const AlgoConfig& cfg,
                                          std::int64_t trials, Rng& rng);

/// Same on a random permutation of 1..n drawn from rng.
DeviationReport pivot_rank_deviation_test(std::int64_t n, std::int64_t k, const AlgoConfig& cfg, std::int64_t trials,
                                          Rng& rng);

/// One named check of the bound suite.
struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct BoundSuiteOptions {
    std::int64_t tail_trials = 100000;
    std::int64_t deviation_n = 10000;
    std::int64_t deviation_trials = 10000;
    double sigmas = 4.0;
    std::uint64_t seed = 1;
    AlgoConfig cfg{};
};

/// Tail bound on the default grid (exact sums against the bound, Monte Carlo
/// against the exact values), one binomial spot check, and the left, middle
/// and right pivot-rank deviation cases.
std::vector<CheckLine> run_bound_suite(const BoundSuiteOptions& opts);

/// 4-sigma style binomial tolerance: sigmas * sqrt(p (1 - p) / trials).
double binomial_tolerance(double p, std::int64_t trials, double sigmas);

}  // namespace frselect
