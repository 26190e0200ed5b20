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

#include "frselect/select.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "frselect/rng.hpp"
#include "oracles.hpp"

using namespace frselect;
using frselect::testing::rank_truth;

namespace {

std::int64_t median3(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::array<std::int64_t, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return v[1];
}

// Direct transcription of the two rank rules, 1-based.
std::int64_t iv_reference(std::int64_t k, std::int64_t n, std::int64_t s, double g, PivotRule rule) {
    const double base = static_cast<double>(k) * static_cast<double>(s) / static_cast<double>(n);
    const auto up = static_cast<std::int64_t>(std::ceil(base + g));
    const auto down = static_cast<std::int64_t>(std::ceil(base - g));
    if (rule == PivotRule::kStandard) {
        return static_cast<double>(k) < static_cast<double>(n) / 2.0 ? std::min(up, s) : std::max(down, std::int64_t{1});
    }
    const auto half = static_cast<std::int64_t>(std::ceil(static_cast<double>(s) / 2.0));
    return std::clamp(median3(up, half, down), std::int64_t{1}, s);
}

std::vector<int> permutation(std::size_t n, Rng& rng) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.rand(i - 1)]);
    return v;
}

std::string check_outcome(const std::vector<int>& before, const std::vector<int>& after, Index l, Index r, Index k,
                          const SelectOutcome<int>& out) {
    const auto truth = rank_truth(std::span<const int>(before), l, r, k);
    if (out.value != truth.value) return "wrong value";
    if (out.k_minus != truth.k_minus || out.k_plus != truth.k_plus) return "wrong equal block";
    if (after[static_cast<std::size_t>(k)] != truth.value) return "x[k] not the selected value";
    for (Index m = l; m <= r; ++m) {
        const int e = after[static_cast<std::size_t>(m)];
        const bool ok = m < out.k_minus ? e < out.value : (m <= out.k_plus ? e == out.value : e > out.value);
        if (!ok) return "segment not arranged around the value";
    }
    std::vector<int> a(before.begin() + l, before.begin() + r + 1), b(after.begin() + l, after.begin() + r + 1);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return "multiset changed";
    for (Index m = 0; m < static_cast<Index>(before.size()); ++m) {
        if ((m < l || m > r) && before[static_cast<std::size_t>(m)] != after[static_cast<std::size_t>(m)]) {
            return "touched outside the segment";
        }
    }
    return {};
}

}  // namespace

TEST(compute_iv, standard_examples) {
    EXPECT_EQ(compute_iv_standard(1, 100, 10, 2.0), 3);
    EXPECT_EQ(compute_iv_standard(100, 100, 10, 2.0), 8);
    EXPECT_EQ(compute_iv_standard(50, 100, 10, 2.0), 3);  // k = n/2 takes the lower branch
    EXPECT_EQ(compute_iv_standard(1, 100, 10, 50.0), 10);
    EXPECT_EQ(compute_iv_standard(100, 100, 10, 50.0), 1);
}

TEST(compute_iv, modified_examples) {
    EXPECT_EQ(compute_iv_modified(50, 100, 10, 2.0), 5);
    EXPECT_EQ(compute_iv_modified(1, 100, 10, 2.0), 3);
    EXPECT_EQ(compute_iv_modified(100, 100, 10, 2.0), 8);
    EXPECT_EQ(compute_iv_modified(500000, 1000000, 5000, 131.41), 2500);
    EXPECT_EQ(compute_iv_modified(1, 100, 10, 50.0), 5);
    EXPECT_EQ(compute_iv_modified(1, 3, 1, 0.0), 1);
}

TEST(compute_iv, matches_reference_exhaustively) {
    for (std::int64_t n = 1; n <= 120; ++n) {
        for (std::int64_t s = 1; s <= n; s += 1 + s / 4) {
            for (double g : {0.0, 0.5, 1.7, 3.0, 40.0}) {
                for (std::int64_t k = 1; k <= n; ++k) {
                    for (PivotRule rule : {PivotRule::kStandard, PivotRule::kMedianModified}) {
                        const auto iv = compute_iv(k, n, s, g, rule);
                        ASSERT_EQ(iv, iv_reference(k, n, s, g, rule)) << n << ' ' << s << ' ' << g << ' ' << k;
                        ASSERT_GE(iv, 1);
                        ASSERT_LE(iv, s);
                    }
                }
            }
        }
    }
}

TEST(compute_iv, rules_agree_away_from_the_median) {
    for (std::int64_t n = 2; n <= 200; ++n) {
        for (std::int64_t s = 1; s <= n; s += 1 + s / 3) {
            for (double g : {0.25, 1.0, 2.5, 6.0}) {
                for (std::int64_t k = 1; k <= n; ++k) {
                    const double offset = std::abs(static_cast<double>(k) - static_cast<double>(n) / 2.0);
                    if (offset * static_cast<double>(s) <= g * static_cast<double>(n)) continue;
                    ASSERT_EQ(compute_iv_standard(k, n, s, g), compute_iv_modified(k, n, s, g))
                        << n << ' ' << s << ' ' << g << ' ' << k;
                }
            }
        }
    }
}

TEST(compute_kv, offsets_into_the_sample_prefix) {
    EXPECT_EQ(compute_kv(109, 100, 199, 10, 1.0, PivotRule::kStandard), 101);
    EXPECT_EQ(compute_kv(198, 100, 199, 10, 12.0, PivotRule::kStandard), 100);
    for (Index k = 0; k < 50; ++k) {
        EXPECT_EQ(compute_kv(k, 0, 49, 7, 1.5, PivotRule::kMedianModified),
                  compute_iv_modified(k + 1, 50, 7, 1.5) - 1);
    }
}

TEST(compute_kv, errors) {
    EXPECT_THROW(compute_kv(5, 6, 10, 2, 1.0, PivotRule::kStandard), std::out_of_range);
    EXPECT_THROW(compute_kv(11, 6, 10, 2, 1.0, PivotRule::kStandard), std::out_of_range);
    EXPECT_THROW(compute_kv(7, 6, 10, 0, 1.0, PivotRule::kStandard), std::invalid_argument);
    EXPECT_THROW(compute_kv(7, 6, 10, 6, 1.0, PivotRule::kStandard), std::invalid_argument);
}

TEST(select, small_examples) {
    AlgoConfig cfg;
    Rng rng(1);
    RunCounters c;

    std::vector<int> sorted{1, 2, 3, 4, 5};
    const auto out = select(std::span<int>(sorted), 2, cfg, rng, c);
    EXPECT_EQ(out.value, 3);
    EXPECT_EQ(out.k_minus, 2);
    EXPECT_EQ(out.k_plus, 2);

    std::vector<double> onezero{1.0, 0.0, 1.0, 0.0};
    const auto oz = select(std::span<double>(onezero), 1, cfg, rng, c);
    EXPECT_EQ(oz.value, 0.0);
    EXPECT_EQ(oz.k_minus, 0);
    EXPECT_EQ(oz.k_plus, 1);
}

TEST(select, median_of_permutation) {
    Rng rng(99);
    std::vector<int> x = permutation(1000, rng);
    AlgoConfig cfg;
    cfg.n_cut = 50;
    RunCounters c;
    const auto out = select(std::span<int>(x), 499, cfg, rng, c);
    EXPECT_EQ(out.value, 500);
    EXPECT_EQ(x[499], 500);
    EXPECT_GE(c.select_partitions, 1u);
}

TEST(select, matches_oracle_across_configurations) {
    Rng data_rng(2024);
    int cases = 0;
    for (std::int64_t n_cut : {1, 2, 3, 10, 600}) {
        for (Scheme scheme : {Scheme::kSafeguarded, Scheme::kDoubleIndex}) {
            for (PivotRule rule : {PivotRule::kStandard, PivotRule::kMedianModified}) {
                for (SamplingMode mode : {SamplingMode::kWithoutReplacement, SamplingMode::kWithReplacement}) {
                    for (PlanKind kind : {PlanKind::kLog13, PlanKind::kPlain23, PlanKind::kLogEps}) {
                        AlgoConfig cfg;
                        cfg.n_cut = n_cut;
                        cfg.scheme = scheme;
                        cfg.pivot_rule = rule;
                        cfg.sampling = mode;
                        cfg.plan.kind = kind;
                        for (int trial = 0; trial < 12; ++trial) {
                            const auto size = static_cast<std::size_t>(1 + data_rng.rand(trial < 6 ? 40 : 1500));
                            const std::uint64_t spread = trial % 3 == 0 ? 1 : (trial % 3 == 1 ? size / 8 : 1u << 30);
                            std::vector<int> before(size);
                            for (auto& e : before) e = static_cast<int>(data_rng.rand(spread));
                            const auto l = static_cast<Index>(data_rng.rand((size - 1) / 4));
                            const auto r = static_cast<Index>(size) - 1 -
                                           static_cast<Index>(data_rng.rand(static_cast<std::uint64_t>(size - 1 - l) / 4));
                            const auto k = l + static_cast<Index>(data_rng.rand(static_cast<std::uint64_t>(r - l)));
                            std::vector<int> after = before;
                            Rng rng(data_rng());
                            RunCounters c;
                            const auto out = select(std::span<int>(after), l, r, k, cfg, rng, c);
                            ASSERT_EQ(check_outcome(before, after, l, r, k, out), "")
                                << "n_cut=" << n_cut << " size=" << size << " l=" << l << " r=" << r << " k=" << k;
                            ASSERT_EQ(c.comparisons, c.select_comparisons + c.sselect_comparisons);
                            ++cases;
                        }
                    }
                }
            }
        }
    }
    EXPECT_EQ(cases, 5 * 2 * 2 * 2 * 3 * 12);
}

TEST(select, extreme_ranks_on_all_equal_and_sorted) {
    AlgoConfig cfg;
    cfg.n_cut = 20;
    for (std::size_t n : {1u, 2u, 21u, 700u}) {
        for (Index k : {Index{0}, static_cast<Index>(n) - 1, static_cast<Index>(n) / 2}) {
            std::vector<int> same(n, 7);
            Rng rng(n);
            RunCounters c;
            const auto out = select(std::span<int>(same), k, cfg, rng, c);
            EXPECT_EQ(out.value, 7);
            EXPECT_EQ(out.k_minus, 0);
            EXPECT_EQ(out.k_plus, static_cast<Index>(n) - 1);

            std::vector<int> inc(n);
            std::iota(inc.begin(), inc.end(), 0);
            const auto before = inc;
            const auto o2 = select(std::span<int>(inc), k, cfg, rng, c);
            EXPECT_EQ(check_outcome(before, inc, 0, static_cast<Index>(n) - 1, k, o2), "");
        }
    }
}

TEST(select, deterministic_for_a_seed) {
    Rng data_rng(5);
    const std::vector<int> input = permutation(5000, data_rng);
    AlgoConfig cfg;
    cfg.n_cut = 30;
    std::vector<int> a = input, b = input;
    Rng ra(17), rb(17);
    RunCounters ca, cb;
    select(std::span<int>(a), 1234, cfg, ra, ca);
    select(std::span<int>(b), 1234, cfg, rb, cb);
    EXPECT_EQ(a, b);
    EXPECT_EQ(ca.comparisons, cb.comparisons);
    EXPECT_EQ(ca.sample_size_sum, cb.sample_size_sum);
}

TEST(select, errors) {
    std::vector<int> x{3, 1, 2};
    AlgoConfig cfg;
    Rng rng(1);
    RunCounters c;
    EXPECT_THROW(select(std::span<int>(x), 3, cfg, rng, c), std::out_of_range);
    EXPECT_THROW(select(std::span<int>(x), -1, cfg, rng, c), std::out_of_range);
    EXPECT_THROW(select(std::span<int>(x), 1, 0, 1, cfg, rng, c), std::out_of_range);
    EXPECT_THROW(select(std::span<int>(x), 0, 3, 1, cfg, rng, c), std::out_of_range);
    std::vector<int> empty;
    EXPECT_THROW(select(std::span<int>(empty), 0, cfg, rng, c), std::out_of_range);
    AlgoConfig bad;
    bad.alpha = 0.0;
    EXPECT_THROW(select(std::span<int>(x), 1, bad, rng, c), std::invalid_argument);
    bad = AlgoConfig{};
    bad.n_cut = 0;
    EXPECT_THROW(select(std::span<int>(x), 1, bad, rng, c), std::invalid_argument);
    bad = AlgoConfig{};
    bad.plan.kind = PlanKind::kLogEps;
    bad.plan.epsilon_l = 1.0;
    EXPECT_THROW(select(std::span<int>(x), 1, bad, rng, c), std::invalid_argument);
}

TEST(sselect, trivial_segment_needs_no_partition) {
    std::vector<int> x{4, 9, 1};
    RunCounters c;
    const auto out = sselect(std::span<int>(x), 1, 1, 1, Scheme::kSafeguarded, c);
    EXPECT_EQ(out.value, 9);
    EXPECT_EQ(c.sselect_partitions, 0u);
    EXPECT_EQ(c.comparisons, 0u);
    EXPECT_EQ(c.sselect_calls, 1u);
}

TEST(sselect, all_equal_takes_one_pass) {
    for (Scheme scheme : {Scheme::kSafeguarded, Scheme::kDoubleIndex}) {
        std::vector<int> x(50, 3);
        RunCounters c;
        const auto out = sselect(std::span<int>(x), 0, 49, 20, scheme, c);
        EXPECT_EQ(out.k_minus, 0);
        EXPECT_EQ(out.k_plus, 49);
        EXPECT_EQ(c.sselect_partitions, 1u);
    }
}

TEST(sselect, matches_oracle) {
    Rng rng(8);
    for (int trial = 0; trial < 3000; ++trial) {
        const auto n = static_cast<std::size_t>(1 + rng.rand(80));
        std::vector<int> before(n);
        for (auto& e : before) e = static_cast<int>(rng.rand(trial % 2 == 0 ? 5 : 1000));
        const auto k = static_cast<Index>(rng.rand(n - 1));
        for (Scheme scheme : {Scheme::kSafeguarded, Scheme::kDoubleIndex}) {
            std::vector<int> after = before;
            RunCounters c;
            const auto out = sselect(std::span<int>(after), 0, static_cast<Index>(n) - 1, k, scheme, c);
            ASSERT_EQ(check_outcome(before, after, 0, static_cast<Index>(n) - 1, k, out), "");
            ASSERT_EQ(c.comparisons, c.sselect_comparisons);
        }
    }
}

TEST(sselect, rejects_segments_above_the_cutoff) {
    std::vector<int> x(10, 1);
    RunCounters c;
    EXPECT_THROW(sselect(std::span<int>(x), 0, 9, 3, Scheme::kSafeguarded, c, 9), std::logic_error);
    EXPECT_NO_THROW(sselect(std::span<int>(x), 0, 9, 3, Scheme::kSafeguarded, c, 10));
}

TEST(select, shallow_recursion_for_a_million) {
    Rng data_rng(3);
    std::vector<int> x = permutation(1000000, data_rng);
    AlgoConfig cfg;
    cfg.plan.kind = PlanKind::kLog13;
    Rng rng(4);
    RunCounters c;
    const auto out = select(std::span<int>(x), 499999, cfg, rng, c);
    EXPECT_EQ(out.value, 500000);
    EXPECT_LE(c.recursion_depth_max, 4u);
    EXPECT_GE(c.recursion_depth_max, 1u);
}

TEST(select, counters_are_consistent) {
    Rng data_rng(11);
    std::vector<int> x = permutation(200000, data_rng);
    AlgoConfig cfg;
    Rng rng(12);
    RunCounters c;
    select(std::span<int>(x), 1000, cfg, rng, c);
    EXPECT_EQ(c.comparisons, c.select_comparisons + c.sselect_comparisons);
    EXPECT_GE(c.partitioned_size_sum, 200000u);
    EXPECT_GE(c.sselect_calls, c.select_partitions);
    EXPECT_GT(c.sample_size_sum, 0u);
    // Each top-level reduction compares at least every unsampled element.
    EXPECT_GE(c.select_comparisons, 200000u - c.sample_size_sum);
}
