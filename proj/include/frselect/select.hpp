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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "frselect/metrics.hpp"
#include "frselect/partition.hpp"
#include "frselect/rng.hpp"
#include "frselect/sampling.hpp"

namespace frselect {

enum class PivotRule {
    kStandard,        // gap on the side away from the nearer end
    kMedianModified,  // sample median whenever k is within gn/s of n/2
};

enum class SamplingMode { kWithoutReplacement, kWithReplacement };

/// Tunables of select. Defaults are alpha = 0.5, beta = 0.25, n_cut = 600,
/// the n^{2/3} plan, the safeguarded scheme and the median-modified rule.
struct AlgoConfig {
    double alpha = 0.5;
    double beta = 0.25;
    PlanVariant plan{};
    std::int64_t n_cut = 600;
    Scheme scheme = Scheme::kSafeguarded;
    PivotRule pivot_rule = PivotRule::kMedianModified;
    SamplingMode sampling = SamplingMode::kWithoutReplacement;

    /// Throws std::invalid_argument on nonpositive alpha/beta, n_cut < 1 or
    /// epsilon_l <= 1 with the kLogEps plan.
    void validate() const;
};

/// Selected value and the bounds [k_minus, k_plus] of its equal block.
template <typename T>
struct SelectOutcome {
    T value;
    Index k_minus = 0;
    Index k_plus = 0;
};

// Pivot rank in the sample, 1-based, for the 1-based target rank k of n
// elements and a sample of s with gap g. "k < n/2" is tested as 2k < n.
std::int64_t compute_iv_standard(std::int64_t k, std::int64_t n, std::int64_t s, double g);
std::int64_t compute_iv_modified(std::int64_t k, std::int64_t n, std::int64_t s, double g);
std::int64_t compute_iv(std::int64_t k, std::int64_t n, std::int64_t s, double g, PivotRule rule);

/// Absolute 0-based pivot position in the sample prefix [l, l+s-1] for the
/// 0-based target position k of segment [l, r].
Index compute_kv(Index k, Index l, Index r, std::int64_t s, double g, PivotRule rule);

namespace detail {

// Element copy tagged with the position it was drawn from. Ordered by value
// only, so equal values stay equal.
template <typename T>
struct Drawn {
    T value;
    Index origin;
    friend bool operator<(const Drawn& a, const Drawn& b) { return a.value < b.value; }
};

template <typename T>
struct DrawnOf {
    using type = Drawn<T>;
    static type make(std::span<T> x, Index i) { return {x[static_cast<std::size_t>(i)], i}; }
};

template <typename T>
struct DrawnOf<Drawn<T>> {
    using type = Drawn<T>;
    static type make(std::span<Drawn<T>> x, Index i) { return {x[static_cast<std::size_t>(i)].value, i}; }
};

inline void check_task(std::size_t size, Index l, Index r, Index k) {
    if (l < 0 || r >= static_cast<Index>(size) || l > r) {
        throw std::out_of_range("select: segment outside the array");
    }
    if (k < l || k > r) {
        throw std::out_of_range("select: rank outside the segment");
    }
}

template <typename T>
SelectOutcome<T> sselect_loop(std::span<T> x, Index l, Index r, Index k, Scheme scheme, RunCounters& counters) {
    ++counters.sselect_calls;
    for (;;) {
        if (l == r) {
            return {x[static_cast<std::size_t>(k)], k, k};
        }
        exchange(x, l, k);
        const std::uint64_t before = counters.comparisons;
        const PartitionResult part = partition(x, l, r, scheme, counters);
        counters.sselect_comparisons += counters.comparisons - before;
        ++counters.sselect_partitions;
        if (part.a <= k && k <= part.b) {
            return {x[static_cast<std::size_t>(k)], part.a, part.b};
        }
        if (part.a <= k) l = part.b + 1;
        if (k <= part.b) r = part.a - 1;
        if (l > r) {
            return {x[static_cast<std::size_t>(k)], r + 1, l - 1};
        }
    }
}

template <typename T>
SelectOutcome<T> select_loop(std::span<T> x, Index l, Index r, Index k, const AlgoConfig& cfg, Rng& rng,
                             RunCounters& counters, std::uint64_t depth) {
    counters.recursion_depth_max = std::max(counters.recursion_depth_max, depth);
    for (;;) {
        const std::int64_t n = r - l + 1;
        if (n <= cfg.n_cut) {
            return sselect_loop(x, l, r, k, cfg.scheme, counters);
        }
        const SamplePlan plan = compute_plan(n, cfg.plan, cfg.alpha, cfg.beta);
        counters.sample_size_sum += static_cast<std::uint64_t>(plan.s);

        PartitionResult part;
        std::uint64_t before = 0;
        if (cfg.sampling == SamplingMode::kWithReplacement) {
            using D = DrawnOf<T>;
            auto buffer = draw_sample_with_replacement(std::span<const T>(x), l, r, plan.s, rng,
                                                       [&](Index i) { return D::make(x, i); });
            const std::int64_t iv = compute_iv(k - l + 1, n, plan.s, plan.g, cfg.pivot_rule);
            std::span<typename D::type> sample(buffer);
            const auto pivot = select_loop(sample, 0, static_cast<Index>(plan.s) - 1, static_cast<Index>(iv) - 1, cfg,
                                           rng, counters, depth + 1);
            exchange(x, l, pivot.value.origin);
            before = counters.comparisons;
            part = partition(x, l, r, cfg.scheme, counters);
        } else {
            place_sample(x, l, r, plan.s, rng);
            const Index r_s = l + static_cast<Index>(plan.s) - 1;
            const Index kv = compute_kv(k, l, r, plan.s, plan.g, cfg.pivot_rule);
            const auto pivot = select_loop(x, l, r_s, kv, cfg, rng, counters, depth + 1);
            const auto layout = PreparedLayout::from_sample(r, pivot.k_minus, pivot.k_plus, r_s);
            before = counters.comparisons;
            part = partition_prepared(x, layout, l, r, cfg.scheme, counters);
        }
        counters.select_comparisons += counters.comparisons - before;
        ++counters.select_partitions;
        counters.partitioned_size_sum += static_cast<std::uint64_t>(n);

        if (part.a <= k && k <= part.b) {
            return {x[static_cast<std::size_t>(k)], part.a, part.b};
        }
        if (part.a <= k) l = part.b + 1;
        if (k <= part.b) r = part.a - 1;
        if (l == r) {
            return {x[static_cast<std::size_t>(k)], k, k};
        }
        if (l > r) {
            return {x[static_cast<std::size_t>(k)], r + 1, l - 1};
        }
    }
}

}  // namespace detail

/// Small-segment selection: repeatedly moves x[k] to the head of the
/// current segment and partitions around it with `scheme`. Segments longer
/// than `n_cut` are rejected with std::logic_error.
template <typename T>
SelectOutcome<T> sselect(std::span<T> x, Index l, Index r, Index k, Scheme scheme, RunCounters& counters,
                         std::int64_t n_cut = std::numeric_limits<std::int64_t>::max()) {
    detail::check_task(x.size(), l, r, k);
    if (r - l + 1 > n_cut) {
        throw std::logic_error("sselect: segment longer than the cut-off");
    }
    return detail::sselect_loop(x, l, r, k, scheme, counters);
}

/// Finds the element of rank k within x[l..r] (all 0-based positions) and
/// permutes the segment so that x < value on [l, k_minus-1], x == value on
/// [k_minus, k_plus] and x > value on [k_plus+1, r].
///
/// Pivots come from a random sample placed at the front of the segment and
/// selected recursively; segments of at most cfg.n_cut elements go to
/// sselect. The outer reduction is iterative.
template <typename T>
SelectOutcome<T> select(std::span<T> x, Index l, Index r, Index k, const AlgoConfig& cfg, Rng& rng,
                        RunCounters& counters) {
    cfg.validate();
    detail::check_task(x.size(), l, r, k);
    return detail::select_loop(x, l, r, k, cfg, rng, counters, 0);
}

/// Whole-array convenience overload.
template <typename T>
SelectOutcome<T> select(std::span<T> x, Index k, const AlgoConfig& cfg, Rng& rng, RunCounters& counters) {
    if (x.empty()) {
        throw std::out_of_range("select: empty array");
    }
    return select(x, 0, static_cast<Index>(x.size()) - 1, k, cfg, rng, counters);
}

}  // namespace frselect
