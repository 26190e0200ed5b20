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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frselect/rng.hpp"

namespace frselect {

/// Signed array index. Segments are closed ranges [l, r] of 0-based
/// positions; signed so that empty blocks such as [p, p-1] are expressible.
using Index = std::ptrdiff_t;

enum class PlanKind {
    kLog13,    // s = ceil(alpha f(n)), f(n) = n^{2/3} ln^{1/3} n
    kPlain23,  // s = ceil(alpha n^{2/3}), f(n) = n^{2/3} ln^{1/2} n
    kLogEps,   // s = ceil(alpha f(n)), f(n) = n^{2/3} ln^{eps/3} n, g uses ln^eps n
};

struct PlanVariant {
    PlanKind kind = PlanKind::kPlain23;
    double epsilon_l = 1.5;  // only read for kLogEps; must exceed 1
};

/// Sample size s, rank gap g and the bound scale f(n) for one segment size.
struct SamplePlan {
    std::int64_t s = 0;
    double g = 0.0;
    double f_n = 0.0;
};

/// f(n) of the given variant, without the sample-size clamp.
double plan_scale(double n, const PlanVariant& variant);

/// Sample plan for a segment of n >= 2 elements.
///
/// s = min(ceil(alpha * base(n)), n - 1) and g = sqrt(beta * s * ln^e n), where
/// base(n) is n^{2/3} for kPlain23 and f(n) otherwise, and e is epsilon_l for
/// kLogEps and 1 otherwise. g is never rounded here.
///
/// Throws std::invalid_argument for n < 2, nonpositive alpha or beta, or a
/// kLogEps variant with epsilon_l <= 1.
SamplePlan compute_plan(std::int64_t n, const PlanVariant& variant, double alpha, double beta);

/// Moves a uniformly random s-subset of x[l..r], in random order, into
/// x[l..l+s-1] by exchanging x[i] with x[i + rand(r - i)] for i = l, ..., l+s-1.
template <typename T>
void place_sample(std::span<T> x, Index l, Index r, std::int64_t s, Rng& rng) {
    if (l < 0 || r >= static_cast<Index>(x.size()) || l > r) {
        throw std::out_of_range("place_sample: segment outside the array");
    }
    if (s < 1 || s > r - l + 1) {
        throw std::invalid_argument("place_sample: sample size out of range");
    }
    const Index rs = l + static_cast<Index>(s) - 1;
    for (Index i = l; i <= rs; ++i) {
        const Index j = i + static_cast<Index>(rng.rand(static_cast<std::uint64_t>(r - i)));
        using std::swap;
        swap(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]);
    }
}

/// s independent uniform draws from x[l..r] with repetition. Each draw is
/// produced by `make(position)` so callers can tag copies with their origin.
template <typename T, typename Make>
auto draw_sample_with_replacement(std::span<const T> x, Index l, Index r, std::int64_t s, Rng& rng,
                                  Make&& make) {
    if (l < 0 || r >= static_cast<Index>(x.size()) || l > r) {
        throw std::out_of_range("draw_sample_with_replacement: segment outside the array");
    }
    if (s < 1 || s > r - l + 1) {
        throw std::invalid_argument("draw_sample_with_replacement: sample size out of range");
    }
    using Out = std::decay_t<decltype(make(Index{}))>;
    std::vector<Out> buffer;
    buffer.reserve(static_cast<std::size_t>(s));
    const auto span = static_cast<std::uint64_t>(r - l);
    for (std::int64_t t = 0; t < s; ++t) {
        buffer.push_back(make(l + static_cast<Index>(rng.rand(span))));
    }
    return buffer;
}

template <typename T>
std::vector<T> draw_sample_with_replacement(std::span<const T> x, Index l, Index r, std::int64_t s,
                                            Rng& rng) {
    return draw_sample_with_replacement(x, l, r, s, rng,
                                        [&](Index i) { return x[static_cast<std::size_t>(i)]; });
}

}  // namespace frselect
