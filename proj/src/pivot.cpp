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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frselect/select.hpp"

namespace frselect {

void AlgoConfig::validate() const {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("config: alpha and beta must be positive");
    }
    if (n_cut < 1) {
        throw std::invalid_argument("config: n_cut must be at least 1");
    }
    if (plan.kind == PlanKind::kLogEps && !(plan.epsilon_l > 1.0)) {
        throw std::invalid_argument("config: epsilon_l must exceed 1");
    }
}

namespace {

std::int64_t ceil_to_int(double v) { return static_cast<std::int64_t>(std::ceil(v)); }

}  // namespace

std::int64_t compute_iv_standard(std::int64_t k, std::int64_t n, std::int64_t s, double g) {
    const double base = static_cast<double>(k) * static_cast<double>(s) / static_cast<double>(n);
    if (2 * k < n) {
        return std::min(ceil_to_int(base + g), s);
    }
    return std::max(ceil_to_int(base - g), std::int64_t{1});
}

std::int64_t compute_iv_modified(std::int64_t k, std::int64_t n, std::int64_t s, double g) {
    const double base = static_cast<double>(k) * static_cast<double>(s) / static_cast<double>(n);
    const std::int64_t upper = ceil_to_int(base + g);
    const std::int64_t lower = ceil_to_int(base - g);
    const std::int64_t half = (s + 1) / 2;
    const std::int64_t median = std::max(std::min(upper, half), lower);
    return std::clamp(median, std::int64_t{1}, s);
}

std::int64_t compute_iv(std::int64_t k, std::int64_t n, std::int64_t s, double g, PivotRule rule) {
    return rule == PivotRule::kStandard ? compute_iv_standard(k, n, s, g) : compute_iv_modified(k, n, s, g);
}

Index compute_kv(Index k, Index l, Index r, std::int64_t s, double g, PivotRule rule) {
    if (l > k || k > r) {
        throw std::out_of_range("compute_kv: rank outside the segment");
    }
    if (s < 1 || s > r - l + 1) {
        throw std::invalid_argument("compute_kv: sample size out of range");
    }
    const std::int64_t i = k - l + 1;
    const std::int64_t m = r - l + 1;
    return l + static_cast<Index>(compute_iv(i, m, s, g, rule)) - 1;
}

}  // namespace frselect
