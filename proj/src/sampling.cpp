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

#include "frselect/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace frselect {

namespace {

double two_thirds_power(double n) {
    // cbrt keeps perfect cubes exact (10^6 -> 10^4), which matters under ceil.
    const double c = std::cbrt(n);
    return c * c;
}

void check_variant(const PlanVariant& variant) {
    if (variant.kind == PlanKind::kLogEps && !(variant.epsilon_l > 1.0)) {
        throw std::invalid_argument("sample plan: epsilon_l must exceed 1");
    }
}

}  // namespace

double plan_scale(double n, const PlanVariant& variant) {
    check_variant(variant);
    const double ln = std::log(n);
    switch (variant.kind) {
        case PlanKind::kLog13:
            return two_thirds_power(n) * std::cbrt(ln);
        case PlanKind::kPlain23:
            return two_thirds_power(n) * std::sqrt(ln);
        case PlanKind::kLogEps:
            return two_thirds_power(n) * std::pow(ln, variant.epsilon_l / 3.0);
    }
    throw std::invalid_argument("sample plan: unknown variant");
}

SamplePlan compute_plan(std::int64_t n, const PlanVariant& variant, double alpha, double beta) {
    if (n < 2) {
        throw std::invalid_argument("compute_plan: segment must hold at least two elements");
    }
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("compute_plan: alpha and beta must be positive");
    }
    const double dn = static_cast<double>(n);
    const double ln = std::log(dn);

    SamplePlan plan;
    plan.f_n = plan_scale(dn, variant);
    const double base = variant.kind == PlanKind::kPlain23 ? two_thirds_power(dn) : plan.f_n;
    const double wanted = std::ceil(alpha * base);
    plan.s = wanted >= static_cast<double>(n - 1) ? n - 1 : std::max<std::int64_t>(1, static_cast<std::int64_t>(wanted));
    const double log_term = variant.kind == PlanKind::kLogEps ? std::pow(ln, variant.epsilon_l) : ln;
    plan.g = std::sqrt(beta * static_cast<double>(plan.s) * log_term);
    return plan;
}

}  // namespace frselect
