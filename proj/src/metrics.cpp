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

#include "frselect/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace frselect {

AggregateStats aggregate(std::span<const RunRecord> runs, std::int64_t n, double plan_f) {
    if (runs.empty()) {
        throw std::invalid_argument("aggregate: empty run list");
    }
    if (n < 1) {
        throw std::invalid_argument("aggregate: n must be positive");
    }
    const double dn = static_cast<double>(n);
    const double reps = static_cast<double>(runs.size());
    // ln 1 = 0; report the per-ln columns as raw averages in that case.
    const double log_n = n > 1 ? std::log(dn) : 1.0;

    double c_sum = 0, l_sum = 0, p_sum = 0, n_sum = 0, s_sum = 0, t_sum = 0;
    double c_max = 0, c_min = std::numeric_limits<double>::infinity();
    double t_max = 0, t_min = std::numeric_limits<double>::infinity();
    std::uint64_t ss_calls = 0, ss_parts = 0;
    for (const RunRecord& run : runs) {
        const RunCounters& c = run.counters;
        const double comps = static_cast<double>(c.comparisons);
        c_sum += comps;
        c_max = std::max(c_max, comps);
        c_min = std::min(c_min, comps);
        l_sum += static_cast<double>(c.partitioned_size_sum);
        p_sum += static_cast<double>(c.select_partitions);
        n_sum += static_cast<double>(c.sselect_calls);
        s_sum += static_cast<double>(c.sample_size_sum);
        ss_calls += c.sselect_calls;
        ss_parts += c.sselect_partitions;
        t_sum += run.time_ms;
        t_max = std::max(t_max, run.time_ms);
        t_min = std::min(t_min, run.time_ms);
    }

    AggregateStats out;
    out.n = n;
    out.reps = static_cast<std::int64_t>(runs.size());
    out.time_avg = t_sum / reps;
    out.time_max = t_max;
    out.time_min = t_min;
    const double c_avg = c_sum / reps;
    out.c_avg = c_avg / dn;
    out.c_max = c_max / dn;
    out.c_min = c_min / dn;
    out.gamma_avg = plan_f > 0 ? std::max(c_avg - 1.5 * dn, 0.0) / plan_f : 0.0;
    out.l_avg = l_sum / reps / dn;
    out.p_avg = p_sum / reps / log_n;
    out.n_avg = n_sum / reps / log_n;
    out.p_sselect_avg = ss_calls > 0 ? static_cast<double>(ss_parts) / static_cast<double>(ss_calls) : 0.0;
    out.s_avg = 100.0 * s_sum / reps / dn;
    return out;
}

}  // namespace frselect
