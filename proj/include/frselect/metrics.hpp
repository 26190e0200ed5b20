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

namespace frselect {

/// Per-run instrumentation. Owned by the caller and threaded explicitly
/// through select, sselect and the partition routines.
struct RunCounters {
    std::uint64_t comparisons = 0;           // C: element-versus-pivot inspections
    std::uint64_t select_partitions = 0;     // P: Step-4 partition passes
    std::uint64_t sselect_calls = 0;         // N
    std::uint64_t sselect_partitions = 0;    // passes made inside sselect
    std::uint64_t sample_size_sum = 0;       // sum of s over all sampling steps
    std::uint64_t partitioned_size_sum = 0;  // L: sum of r-l+1 over Step-4 passes
    std::uint64_t recursion_depth_max = 0;   // deepest nested pivot-selection call

    // Split of `comparisons` by origin; their sum always equals `comparisons`.
    std::uint64_t select_comparisons = 0;
    std::uint64_t sselect_comparisons = 0;
};

/// One measured run: counters plus wall-clock time of the whole select call.
struct RunRecord {
    RunCounters counters;
    double time_ms = 0.0;
};

/// Table columns. Comparison and L columns are in units of n, P and N in
/// units of ln n, s_avg in percent of n.
struct AggregateStats {
    std::int64_t n = 0;
    std::int64_t reps = 0;
    double time_avg = 0.0;
    double time_max = 0.0;
    double time_min = 0.0;
    double c_avg = 0.0;
    double c_max = 0.0;
    double c_min = 0.0;
    double gamma_avg = 0.0;
    double l_avg = 0.0;
    double p_avg = 0.0;
    double n_avg = 0.0;
    double p_sselect_avg = 0.0;
    double s_avg = 0.0;
};

/// Folds a list of runs of size `n` into the table statistics. `plan_f` is
/// f(n) of the active plan variant and scales gamma_avg.
///
/// Throws std::invalid_argument on an empty run list or n < 1.
AggregateStats aggregate(std::span<const RunRecord> runs, std::int64_t n, double plan_f);

}  // namespace frselect
