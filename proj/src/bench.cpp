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

#include "frselect/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "frselect/sampling.hpp"

namespace frselect {

namespace {

struct Input {
    std::vector<double> values;
    std::vector<double> sorted;
};

Input make_input(const BenchJob& job, const RepSeeds& seeds) {
    SequenceSpec spec = job.spec;
    spec.seed = seeds.input;
    Input in{generate(spec), {}};
    in.sorted = in.values;
    std::sort(in.sorted.begin(), in.sorted.end());
    return in;
}

struct RepOutcome {
    RunDetail detail;
    std::vector<double> after;
};

RepOutcome run_rep(const BenchJob& job, const Input& in, std::int64_t rep, const RepSeeds& seeds) {
    const std::int64_t k = target_rank(job);
    RepOutcome out;
    out.after = in.values;
    Rng rng(seeds.algorithm);
    RunCounters counters;
    const auto start = std::chrono::steady_clock::now();
    const auto result = select(std::span<double>(out.after), static_cast<Index>(k - 1), job.cfg, rng, counters);
    const auto stop = std::chrono::steady_clock::now();
    if (counters.comparisons != counters.select_comparisons + counters.sselect_comparisons) {
        throw std::logic_error("select: comparison counters do not add up");
    }
    out.detail.rep = rep;
    out.detail.seed = seeds.rep;
    out.detail.value = result.value;
    out.detail.k_minus = result.k_minus;
    out.detail.k_plus = result.k_plus;
    out.detail.record.counters = counters;
    out.detail.record.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return out;
}

std::string describe_run(const BenchJob& job, const RunDetail& d) {
    std::ostringstream os;
    os << sequence_name(job.spec.kind) << " n=" << job.spec.n << " k=" << target_rank(job) << " rep=" << d.rep
       << " master_seed=" << job.master_seed << " rep_seed=" << d.seed;
    return os.str();
}

// Value and equal-block bounds against the sorted input.
std::string check_rank(std::span<const double> sorted, std::int64_t k, double value, Index k_minus, Index k_plus) {
    const double expected = sorted[static_cast<std::size_t>(k - 1)];
    std::ostringstream os;
    if (!(value == expected)) {
        os << "value " << value << " != expected " << expected;
        return os.str();
    }
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), expected) - sorted.begin();
    const auto hi = std::upper_bound(sorted.begin(), sorted.end(), expected) - sorted.begin() - 1;
    if (k_minus != lo || k_plus != hi) {
        os << "equal block [" << k_minus << ", " << k_plus << "] != expected [" << lo << ", " << hi << "]";
        return os.str();
    }
    return {};
}

}  // namespace

void BenchJob::validate() const {
    if (reps < 1) {
        throw std::invalid_argument("bench job: reps must be positive");
    }
    if (spec.n < 1) {
        throw std::invalid_argument("bench job: n must be positive");
    }
    if (k_rule == KRule::kExplicit && (k < 1 || k > spec.n)) {
        throw std::invalid_argument("bench job: k must lie in [1, n]");
    }
    cfg.validate();
}

RepSeeds rep_seeds(std::uint64_t master_seed, std::int64_t rep) {
    RepSeeds seeds;
    seeds.rep = split_seed(master_seed, static_cast<std::uint64_t>(rep));
    seeds.input = split_seed(seeds.rep, 0);
    seeds.algorithm = split_seed(seeds.rep, 1);
    return seeds;
}

std::int64_t target_rank(const BenchJob& job) {
    return job.k_rule == KRule::kLowerMedian ? (job.spec.n + 1) / 2 : job.k;
}

std::string check_select_postcondition(std::span<const double> sorted_input, std::span<const double> after,
                                       std::int64_t k, double value, Index k_minus, Index k_plus) {
    if (after.size() != sorted_input.size()) {
        return "array size changed";
    }
    if (std::string msg = check_rank(sorted_input, k, value, k_minus, k_plus); !msg.empty()) {
        return msg;
    }
    for (std::size_t i = 0; i < after.size(); ++i) {
        const auto pos = static_cast<Index>(i);
        const double xi = after[i];
        const bool ok = pos < k_minus ? xi < value : (pos <= k_plus ? xi == value : xi > value);
        if (!ok) {
            std::ostringstream os;
            os << "three-block arrangement broken at position " << i << " (value " << xi << ")";
            return os.str();
        }
    }
    std::vector<double> resorted(after.begin(), after.end());
    std::sort(resorted.begin(), resorted.end());
    if (!std::equal(resorted.begin(), resorted.end(), sorted_input.begin())) {
        return "multiset of the array changed";
    }
    return {};
}

BenchResult run_bench(const BenchJob& job) {
    job.validate();
    const bool randomized = is_randomized(job.spec.kind);
    std::optional<Input> fixed;
    if (!randomized) fixed = make_input(job, rep_seeds(job.master_seed, 0));

    BenchResult result;
    result.sequence = std::string(sequence_name(job.spec.kind));
    std::vector<RunRecord> records;
    for (std::int64_t rep = 0; rep < job.reps; ++rep) {
        const RepSeeds seeds = rep_seeds(job.master_seed, rep);
        std::optional<Input> fresh;
        if (randomized) fresh = make_input(job, seeds);
        const Input& in = randomized ? *fresh : *fixed;
        RepOutcome out = run_rep(job, in, rep, seeds);
        const RunDetail& d = out.detail;
        if (std::string msg = check_rank(in.sorted, target_rank(job), d.value, d.k_minus, d.k_plus); !msg.empty()) {
            throw OracleMismatch("oracle mismatch: " + msg + " [" + describe_run(job, d) + "]", d.seed);
        }
        records.push_back(d.record);
        result.runs.push_back(std::move(out.detail));
    }
    const double f_n = job.spec.n >= 2 ? plan_scale(static_cast<double>(job.spec.n), job.cfg.plan) : 0.0;
    result.stats = aggregate(records, job.spec.n, f_n);
    return result;
}

VerifyReport verify_mode(const BenchJob& job) {
    job.validate();
    const bool randomized = is_randomized(job.spec.kind);
    std::optional<Input> fixed;
    if (!randomized) fixed = make_input(job, rep_seeds(job.master_seed, 0));

    VerifyReport report;
    for (std::int64_t rep = 0; rep < job.reps; ++rep) {
        const RepSeeds seeds = rep_seeds(job.master_seed, rep);
        std::optional<Input> fresh;
        if (randomized) fresh = make_input(job, seeds);
        const Input& in = randomized ? *fresh : *fixed;
        RepOutcome out;
        try {
            out = run_rep(job, in, rep, seeds);
        } catch (const std::exception& e) {
            report.passed = false;
            report.first_failure = std::string("exception: ") + e.what() + " [" + std::string(sequence_name(job.spec.kind)) +
                                   " rep_seed=" + std::to_string(seeds.rep) + "]";
            return report;
        }
        ++report.runs;
        const RunDetail& d = out.detail;
        const std::string msg =
            check_select_postcondition(in.sorted, out.after, target_rank(job), d.value, d.k_minus, d.k_plus);
        if (!msg.empty()) {
            report.passed = false;
            report.first_failure = msg + " [" + describe_run(job, d) + "]";
            return report;
        }
    }
    return report;
}

}  // namespace frselect
