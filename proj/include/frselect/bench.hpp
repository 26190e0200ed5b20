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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frselect/generators.hpp"
#include "frselect/metrics.hpp"
#include "frselect/select.hpp"

namespace frselect {

enum class KRule { kLowerMedian, kExplicit };

/// One table row's worth of work: `reps` runs of select on a sequence.
struct BenchJob {
    SequenceSpec spec;
    std::int64_t reps = 20;
    KRule k_rule = KRule::kLowerMedian;
    std::int64_t k = 0;  // 1-based; read when k_rule == kExplicit
    AlgoConfig cfg{};
    std::uint64_t master_seed = 1;

    /// Throws std::invalid_argument for reps < 1, an explicit k outside
    /// [1, n], or an invalid config.
    void validate() const;
};

/// Seeds of rep i: rep_seed = split_seed(master, i); the input generator
/// uses split_seed(rep_seed, 0) and select uses split_seed(rep_seed, 1).
struct RepSeeds {
    std::uint64_t rep = 0;
    std::uint64_t input = 0;
    std::uint64_t algorithm = 0;
};
RepSeeds rep_seeds(std::uint64_t master_seed, std::int64_t rep);

/// 1-based target rank of a job: ceil(n/2) for the lower median.
std::int64_t target_rank(const BenchJob& job);

struct RunDetail {
    std::int64_t rep = 0;
    std::uint64_t seed = 0;  // rep seed, enough to reproduce the run
    double value = 0.0;
    Index k_minus = 0;  // 0-based
    Index k_plus = 0;
    RunRecord record;
};

struct BenchResult {
    std::string sequence;
    AggregateStats stats;
    std::vector<RunDetail> runs;
};

/// Raised when a run disagrees with the sort oracle.
class OracleMismatch : public std::runtime_error {
public:
    OracleMismatch(const std::string& what, std::uint64_t seed) : std::runtime_error(what), seed_(seed) {}
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

/// Runs the job, checks every rep's value and equal-block bounds against a
/// sorted copy of the input, and aggregates. Throws OracleMismatch on the
/// first disagreement.
BenchResult run_bench(const BenchJob& job);

struct VerifyReport {
    bool passed = true;
    std::int64_t runs = 0;
    std::string first_failure;  // empty when passed
};

/// Like run_bench but checks the full postcondition per rep: value, k-/k+,
/// the three-block arrangement and multiset preservation. Reports instead
/// of throwing.
VerifyReport verify_mode(const BenchJob& job);

/// Checks one select result on `after` (the permuted array) against
/// `sorted_input`. Returns an empty string on success, else a description.
std::string check_select_postcondition(std::span<const double> sorted_input, std::span<const double> after,
                                       std::int64_t k, double value, Index k_minus, Index k_plus);

// Tables

enum class TableFormat { kCsv, kMarkdown };

struct TableRow {
    std::string sequence;
    AggregateStats stats;
};

/// CSV header of emit_table, in column order.
const std::vector<std::string>& csv_columns();

/// Renders rows. Times use 3 decimals, every other statistic 2.
std::string emit_table(const std::vector<TableRow>& rows, TableFormat format);

/// Parses emit_table's CSV output back into rows. Throws
/// std::invalid_argument on a malformed header or line.
std::vector<TableRow> parse_table_csv(std::string_view text);

std::optional<TableFormat> parse_table_format(std::string_view name);

}  // namespace frselect
