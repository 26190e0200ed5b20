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

// frselect: benchmark and verification frontend for the sampling selection
// algorithm.
//
//   frselect bench --sequence random,onezero --sizes 50000,100000 --reps 20
//   frselect verify --sequence all --sizes 600,5000 --k 1
//   frselect validate-bounds --seed 7
//
// Exit codes: 0 success, 1 oracle or bound failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frselect/bench.hpp"
#include "frselect/generators.hpp"
#include "frselect/select.hpp"
#include "frselect/validation.hpp"

namespace {

struct Options {
    std::string sequences = "random";
    std::vector<std::int64_t> sizes{100000};
    std::int64_t reps = 20;
    std::uint64_t seed = 1;
    std::string scheme = "A";
    std::string pivot_rule = "modified";
    double alpha = 0.5;
    double beta = 0.25;
    std::int64_t n_cut = 600;
    std::string plan = "plain23";
    double epsilon_l = 1.5;
    bool with_replacement = false;
    std::string k = "median";
    std::string format = "csv";
    std::string out;
    std::int64_t tail_trials = 100000;
    std::int64_t deviation_trials = 10000;
    std::int64_t deviation_n = 10000;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_algorithm_flags(CLI::App& cmd, Options& o) {
    cmd.add_option("--scheme", o.scheme, "Ternary partition scheme: A (safeguarded) or B (double-index)")
        ->check(CLI::IsMember({"A", "B"}));
    cmd.add_option("--pivot-rule", o.pivot_rule, "Pivot rank rule")->check(CLI::IsMember({"standard", "modified"}));
    cmd.add_option("--alpha", o.alpha, "Sample size factor");
    cmd.add_option("--beta", o.beta, "Gap factor");
    cmd.add_option("--ncut", o.n_cut, "Cut-off below which sselect is used");
    cmd.add_option("--plan", o.plan, "Sample plan")->check(CLI::IsMember({"log13", "plain23", "logeps"}));
    cmd.add_option("--epsilon-l", o.epsilon_l, "Gap exponent for --plan logeps");
    cmd.add_flag("--with-replacement", o.with_replacement, "Sample with replacement");
    cmd.add_option("--seed", o.seed, "Master seed");
}

void add_job_flags(CLI::App& cmd, Options& o) {
    cmd.add_option("--sequence", o.sequences, "Comma-separated input sequences, or 'all'");
    cmd.add_option("--sizes", o.sizes, "Comma-separated input sizes")->delimiter(',');
    cmd.add_option("--reps", o.reps, "Repetitions per size");
    cmd.add_option("--k", o.k, "Target rank: 'median' or a 1-based integer");
    add_algorithm_flags(cmd, o);
}

frselect::AlgoConfig make_config(const Options& o) {
    frselect::AlgoConfig cfg;
    cfg.alpha = o.alpha;
    cfg.beta = o.beta;
    cfg.n_cut = o.n_cut;
    cfg.scheme = o.scheme == "A" ? frselect::Scheme::kSafeguarded : frselect::Scheme::kDoubleIndex;
    cfg.pivot_rule = o.pivot_rule == "standard" ? frselect::PivotRule::kStandard : frselect::PivotRule::kMedianModified;
    cfg.sampling = o.with_replacement ? frselect::SamplingMode::kWithReplacement
                                      : frselect::SamplingMode::kWithoutReplacement;
    if (o.plan == "log13") {
        cfg.plan.kind = frselect::PlanKind::kLog13;
    } else if (o.plan == "logeps") {
        cfg.plan.kind = frselect::PlanKind::kLogEps;
    } else {
        cfg.plan.kind = frselect::PlanKind::kPlain23;
    }
    cfg.plan.epsilon_l = o.epsilon_l;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

std::vector<frselect::SequenceKind> parse_sequences(const std::string& list) {
    if (list == "all") return frselect::all_sequence_kinds();
    std::vector<frselect::SequenceKind> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto kind = frselect::parse_sequence_kind(item);
        if (!kind) throw UsageError("unknown sequence '" + item + "'");
        out.push_back(*kind);
    }
    if (out.empty()) throw UsageError("no sequence given");
    return out;
}

std::vector<frselect::BenchJob> make_jobs(const Options& o) {
    const auto cfg = make_config(o);
    std::vector<frselect::BenchJob> jobs;
    for (const auto kind : parse_sequences(o.sequences)) {
        for (const std::int64_t n : o.sizes) {
            frselect::BenchJob job;
            job.spec = {kind, n, 0};
            job.reps = o.reps;
            job.cfg = cfg;
            job.master_seed = o.seed;
            if (o.k == "median") {
                job.k_rule = frselect::KRule::kLowerMedian;
            } else {
                job.k_rule = frselect::KRule::kExplicit;
                try {
                    std::size_t used = 0;
                    job.k = std::stoll(o.k, &used);
                    if (used != o.k.size()) throw std::invalid_argument(o.k);
                } catch (const std::exception&) {
                    throw UsageError("--k must be 'median' or an integer");
                }
            }
            try {
                job.validate();
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string(e.what()) + " (" + std::string(frselect::sequence_name(kind)) +
                                 " n=" + std::to_string(n) + ")");
            }
            if ((kind == frselect::SequenceKind::kM3Killer || kind == frselect::SequenceKind::kTwoFaced) &&
                (n % 4 != 0 || n < 16)) {
                throw UsageError("m3killer and twofaced need n divisible by 4 and n >= 16");
            }
            jobs.push_back(job);
        }
    }
    return jobs;
}

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file) throw UsageError("cannot open --out file '" + o.out + "'");
    file << text;
}

int run_bench_command(const Options& o) {
    const auto format = frselect::parse_table_format(o.format);
    if (!format) throw UsageError("--format must be csv or markdown");
    std::vector<frselect::TableRow> rows;
    for (const auto& job : make_jobs(o)) {
        try {
            auto result = frselect::run_bench(job);
            rows.push_back({result.sequence, result.stats});
        } catch (const frselect::OracleMismatch& e) {
            std::cerr << e.what() << "\nreproduce with rep seed " << e.seed() << '\n';
            return 1;
        }
    }
    write_output(o, frselect::emit_table(rows, *format));
    return 0;
}

int run_verify_command(const Options& o) {
    std::ostringstream os;
    bool all_ok = true;
    for (const auto& job : make_jobs(o)) {
        const auto report = frselect::verify_mode(job);
        os << (report.passed ? "PASS " : "FAIL ") << frselect::sequence_name(job.spec.kind) << " n=" << job.spec.n
           << " k=" << frselect::target_rank(job) << " runs=" << report.runs;
        if (!report.passed) os << " : " << report.first_failure;
        os << '\n';
        all_ok = all_ok && report.passed;
    }
    write_output(o, os.str());
    return all_ok ? 0 : 1;
}

int run_validate_command(const Options& o) {
    frselect::BoundSuiteOptions opts;
    opts.cfg = make_config(o);
    opts.seed = o.seed;
    opts.tail_trials = o.tail_trials;
    opts.deviation_trials = o.deviation_trials;
    opts.deviation_n = o.deviation_n;
    if (opts.tail_trials < 1 || opts.deviation_trials < 1 || opts.deviation_n < 2) {
        throw UsageError("trial counts must be positive and --deviation-n at least 2");
    }
    std::ostringstream os;
    bool all_ok = true;
    for (const auto& line : frselect::run_bound_suite(opts)) {
        os << (line.passed ? "PASS " : "FAIL ") << line.name << " : " << line.detail << '\n';
        all_ok = all_ok && line.passed;
    }
    write_output(o, os.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Instrumented sampling selection: benchmarks, oracle verification and bound checks"};
    app.require_subcommand(1);
    Options o;

    auto* bench = app.add_subcommand("bench", "Run experiments and print a statistics table");
    add_job_flags(*bench, o);
    bench->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "markdown"}));
    bench->add_option("--out", o.out, "Write output to this file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Check every run against the sort oracle");
    add_job_flags(*verify, o);
    verify->add_option("--out", o.out, "Write the report to this file");

    auto* validate = app.add_subcommand("validate-bounds", "Statistical checks of the sampling tail bounds");
    add_algorithm_flags(*validate, o);
    validate->add_option("--tail-trials", o.tail_trials, "Monte-Carlo trials per tail grid point");
    validate->add_option("--deviation-trials", o.deviation_trials, "Trials per pivot deviation case");
    validate->add_option("--deviation-n", o.deviation_n, "Input size of the pivot deviation cases");
    validate->add_option("--out", o.out, "Write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bench->parsed()) return run_bench_command(o);
        if (verify->parsed()) return run_verify_command(o);
        return run_validate_command(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
