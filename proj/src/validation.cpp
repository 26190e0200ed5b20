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

#include "frselect/validation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace frselect {

namespace {

void check_experiment(const TailExperiment& exp) {
    if (exp.n_balls < 1 || exp.r_red < 0 || exp.r_red > exp.n_balls || exp.s_draws < 1 ||
        (!exp.with_replacement && exp.s_draws > exp.n_balls) || exp.g < 0.0) {
        throw std::invalid_argument("tail experiment: inconsistent parameters");
    }
}

double log_choose(std::int64_t a, std::int64_t b) {
    return std::lgamma(static_cast<double>(a) + 1) - std::lgamma(static_cast<double>(b) + 1) -
           std::lgamma(static_cast<double>(a - b) + 1);
}

double tail_threshold(const TailExperiment& exp) {
    return static_cast<double>(exp.r_red) * static_cast<double>(exp.s_draws) / static_cast<double>(exp.n_balls) +
           exp.g;
}

std::int64_t ceil_rank(double v) { return static_cast<std::int64_t>(std::ceil(v)); }

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

double tail_bound(std::int64_t s, double g) { return std::exp(-2.0 * g * g / static_cast<double>(s)); }

double binomial_tolerance(double p, std::int64_t trials, double sigmas) {
    return sigmas * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(trials));
}

double tail_probability_exact(const TailExperiment& exp) {
    check_experiment(exp);
    const std::int64_t n = exp.n_balls;
    const std::int64_t r = exp.r_red;
    const std::int64_t s = exp.s_draws;
    const double threshold = tail_threshold(exp);
    double total = 0.0;
    if (exp.with_replacement) {
        const double p = static_cast<double>(r) / static_cast<double>(n);
        for (std::int64_t t = 0; t <= s; ++t) {
            if (static_cast<double>(t) < threshold) continue;
            if (p == 0.0) {
                total += t == 0 ? 1.0 : 0.0;
            } else if (p == 1.0) {
                total += t == s ? 1.0 : 0.0;
            } else {
                total += std::exp(log_choose(s, t) + static_cast<double>(t) * std::log(p) +
                                  static_cast<double>(s - t) * std::log1p(-p));
            }
        }
        return std::min(total, 1.0);
    }
    const std::int64_t lo = std::max<std::int64_t>(0, s - (n - r));
    const std::int64_t hi = std::min(r, s);
    const double denom = log_choose(n, s);
    for (std::int64_t t = lo; t <= hi; ++t) {
        if (static_cast<double>(t) < threshold) continue;
        total += std::exp(log_choose(r, t) + log_choose(n - r, s - t) - denom);
    }
    return std::min(total, 1.0);
}

double hypergeometric_tail_empirical(const TailExperiment& exp, Rng& rng) {
    check_experiment(exp);
    if (exp.trials < 1) {
        throw std::invalid_argument("tail experiment: trials must be positive");
    }
    const double threshold = tail_threshold(exp);
    std::int64_t hits = 0;
    for (std::int64_t trial = 0; trial < exp.trials; ++trial) {
        std::int64_t reds = 0;
        if (exp.with_replacement) {
            for (std::int64_t t = 0; t < exp.s_draws; ++t) {
                reds += rng.rand(static_cast<std::uint64_t>(exp.n_balls - 1)) < static_cast<std::uint64_t>(exp.r_red);
            }
        } else {
            std::int64_t red_left = exp.r_red;
            std::int64_t total_left = exp.n_balls;
            for (std::int64_t t = 0; t < exp.s_draws; ++t, --total_left) {
                if (rng.rand(static_cast<std::uint64_t>(total_left - 1)) < static_cast<std::uint64_t>(red_left)) {
                    ++reds;
                    --red_left;
                }
            }
        }
        hits += static_cast<double>(reds) >= threshold;
    }
    return static_cast<double>(hits) / static_cast<double>(exp.trials);
}

std::vector<TailExperiment> default_tail_grid(std::int64_t trials) {
    const TailExperiment points[] = {
        {100, 50, 20, 5.0, trials, false},    {100, 30, 20, 3.0, trials, false},
        {200, 100, 50, 5.0, trials, false},   {200, 20, 40, 4.0, trials, false},
        {1000, 500, 100, 10.0, trials, false}, {1000, 100, 100, 5.0, trials, false},
        {60, 30, 30, 4.0, trials, false},     {500, 250, 25, 3.0, trials, false},
        {1000, 900, 50, 2.0, trials, false},
    };
    return {std::begin(points), std::end(points)};
}

const char* deviation_case_name(DeviationCase c) {
    switch (c) {
        case DeviationCase::kLeft:
            return "left";
        case DeviationCase::kMiddle:
            return "middle";
        case DeviationCase::kRight:
            return "right";
    }
    return "unknown";
}

DeviationCase classify_rank(std::int64_t k, std::int64_t n, const SamplePlan& plan, PivotRule rule) {
    if (rule == PivotRule::kStandard) {
        return 2 * k < n ? DeviationCase::kLeft : DeviationCase::kRight;
    }
    const double half = static_cast<double>(n) / 2.0;
    const double spread = plan.g * static_cast<double>(n) / static_cast<double>(plan.s);
    const double dk = static_cast<double>(k);
    if (dk < half - spread) return DeviationCase::kLeft;
    if (dk > half + spread) return DeviationCase::kRight;
    return DeviationCase::kMiddle;
}

DeviationReport pivot_rank_deviation_test(std::span<const double> input, std::int64_t k, const AlgoConfig& cfg,
                                          std::int64_t trials, Rng& rng) {
    cfg.validate();
    const auto n = static_cast<std::int64_t>(input.size());
    if (trials < 1) {
        throw std::invalid_argument("pivot deviation test: trials must be positive");
    }
    if (n < 2 || k < 1 || k > n) {
        throw std::invalid_argument("pivot deviation test: need n >= 2 and 1 <= k <= n");
    }

    DeviationReport report;
    report.n = n;
    report.k = k;
    report.trials = trials;
    report.plan = compute_plan(n, cfg.plan, cfg.alpha, cfg.beta);
    const std::int64_t s = report.plan.s;
    const double g = report.plan.g;
    report.iv = compute_iv(k, n, s, g, cfg.pivot_rule);
    report.bound = tail_bound(s, g);
    report.which = classify_rank(k, n, report.plan, cfg.pivot_rule);

    const double dn = static_cast<double>(n);
    const double gap = g * dn / static_cast<double>(s);
    const double ks = static_cast<double>(k) * static_cast<double>(s) / dn;
    auto clamp_rank = [n](std::int64_t j) { return std::clamp<std::int64_t>(j, 1, n); };

    // Events as (name, rank, pivot-below-rank?).
    struct Spec {
        std::string name;
        std::int64_t rank;
        bool below;
    };
    std::vector<Spec> specs;
    switch (report.which) {
        case DeviationCase::kLeft: {
            if (report.iv == ceil_rank(ks + g)) specs.push_back({"v < x*[k]", k, true});
            specs.push_back({"x*[k_r] < v", clamp_rank(ceil_rank(static_cast<double>(k) + 2 * gap)), false});
            break;
        }
        case DeviationCase::kRight: {
            if (report.iv == ceil_rank(ks - g)) specs.push_back({"x*[k] < v", k, false});
            specs.push_back({"v < x*[k_l]", clamp_rank(ceil_rank(static_cast<double>(k) - 2 * gap)), true});
            break;
        }
        case DeviationCase::kMiddle: {
            specs.push_back({"v < x*[j_l]", clamp_rank(ceil_rank(dn / 2 - gap)), true});
            specs.push_back({"x*[j_r] < v", clamp_rank(ceil_rank(dn / 2 + gap)), false});
            break;
        }
    }

    std::vector<double> sorted(input.begin(), input.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> work(input.begin(), input.end());
    std::span<double> x(work);
    std::vector<std::int64_t> counts(specs.size(), 0);

    for (std::int64_t trial = 0; trial < trials; ++trial) {
        RunCounters scratch;
        double v;
        if (cfg.sampling == SamplingMode::kWithReplacement) {
            auto sample = draw_sample_with_replacement(std::span<const double>(x), 0, n - 1, s, rng);
            std::span<double> buf(sample);
            v = select(buf, 0, s - 1, report.iv - 1, cfg, rng, scratch).value;
        } else {
            place_sample(x, 0, n - 1, s, rng);
            v = select(x, 0, s - 1, report.iv - 1, cfg, rng, scratch).value;
        }
        for (std::size_t e = 0; e < specs.size(); ++e) {
            const double ref = sorted[static_cast<std::size_t>(specs[e].rank - 1)];
            counts[e] += specs[e].below ? (v < ref) : (ref < v);
        }
    }

    for (std::size_t e = 0; e < specs.size(); ++e) {
        report.events.push_back({specs[e].name, specs[e].rank, counts[e],
                                 static_cast<double>(counts[e]) / static_cast<double>(trials)});
    }
    return report;
}

DeviationReport pivot_rank_deviation_test(std::int64_t n, std::int64_t k, const AlgoConfig& cfg, std::int64_t trials,
                                          Rng& rng) {
    if (n < 2) {
        throw std::invalid_argument("pivot deviation test: need n >= 2");
    }
    std::vector<double> input(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) input[static_cast<std::size_t>(i)] = static_cast<double>(i + 1);
    for (std::int64_t i = 0; i + 1 < n; ++i) {
        const auto j = i + static_cast<std::int64_t>(rng.rand(static_cast<std::uint64_t>(n - 1 - i)));
        std::swap(input[static_cast<std::size_t>(i)], input[static_cast<std::size_t>(j)]);
    }
    return pivot_rank_deviation_test(std::span<const double>(input), k, cfg, trials, rng);
}

std::vector<CheckLine> run_bound_suite(const BoundSuiteOptions& opts) {
    std::vector<CheckLine> lines;

    const auto grid = default_tail_grid(opts.tail_trials);
    bool exact_ok = true;
    std::ostringstream exact_detail;
    for (const auto& point : grid) {
        const double exact = tail_probability_exact(point);
        const double bound = tail_bound(point.s_draws, point.g);
        if (exact > bound) {
            exact_ok = false;
            exact_detail << "(n=" << point.n_balls << ",r=" << point.r_red << ",s=" << point.s_draws
                         << ",g=" << point.g << ") exact " << format_double(exact) << " > " << format_double(bound)
                         << "; ";
        }
    }
    lines.push_back({"tail exact <= exp(-2g^2/s) on " + std::to_string(grid.size()) + "-point grid", exact_ok,
                     exact_ok ? "all points hold" : exact_detail.str()});

    std::uint64_t stream = 0;
    auto monte_carlo_line = [&](const TailExperiment& point) {
        Rng rng(split_seed(opts.seed, stream++));
        const double exact = tail_probability_exact(point);
        const double freq = hypergeometric_tail_empirical(point, rng);
        const double tol = binomial_tolerance(exact, point.trials, opts.sigmas);
        // A zero-probability event must never be observed.
        const bool ok = std::abs(freq - exact) <= tol + 1e-12;
        std::ostringstream name;
        name << "tail monte carlo" << (point.with_replacement ? " (binomial)" : "") << " n=" << point.n_balls
             << " r=" << point.r_red << " s=" << point.s_draws << " g=" << point.g;
        std::ostringstream detail;
        detail << "freq " << format_double(freq) << " exact " << format_double(exact) << " tol " << format_double(tol)
               << " bound " << format_double(tail_bound(point.s_draws, point.g));
        lines.push_back({name.str(), ok, detail.str()});
    };
    for (const auto& point : grid) monte_carlo_line(point);
    TailExperiment binomial = grid.front();
    binomial.with_replacement = true;
    monte_carlo_line(binomial);

    const std::int64_t n = opts.deviation_n;
    const std::int64_t ks[] = {n / 10, (n + 1) / 2, n - n / 10};
    for (const std::int64_t k : ks) {
        Rng rng(split_seed(opts.seed, stream++));
        const DeviationReport rep = pivot_rank_deviation_test(n, k, opts.cfg, opts.deviation_trials, rng);
        const double limit = rep.bound + binomial_tolerance(rep.bound, rep.trials, opts.sigmas);
        bool ok = !rep.events.empty();
        std::ostringstream detail;
        detail << "s=" << rep.plan.s << " g=" << format_double(rep.plan.g) << " i_v=" << rep.iv << " bound "
               << format_double(rep.bound) << " limit " << format_double(limit);
        for (const auto& ev : rep.events) {
            ok = ok && ev.frequency <= limit;
            detail << "; " << ev.name << " (rank " << ev.threshold_rank << ") freq " << format_double(ev.frequency);
        }
        std::ostringstream name;
        name << "pivot rank deviation " << deviation_case_name(rep.which) << " case n=" << n << " k=" << k;
        lines.push_back({name.str(), ok, detail.str()});
    }
    return lines;
}

}  // namespace frselect
