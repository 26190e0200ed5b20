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
#include <limits>
#include <random>

namespace frselect {

/// SplitMix64 finalizer. Used to derive independent per-rep seeds from a
/// master seed; the mapping is part of the reproducibility contract.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for stream `index` derived from `master`.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

/// Seedable 64-bit generator (std::mt19937_64, whose output sequence is fixed
/// by the standard) with an unbiased bounded draw.
///
/// Single owner: do not share one instance between concurrent runs.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return engine_(); }

    /// Uniform integer on [0, m], inclusive. Rejection sampling removes the
    /// modulo bias.
    std::uint64_t rand(std::uint64_t m) {
        if (m == max()) {
            return engine_();
        }
        const std::uint64_t range = m + 1;
        const std::uint64_t threshold = (0 - range) % range;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) {
                return r % range;
            }
        }
    }

    /// Uniform double on [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace frselect
