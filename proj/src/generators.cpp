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

#include "frselect/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <utility>

namespace frselect {

namespace {

struct NamedKind {
    std::string_view name;
    SequenceKind kind;
};

constexpr std::array<NamedKind, 7> kNames{{
    {"random", SequenceKind::kRandom},
    {"onezero", SequenceKind::kOneZero},
    {"sorted", SequenceKind::kSorted},
    {"rotated", SequenceKind::kRotated},
    {"organpipe", SequenceKind::kOrganPipe},
    {"m3killer", SequenceKind::kM3Killer},
    {"twofaced", SequenceKind::kTwoFaced},
}};

// Fisher-Yates over the 0-based positions [first, last].
void shuffle_range(std::vector<double>& v, std::int64_t first, std::int64_t last, Rng& rng) {
    for (std::int64_t i = first; i < last; ++i) {
        const auto j = i + static_cast<std::int64_t>(rng.rand(static_cast<std::uint64_t>(last - i)));
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    }
}

std::vector<double> m3killer(std::int64_t n) {
    const std::int64_t k = n / 2;
    std::vector<double> v(static_cast<std::size_t>(n));
    // 1-based position p holds:
    //   p < k:            p if p is odd, k + p - 1 if p is even
    //   k <= p <= 2k - 2: 2 (p - k + 1)
    //   p = 2k - 1, 2k:   p
    for (std::int64_t p = 1; p <= n; ++p) {
        std::int64_t value;
        if (p < k) {
            value = p % 2 == 1 ? p : k + p - 1;
        } else if (p <= 2 * k - 2) {
            value = 2 * (p - k + 1);
        } else {
            value = p;
        }
        v[static_cast<std::size_t>(p - 1)] = static_cast<double>(value);
    }
    return v;
}

}  // namespace

const std::vector<SequenceKind>& all_sequence_kinds() {
    static const std::vector<SequenceKind> kinds = [] {
        std::vector<SequenceKind> out;
        for (const auto& entry : kNames) out.push_back(entry.kind);
        return out;
    }();
    return kinds;
}

std::string_view sequence_name(SequenceKind kind) {
    for (const auto& entry : kNames) {
        if (entry.kind == kind) return entry.name;
    }
    return "unknown";
}

std::optional<SequenceKind> parse_sequence_kind(std::string_view name) {
    for (const auto& entry : kNames) {
        if (entry.name == name) return entry.kind;
    }
    return std::nullopt;
}

bool is_randomized(SequenceKind kind) {
    return kind == SequenceKind::kRandom || kind == SequenceKind::kOneZero || kind == SequenceKind::kTwoFaced;
}

std::vector<double> generate(const SequenceSpec& spec, Rng& rng) {
    const std::int64_t n = spec.n;
    if (n < 1) {
        throw std::invalid_argument("generate: n must be positive");
    }
    if ((spec.kind == SequenceKind::kM3Killer || spec.kind == SequenceKind::kTwoFaced) && (n % 4 != 0 || n < 16)) {
        throw std::invalid_argument("generate: m3killer and twofaced need n divisible by 4 and n >= 16");
    }

    std::vector<double> v(static_cast<std::size_t>(n));
    switch (spec.kind) {
        case SequenceKind::kSorted:
        case SequenceKind::kRandom:
            for (std::int64_t i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<double>(i + 1);
            if (spec.kind == SequenceKind::kRandom) shuffle_range(v, 0, n - 1, rng);
            break;
        case SequenceKind::kOneZero:
            for (std::int64_t i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i < (n + 1) / 2 ? 1.0 : 0.0;
            shuffle_range(v, 0, n - 1, rng);
            break;
        case SequenceKind::kRotated:
            for (std::int64_t i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<double>((i + 1) % n + 1);
            break;
        case SequenceKind::kOrganPipe:
            for (std::int64_t p = 1; p <= n; ++p) {
                v[static_cast<std::size_t>(p - 1)] = static_cast<double>(std::min(p, n + 1 - p));
            }
            break;
        case SequenceKind::kM3Killer:
            v = m3killer(n);
            break;
        case SequenceKind::kTwoFaced: {
            v = m3killer(n);
            const auto log2n = static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(n))) - 1;
            // 1-based inclusive windows, converted to 0-based.
            shuffle_range(v, 4 * log2n - 1, n / 2 - 2, rng);
            shuffle_range(v, n / 2 + 4 * log2n - 2, n - 3, rng);
            break;
        }
    }
    return v;
}

std::vector<double> generate(const SequenceSpec& spec) {
    Rng rng(spec.seed);
    return generate(spec, rng);
}

}  // namespace frselect
