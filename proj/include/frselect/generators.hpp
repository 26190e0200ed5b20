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
#include <string>
#include <string_view>
#include <vector>

#include "frselect/rng.hpp"

namespace frselect {

enum class SequenceKind { kRandom, kOneZero, kSorted, kRotated, kOrganPipe, kM3Killer, kTwoFaced };

struct SequenceSpec {
    SequenceKind kind = SequenceKind::kRandom;
    std::int64_t n = 0;
    std::uint64_t seed = 0;  // read by kRandom, kOneZero and kTwoFaced only
};

/// All seven kinds in table order.
const std::vector<SequenceKind>& all_sequence_kinds();

std::string_view sequence_name(SequenceKind kind);
std::optional<SequenceKind> parse_sequence_kind(std::string_view name);

/// True for kinds whose content depends on the seed.
bool is_randomized(SequenceKind kind);

/// Builds the input sequence (values positive integers, or 0/1 for onezero):
///   random     uniform permutation of 1..n
///   onezero    uniform permutation of ceil(n/2) ones and floor(n/2) zeros
///   sorted     1..n
///   rotated    2, 3, ..., n, 1
///   organpipe  min(i, n+1-i) at 1-based position i: 1, 2, ..., n/2, n/2, ..., 2, 1
///   m3killer   Musser's median-of-3 killer for n = 4j, n >= 16
///   twofaced   m3killer shuffled on 1-based positions [4 floor(log2 n), n/2 - 1]
///              and [n/2 + 4 floor(log2 n) - 1, n - 2]
///
/// Throws std::invalid_argument for n < 1, or for m3killer/twofaced when n
/// is not a multiple of 4 or is below 16.
std::vector<double> generate(const SequenceSpec& spec, Rng& rng);

/// Same, with an Rng seeded from spec.seed.
std::vector<double> generate(const SequenceSpec& spec);

}  // namespace frselect
