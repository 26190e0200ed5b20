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

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>

#include "frselect/metrics.hpp"
#include "frselect/sampling.hpp"

namespace frselect {

/// Ternary partitioning schemes.
enum class Scheme {
    kSafeguarded,  // pre-compares the pivot with x[r] so inner scans run unguarded
    kDoubleIndex,  // index-guarded scans, no extraneous comparisons
};

/// Equal block [a, b] after a ternary partition of [l, r]:
/// x < v on [l, a-1], x == v on [a, b], x > v on [b+1, r].
struct PartitionResult {
    Index a = 0;
    Index b = 0;
    bool operator==(const PartitionResult&) const = default;
};

/// Arrangement of a segment right after the pivot was selected from its
/// sample prefix [l, r_s]:
///   x < v on [l, l_bar-1], x == v on [l_bar, kv_plus], x > v on [kv_plus+1, r_s],
///   unexamined on [r_s+1, r].
/// r_bar = r - r_s + kv_plus is where the unexamined block ends once the
/// x > v sample block has been swapped to the end of the segment.
struct PreparedLayout {
    Index l_bar = 0;
    Index kv_plus = 0;
    Index r_bar = 0;
    Index r_s = 0;

    static PreparedLayout from_sample(Index r, Index kv_minus, Index kv_plus, Index r_s) {
        return PreparedLayout{kv_minus, kv_plus, r - r_s + kv_plus, r_s};
    }
};

enum class Order : signed char { kLess = -1, kEqual = 0, kGreater = 1 };

/// Three-way comparison of a against b; a single charged comparison.
template <typename T>
constexpr Order compare3(const T& a, const T& b) {
    if constexpr (std::three_way_comparable<T>) {
        const auto c = a <=> b;
        if (c < 0) return Order::kLess;
        if (c > 0) return Order::kGreater;
        return Order::kEqual;
    } else {
        if (a < b) return Order::kLess;
        if (b < a) return Order::kGreater;
        return Order::kEqual;
    }
}

namespace detail {

template <typename T>
class PivotProbe {
public:
    explicit PivotProbe(T pivot) : pivot_(std::move(pivot)) {}

    Order operator()(const T& x) {
        ++count_;
        return compare3(x, pivot_);
    }

    const T& pivot() const { return pivot_; }
    std::uint64_t count() const { return count_; }

private:
    T pivot_;
    std::uint64_t count_ = 0;
};

template <typename T>
T& at(std::span<T> x, Index i) {
    return x[static_cast<std::size_t>(i)];
}

template <typename T>
void exchange(std::span<T> x, Index i, Index j) {
    using std::swap;
    swap(at(x, i), at(x, j));
}

}  // namespace detail

/// Vector swap x[a..b] <-> x[b+1..c]: the first d = min(b+1-a, c-b) elements
/// of x[a..c] trade places with its last d, as x[a+i] <-> x[c-i]. No-op for
/// d <= 0.
template <typename T>
void vector_swap(std::span<T> x, Index a, Index b, Index c) {
    const Index d = std::min(b + 1 - a, c - b);
    if (d <= 0) {
        return;
    }
    if (a < 0 || c >= static_cast<Index>(x.size())) {
        throw std::out_of_range("vector_swap: range outside the array");
    }
    for (Index i = 0; i < d; ++i) {
        detail::exchange(x, a + i, c - i);
    }
}

namespace detail {

// Steps 2-5 of the safeguarded scheme from an arbitrary entry state. The
// caller guarantees sentinels: some x <= v at or below j and some x >= v at
// or above i. lo and hi are the segment bounds used by the cleanup step.
template <typename T>
PartitionResult safeguarded_loop(std::span<T> x, PivotProbe<T>& probe, Index i, Index p, Index j, Index q,
                                 Index lo, Index hi) {
    for (;;) {
        Order ci;
        do {
            ++i;
            ci = probe(at(x, i));
        } while (ci == Order::kLess);
        Order cj;
        do {
            --j;
            cj = probe(at(x, j));
        } while (cj == Order::kGreater);

        if (i < j) {
            exchange(x, i, j);
            if (cj == Order::kEqual) {
                exchange(x, i, p);
                ++p;
            }
            if (ci == Order::kEqual) {
                exchange(x, j, q);
                --q;
            }
            continue;
        }
        if (i == j) {
            if (ci != Order::kEqual) {
                throw std::logic_error("safeguarded partition: scans met on an element other than the pivot");
            }
            ++i;
            --j;
        }
        break;
    }
    const PartitionResult result{lo + j - p + 1, hi - q + i - 1};
    vector_swap(x, lo, p - 1, j);
    vector_swap(x, i, q, hi);
    return result;
}

// Steps 2-5 of the double-index scheme from an entry state.
template <typename T>
PartitionResult double_index_loop(std::span<T> x, PivotProbe<T>& probe, Index i, Index p, Index j, Index q,
                                  Index lo, Index hi) {
    for (;;) {
        while (i <= j) {
            const Order c = probe(at(x, i));
            if (c == Order::kLess) {
                ++i;
            } else if (c == Order::kEqual) {
                exchange(x, p, i);
                ++p;
                ++i;
            } else {
                break;
            }
        }
        while (i < j) {
            const Order c = probe(at(x, j));
            if (c == Order::kGreater) {
                --j;
            } else if (c == Order::kEqual) {
                exchange(x, j, q);
                --j;
                --q;
            } else {
                break;
            }
        }
        if (i >= j) {
            j = i - 1;
            break;
        }
        exchange(x, i, j);
        ++i;
        --j;
    }
    const PartitionResult result{lo + i - p, hi - q + j};
    vector_swap(x, lo, p - 1, j);
    vector_swap(x, i, q, hi);
    return result;
}

inline void check_segment(std::size_t size, Index l, Index r, const char* what) {
    if (l < 0 || l > r || r >= static_cast<Index>(size)) {
        throw std::out_of_range(what);
    }
}

}  // namespace detail

/// Safeguarded ternary partition of x[l..r] around v = x[l].
/// Charges at most r - l + 2 comparisons.
template <typename T>
PartitionResult partition_safeguarded(std::span<T> x, Index l, Index r, RunCounters& counters) {
    detail::check_segment(x.size(), l, r, "partition_safeguarded: segment outside the array");
    if (l == r) {
        return {l, r};
    }
    detail::PivotProbe<T> probe(x[static_cast<std::size_t>(l)]);
    Index i = l;
    Index p = i + 1;
    Index j = r;
    Index q = j - 1;
    const Order c = probe(detail::at(x, j));
    if (c == Order::kLess) {
        detail::exchange(x, i, j);
        p = i;
    } else if (c == Order::kGreater) {
        q = j;
    }
    const PartitionResult result = detail::safeguarded_loop(x, probe, i, p, j, q, l, r);
    counters.comparisons += probe.count();
    return result;
}

/// Double-index controlled ternary partition of x[l..r] around v = x[l].
/// Charges exactly r - l comparisons.
template <typename T>
PartitionResult partition_double_index(std::span<T> x, Index l, Index r, RunCounters& counters) {
    detail::check_segment(x.size(), l, r, "partition_double_index: segment outside the array");
    detail::PivotProbe<T> probe(x[static_cast<std::size_t>(l)]);
    const PartitionResult result = detail::double_index_loop(x, probe, l + 1, l + 1, r, r, l, r);
    counters.comparisons += probe.count();
    return result;
}

template <typename T>
PartitionResult partition(std::span<T> x, Index l, Index r, Scheme scheme, RunCounters& counters) {
    return scheme == Scheme::kSafeguarded ? partition_safeguarded(x, l, r, counters)
                                          : partition_double_index(x, l, r, counters);
}

/// Finishes a partition of x[l..r] whose sample prefix has already been
/// arranged around the pivot (see PreparedLayout). Only the r - r_s
/// unexamined elements are compared, plus at most two extraneous
/// comparisons for the safeguarded scheme.
///
/// Throws std::logic_error if the layout indices are inconsistent.
template <typename T>
PartitionResult partition_prepared(std::span<T> x, const PreparedLayout& layout, Index l, Index r, Scheme scheme,
                                   RunCounters& counters) {
    detail::check_segment(x.size(), l, r, "partition_prepared: segment outside the array");
    const auto [l_bar, kv_plus, r_bar, r_s] = layout;
    if (!(l <= l_bar && l_bar <= kv_plus && kv_plus <= r_s && r_s <= r) || r_bar != r - r_s + kv_plus) {
        throw std::logic_error("partition_prepared: inconsistent prepared layout");
    }

    vector_swap(x, kv_plus + 1, r_s, r);
    if (kv_plus == r) {
        // Nothing beyond the equal block: the sample was the whole segment.
        return {l_bar, r};
    }

    detail::PivotProbe<T> probe(x[static_cast<std::size_t>(kv_plus)]);
    PartitionResult result;
    if (scheme == Scheme::kSafeguarded) {
        if (kv_plus == r_s) {
            Index i = kv_plus;
            Index p = i + 1;
            Index j = r;
            Index q = j - 1;
            const Order c = probe(detail::at(x, j));
            if (c == Order::kLess) {
                detail::exchange(x, i, j);
                p = i;
            } else if (c == Order::kGreater) {
                q = j;
            }
            result = detail::safeguarded_loop(x, probe, i, p, j, q, l_bar, r);
        } else {
            result = detail::safeguarded_loop(x, probe, kv_plus, kv_plus + 1, r_bar + 1, r_bar, l_bar, r_bar);
        }
    } else {
        result = detail::double_index_loop(x, probe, kv_plus + 1, kv_plus + 1, r_bar, r_bar, l_bar, r_bar);
    }
    counters.comparisons += probe.count();
    return result;
}

}  // namespace frselect
