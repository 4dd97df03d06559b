// Copyright 2026 The qwgi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwgi/hop_count.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "qwgi/errors.hpp"

namespace qwgi {

namespace {

struct Overflow {};

// One sparse product in 64-bit arithmetic, throwing Overflow instead of wrapping.
std::vector<std::int64_t> step_checked(const OccupationGraph& graph, const std::vector<std::int64_t>& x) {
    std::vector<std::int64_t> y(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::int64_t sum = 0;
        for (auto j : graph.neighbors(i))
            if (__builtin_add_overflow(sum, x[j], &sum)) throw Overflow{};
        y[i] = sum;
    }
    return y;
}

std::vector<BigInt> step_big(const OccupationGraph& graph, const std::vector<BigInt>& x) {
    std::vector<BigInt> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        BigInt sum = 0;
        for (auto j : graph.neighbors(i)) sum += x[j];
        y[i] = std::move(sum);
    }
    return y;
}

HopCountVector to_big(const std::vector<std::int64_t>& x) {
    HopCountVector out;
    out.counts.reserve(x.size());
    for (auto v : x) out.counts.emplace_back(v);
    return out;
}

void check_dimension(const OccupationGraph& graph, const HopCountVector& v0) {
    if (graph.is_signed()) throw InvalidArgument("hop counting needs an unsigned occupation graph");
    if (v0.dimension() != graph.dimension())
        throw InvalidArgument("hop-count vector dimension " + std::to_string(v0.dimension()) + " does not match graph dimension " +
                              std::to_string(graph.dimension()));
    for (const auto& c : v0.counts)
        if (c < 0) throw InvalidArgument("hop counts must be non-negative");
}

std::vector<HopCountVector> series_big(const OccupationGraph& graph, int m_max, const HopCountVector& v0) {
    std::vector<HopCountVector> out{v0};
    for (int m = 1; m <= m_max; ++m) out.push_back({step_big(graph, out.back().counts)});
    return out;
}

}  // namespace

HopCountVector all_ones(std::size_t dimension) { return {std::vector<BigInt>(dimension, BigInt(1))}; }

HopCountVector unit_vector(std::size_t dimension, std::size_t index) {
    HopCountVector v{std::vector<BigInt>(dimension, BigInt(0))};
    v.counts.at(index) = 1;
    return v;
}

std::vector<HopCountVector> mhop_series(const OccupationGraph& graph, int m_max, const HopCountVector& v0) {
    if (m_max < 0) throw InvalidArgument("hop count must be non-negative");
    check_dimension(graph, v0);
    const bool small = std::all_of(v0.counts.begin(), v0.counts.end(),
                                   [](const BigInt& c) { return c <= std::numeric_limits<std::int64_t>::max(); });
    if (small) {
        try {
            std::vector<std::int64_t> x;
            x.reserve(v0.dimension());
            for (const auto& c : v0.counts) x.push_back(static_cast<std::int64_t>(c));
            std::vector<HopCountVector> out{v0};
            for (int m = 1; m <= m_max; ++m) {
                x = step_checked(graph, x);
                out.push_back(to_big(x));
            }
            return out;
        } catch (const Overflow&) {
        }
    }
    return series_big(graph, m_max, v0);
}

HopCountVector mhop_counts(const OccupationGraph& graph, int m, const HopCountVector& v0) { return mhop_series(graph, m, v0).back(); }

std::vector<HopCountVector> circuit_series(const OccupationGraph& graph, int m_max) {
    if (m_max < 0) throw InvalidArgument("hop count must be non-negative");
    if (graph.is_signed()) throw InvalidArgument("hop counting needs an unsigned occupation graph");
    const std::size_t dim = graph.dimension();
    const int half = (m_max + 1) / 2;
    std::vector<HopCountVector> out(static_cast<std::size_t>(m_max) + 1, HopCountVector{std::vector<BigInt>(dim)});
    // diag(A^m)_i = <A^ceil(m/2) e_i, A^floor(m/2) e_i> since A is symmetric.
    for (std::size_t i = 0; i < dim; ++i) {
        const auto powers = mhop_series(graph, half, unit_vector(dim, i));
        for (int m = 0; m <= m_max; ++m) {
            const auto& a = powers[static_cast<std::size_t>((m + 1) / 2)].counts;
            const auto& b = powers[static_cast<std::size_t>(m / 2)].counts;
            BigInt sum = 0;
            for (std::size_t j = 0; j < dim; ++j)
                if (a[j] != 0 && b[j] != 0) sum += a[j] * b[j];
            out[static_cast<std::size_t>(m)].counts[i] = std::move(sum);
        }
    }
    return out;
}

std::vector<BigInt> sorted_counts(const HopCountVector& v) {
    auto sorted = v.counts;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

}  // namespace qwgi
