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

#include "qwgi/occupation.hpp"

#include <algorithm>

#include "qwgi/combinatorics.hpp"
#include "qwgi/errors.hpp"

namespace qwgi {

OccupationBasis::OccupationBasis(int n, int k) : n_(n), k_(k), dimension_(binomial(n, k)) {
    if (n < 1) throw InvalidArgument("occupation basis needs at least one node");
    if (k < 0 || k > n) throw InvalidArgument("particle number " + std::to_string(k) + " outside [0," + std::to_string(n) + "]");
    binom_.resize(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(k + 1));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= k; ++b) binom_[static_cast<std::size_t>(a) * static_cast<std::size_t>(k + 1) + static_cast<std::size_t>(b)] = binomial(a, b);
}

std::uint64_t OccupationBasis::choose(int n, int k) const {
    return binom_[static_cast<std::size_t>(n) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(k)];
}

std::uint64_t OccupationBasis::rank(std::span<const int> subset) const {
    if (static_cast<int>(subset.size()) != k_)
        throw InvalidArgument("subset has " + std::to_string(subset.size()) + " entries, expected " + std::to_string(k_));
    std::vector<int> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const int s = sorted[i];
        if (s < 0 || s >= n_) throw InvalidArgument("node " + std::to_string(s) + " out of range [0," + std::to_string(n_) + ")");
        if (i > 0 && sorted[i - 1] == s) throw InvalidArgument("duplicate node " + std::to_string(s) + " in subset");
        r += choose(s, static_cast<int>(i) + 1);
    }
    return r;
}

std::vector<int> OccupationBasis::unrank(std::uint64_t index) const {
    if (index >= dimension_) throw InvalidArgument("basis index " + std::to_string(index) + " out of range");
    std::vector<int> subset(static_cast<std::size_t>(k_));
    int c = n_ - 1;
    for (int i = k_; i >= 1; --i) {
        while (choose(c, i) > index) --c;
        subset[static_cast<std::size_t>(i - 1)] = c;
        index -= choose(c, i);
        --c;
    }
    return subset;
}

std::span<const std::uint32_t> OccupationGraph::neighbors(std::size_t index) const {
    if (index >= dimension()) throw InvalidArgument("occupation index " + std::to_string(index) + " out of range");
    return {columns_.data() + offsets_[index], columns_.data() + offsets_[index + 1]};
}

std::span<const std::int8_t> OccupationGraph::signs(std::size_t index) const {
    if (signs_.empty()) return {};
    if (index >= dimension()) throw InvalidArgument("occupation index " + std::to_string(index) + " out of range");
    return {signs_.data() + offsets_[index], signs_.data() + offsets_[index + 1]};
}

std::size_t OccupationGraph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t i = 0; i < dimension(); ++i) best = std::max<std::size_t>(best, offsets_[i + 1] - offsets_[i]);
    return best;
}

Graph OccupationGraph::as_graph() const {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < dimension(); ++i)
        for (auto j : neighbors(i))
            if (i < j) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return from_edge_list(static_cast<int>(dimension()), edges);
}

namespace {

OccupationGraph build(const Graph& g, int k, const OccupationOptions& options, bool fermionic) {
    const int n = g.node_count();
    if (k < 1 || k > n) throw InvalidArgument("particle number " + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
    const std::uint64_t dim = binomial(n, k);
    if (dim > options.max_basis)
        throw ResourceError("occupation basis C(" + std::to_string(n) + "," + std::to_string(k) + ")=" + std::to_string(dim) +
                            " exceeds limit " + std::to_string(options.max_basis));
    OccupationBasis basis(n, k);
    std::vector<std::uint64_t> offsets{0};
    offsets.reserve(dim + 1);
    std::vector<std::uint32_t> columns;
    std::vector<std::int8_t> signs;
    std::vector<char> occupied(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<std::uint32_t, std::int8_t>> row;
    for (std::uint64_t r = 0; r < dim; ++r) {
        auto state = basis.unrank(r);
        for (int v : state) occupied[static_cast<std::size_t>(v)] = 1;
        row.clear();
        for (std::size_t p = 0; p < state.size(); ++p) {
            const int from = state[p];
            for (int to : g.neighbors(from)) {
                if (occupied[static_cast<std::size_t>(to)]) continue;
                int between = 0;
                for (int v : state) between += (v > std::min(from, to) && v < std::max(from, to)) ? 1 : 0;
                auto moved = state;
                moved[p] = to;
                row.emplace_back(static_cast<std::uint32_t>(basis.rank(moved)), static_cast<std::int8_t>(between % 2 ? -1 : 1));
            }
        }
        for (int v : state) occupied[static_cast<std::size_t>(v)] = 0;
        std::sort(row.begin(), row.end());
        for (const auto& [col, sign] : row) {
            columns.push_back(col);
            if (fermionic) signs.push_back(sign);
        }
        offsets.push_back(columns.size());
    }
    return OccupationGraph(std::move(basis), std::move(offsets), std::move(columns), std::move(signs));
}

}  // namespace

OccupationGraph build_occupation_graph(const Graph& g, int k, const OccupationOptions& options) { return build(g, k, options, false); }

OccupationGraph build_fermion_occupation_graph(const Graph& g, int k, const OccupationOptions& options) {
    return build(g, k, options, true);
}

}  // namespace qwgi
