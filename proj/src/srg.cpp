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

#include "qwgi/srg.hpp"

#include <algorithm>
#include <cstdlib>

#include "qwgi/errors.hpp"
#include "qwgi/occupation.hpp"

namespace qwgi {

namespace {

std::vector<std::int64_t> dense_adjacency(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<std::int64_t> a(n * n, 0);
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
        a[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
    }
    return a;
}

bool connected(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.node_count();
}

Graph cayley_z4xz4(const std::vector<std::pair<int, int>>& connection) {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (const auto& [di, dj] : connection) {
                const int u = 4 * i + j;
                const int v = 4 * ((i + di + 4) % 4) + (j + dj + 4) % 4;
                if (u < v) edges.emplace_back(u, v);
            }
    return from_edge_list(16, edges);
}

}  // namespace

SrgCheck srg_params(const Graph& g) {
    SrgCheck check;
    if (!connected(g)) {
        check.status = SrgCheck::Status::Disconnected;
        return check;
    }
    const int n = g.node_count();
    const int d = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != d) {
            check.counterexample = std::pair<Edge, Edge>{{0, 0}, {v, v}};
            return check;
        }
    const auto a = dense_adjacency(g);
    const auto un = static_cast<std::size_t>(n);
    std::optional<int> mu;
    std::optional<int> nu;
    std::optional<Edge> first_adjacent;
    std::optional<Edge> first_non_adjacent;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int common = 0;
            for (std::size_t w = 0; w < un; ++w)
                common += static_cast<int>(a[static_cast<std::size_t>(i) * un + w] * a[static_cast<std::size_t>(j) * un + w]);
            const bool adjacent = a[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] != 0;
            auto& value = adjacent ? mu : nu;
            auto& first = adjacent ? first_adjacent : first_non_adjacent;
            if (!value) {
                value = common;
                first = Edge{i, j};
            } else if (*value != common) {
                check.counterexample = std::pair<Edge, Edge>{*first, Edge{i, j}};
                return check;
            }
        }
    check.status = SrgCheck::Status::StronglyRegular;
    check.params = SrgParams{n, d, mu.value_or(0), nu.value_or(0)};
    return check;
}

bool srg_feasible(const SrgParams& p) { return p.d * (p.d - p.mu - 1) == (p.n - p.d - 1) * p.nu; }

Graph rooks_4x4() {
    std::vector<Edge> edges;
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v)
            if (u / 4 == v / 4 || u % 4 == v % 4) edges.emplace_back(u, v);
    return from_edge_list(16, edges);
}

Graph shrikhande() { return cayley_z4xz4({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}); }

Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int b = 1; b < 5; ++b)
        for (int a = 0; a < b; ++a) pairs.emplace_back(a, b);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto [a, b] = pairs[i];
            const auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return from_edge_list(10, edges);
}

std::int64_t verify_closed_algebra(const Graph& g, const SrgParams& p) {
    const auto n = static_cast<std::size_t>(g.node_count());
    const auto a = dense_adjacency(g);
    std::int64_t residual = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t square = 0;
            for (std::size_t w = 0; w < n; ++w) square += a[i * n + w] * a[w * n + j];
            const std::int64_t aij = a[i * n + j];
            const std::int64_t identity = i == j ? 1 : 0;
            const std::int64_t expected = p.d * identity + p.mu * aij + p.nu * (1 - identity - aij);
            residual = std::max(residual, std::abs(square - expected));
        }
    return residual;
}

OccupationDegreeProfile occupation_degree_profile(const Graph& g, PairType type) {
    const auto occ = build_occupation_graph(g, 2);
    const auto& basis = occ.basis();
    std::optional<OccupationDegreeProfile> profile;
    for (std::size_t s = 0; s < occ.dimension(); ++s) {
        const auto pair = basis.unrank(s);
        if (g.has_edge(pair[0], pair[1]) != (type == PairType::Edge)) continue;
        OccupationDegreeProfile here;
        here.degree = static_cast<int>(occ.degree(s));
        for (auto t : occ.neighbors(s)) {
            const auto other = basis.unrank(t);
            ++(g.has_edge(other[0], other[1]) ? here.edge_type_neighbors : here.non_edge_type_neighbors);
        }
        if (!profile) {
            profile = here;
        } else if (*profile != here) {
            throw StructuralError("occupation degree profile is not uniform: state {" + std::to_string(pair[0]) + "," +
                                  std::to_string(pair[1]) + "} differs");
        }
    }
    if (!profile) throw InvalidArgument("graph has no node pairs of the requested type");
    return *profile;
}

OccupationDegreeProfile expected_degree_profile(const SrgParams& p, PairType type) {
    if (type == PairType::Edge) return {2 * (p.d - 1), 2 * p.mu, 2 * (p.d - 1 - p.mu)};
    return {2 * p.d, 2 * p.nu, 2 * (p.d - p.nu)};
}

}  // namespace qwgi
