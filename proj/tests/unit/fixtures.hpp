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

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qwgi/graph.hpp"

namespace qwgi::testing {

inline std::vector<int> random_permutation(int n, std::uint32_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Dense 0/1 adjacency as nested vectors, used by the brute-force oracles.
inline std::vector<std::vector<long long>> adjacency_rows(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    return a;
}

inline std::vector<std::vector<long long>> matmul(const std::vector<std::vector<long long>>& x, const std::vector<std::vector<long long>>& y) {
    const std::size_t n = x.size();
    std::vector<std::vector<long long>> out(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            if (x[i][l] != 0)
                for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][l] * y[l][j];
    return out;
}

}  // namespace qwgi::testing
