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

#include <cstdint>
#include <span>
#include <vector>

namespace qwgi {

// Binomial coefficient C(n, k); saturates at UINT64_MAX on overflow.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

// All sorted k-multisets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> multisets(int n, int k);

// Even- or odd-cardinality subsets of `items`, visited in binary-counter order
// (bit i of the counter selects items[i]).
template <typename T>
std::vector<std::vector<T>> subsets_with_parity(std::span<const T> items, bool odd) {
    std::vector<std::vector<T>> out;
    const std::uint64_t count = std::uint64_t{1} << items.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if ((__builtin_popcountll(mask) % 2 == 1) != odd) continue;
        std::vector<T> subset;
        for (std::size_t i = 0; i < items.size(); ++i)
            if ((mask >> i) & 1u) subset.push_back(items[i]);
        out.push_back(std::move(subset));
    }
    return out;
}

}  // namespace qwgi
