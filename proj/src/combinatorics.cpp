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

#include "qwgi/combinatorics.hpp"

#include <limits>

namespace qwgi {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

std::vector<std::vector<int>> multisets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (n <= 0 || k < 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(k), 0);
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        const int next = cur[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < k; ++i) cur[static_cast<std::size_t>(i)] = next;
    }
    return out;
}

}  // namespace qwgi
