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

#include <optional>
#include <vector>

#include "qwgi/graph.hpp"

namespace qwgi {

struct IsomorphismOptions {
    int node_limit = 64;
};

struct IsomorphismResult {
    bool isomorphic = false;
    // witness[i] is the node of the second graph that node i of the first maps to.
    std::optional<std::vector<int>> witness;
};

// Exact isomorphism test by individualization and joint color refinement with
// backtracking over every candidate of the target cell. Refinement is only used
// to prune; termination and correctness come from exhaustive branching. Any
// witness is checked edge by edge before it is returned.
// Throws OracleOutOfRange when either graph exceeds options.node_limit.
IsomorphismResult are_isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options = {});

// True when `map` is a bijection carrying the edge set of a exactly onto that of b.
bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& map);

}  // namespace qwgi
