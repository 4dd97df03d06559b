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

#include "qwgi/graph.hpp"

namespace qwgi {

enum class CfiConstruction { Morris, Cai };

// Two rival graphs over the complete base graph K_{k+1}.
struct CfiPair {
    Graph p;
    Graph q;
    int k = 0;
    CfiConstruction construction = CfiConstruction::Morris;
};

inline constexpr int kMaxCfiK = 6;

// Morris-style pair. P_k has a top node (v, S) for every even subset S of the
// base edges at v and bottom nodes e^0, e^1 per base edge; Q_k uses odd
// subsets at vertex 0. Node order: top nodes by vertex then binary-counter
// subset order, followed by e^0, e^1 for each base edge in lexicographic order.
CfiPair build_morris_pair(int k);

// Gadget pair: per base vertex, middle nodes m_{v,S} for even S and outer
// nodes a_{v,e}, b_{v,e} per incident edge; the outer nodes of both ends of
// each base edge are linked a-a and b-b, except that Q crosses the link on
// base edge {0,1}.
CfiPair build_cai_pair(int k);

std::uint64_t morris_node_count(int k);
std::uint64_t cai_node_count(int k);

const char* to_string(CfiConstruction c);

}  // namespace qwgi
