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
#include <map>
#include <vector>

#include "qwgi/graph.hpp"

namespace qwgi {

// Interning table shared by every coloring that should be comparable. A
// signature always maps to the same color id within one session, and color
// ids created in different refinement rounds never coincide, so refining two
// graphs in one session gives the same verdict as refining their disjoint union.
class WLSession {
public:
    WLSession();

    int intern(const std::vector<int>& signature);
    std::uint64_t id() const noexcept { return id_; }

private:
    std::uint64_t id_;
    std::map<std::vector<int>, int> table_;
};

struct WLColoring {
    int arity = 1;
    std::vector<int> colors;               // per node (arity 1) or per tuple, tuple index in base n
    int rounds = 0;                        // refinement rounds until the partition stopped splitting
    std::vector<std::size_t> class_counts; // number of classes after each round, starting with the initial coloring
    std::map<int, std::size_t> histogram;
    std::uint64_t session = 0;
};

// 1-WL: initial color = degree, then color <- (color, sorted neighbor colors).
WLColoring color_refinement(const Graph& g, WLSession& session);

inline constexpr std::uint64_t kMaxWLTuples = 1'000'000;

// Oblivious k-WL over all n^k ordered tuples. The initial color is the
// equality and adjacency pattern of the tuple; each round appends, for every
// position j, the sorted multiset of colors of the tuples obtained by replacing
// entry j with each node. Throws ResourceError when n^k > kMaxWLTuples.
WLColoring k_wl(const Graph& g, int k, WLSession& session);

// Multiset equality of color histograms. Throws InvalidArgument for differing
// arities or colorings from different sessions.
bool histograms_equal(const WLColoring& a, const WLColoring& b);

struct WLComparison {
    WLColoring a;
    WLColoring b;
    bool histograms_equal = false;
};

// Refines both graphs in one fresh session (k = 1 uses color refinement).
WLComparison compare_wl(const Graph& a, const Graph& b, int k);

}  // namespace qwgi
