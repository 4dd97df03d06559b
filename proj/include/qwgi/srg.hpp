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
#include <optional>
#include <utility>

#include "qwgi/graph.hpp"

namespace qwgi {

// Strongly regular graph parameters. `mu` counts common neighbors of adjacent
// pairs and `nu` those of non-adjacent pairs.
struct SrgParams {
    int n = 0;
    int d = 0;
    int mu = 0;
    int nu = 0;
    bool operator==(const SrgParams&) const = default;
};

struct SrgCheck {
    enum class Status { StronglyRegular, NotStronglyRegular, Disconnected };
    Status status = Status::NotStronglyRegular;
    std::optional<SrgParams> params;
    // Two pairs of the same kind whose common-neighbor counts differ, or two
    // nodes of different degree.
    std::optional<std::pair<Edge, Edge>> counterexample;
};

SrgCheck srg_params(const Graph& g);

// d(d - mu - 1) == (n - d - 1) nu
bool srg_feasible(const SrgParams& p);

// Z4 x Z4, (i, j) -> 4i + j, adjacent iff same row or same column.
Graph rooks_4x4();
// Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph shrikhande();
// Kneser graph K(5, 2).
Graph petersen();

// max |A^2 - (d I + mu A + nu (J - I - A))| in exact integer arithmetic.
std::int64_t verify_closed_algebra(const Graph& g, const SrgParams& p);

enum class PairType { Edge, NonEdge };

struct OccupationDegreeProfile {
    int degree = 0;
    int edge_type_neighbors = 0;
    int non_edge_type_neighbors = 0;
    bool operator==(const OccupationDegreeProfile&) const = default;
};

// Measures degrees in the two-particle occupation graph for every basis state
// {u, v} of the given pair type. Throws StructuralError if the values are not
// the same for all such states.
OccupationDegreeProfile occupation_degree_profile(const Graph& g, PairType type);

// Closed forms for a true SRG: edge type -> (2(d-1), 2mu, 2(d-1-mu)),
// non-edge type -> (2d, 2nu, 2(d-nu)).
OccupationDegreeProfile expected_degree_profile(const SrgParams& p, PairType type);

}  // namespace qwgi
