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

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qwgi/occupation.hpp"

namespace qwgi {

using BigInt = boost::multiprecision::cpp_int;

// Exact non-negative walk counts over an occupation basis.
struct HopCountVector {
    std::vector<BigInt> counts;

    std::size_t dimension() const noexcept { return counts.size(); }
    bool operator==(const HopCountVector&) const = default;
};

HopCountVector all_ones(std::size_t dimension);
HopCountVector unit_vector(std::size_t dimension, std::size_t index);

// A^m v0 by repeated sparse products. Runs in 64-bit arithmetic and redoes the
// computation with arbitrary precision if any intermediate would overflow.
HopCountVector mhop_counts(const OccupationGraph& graph, int m, const HopCountVector& v0);

// Element m of the result is A^m v0, for m = 0..m_max.
std::vector<HopCountVector> mhop_series(const OccupationGraph& graph, int m_max, const HopCountVector& v0);

// Element m of the result is diag(A^m) (closed m-walks per basis state), m = 0..m_max.
std::vector<HopCountVector> circuit_series(const OccupationGraph& graph, int m_max);

std::vector<BigInt> sorted_counts(const HopCountVector& v);

}  // namespace qwgi
