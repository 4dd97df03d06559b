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

#include "qwgi/graph.hpp"

namespace qwgi {

// Basis of the k-particle hardcore sector: the C(n, k) k-subsets of n nodes,
// indexed by the colexicographic combinatorial number system
// rank(s_0 < s_1 < ... < s_{k-1}) = sum_i C(s_i, i + 1).
class OccupationBasis {
public:
    OccupationBasis(int n, int k);

    int node_count() const noexcept { return n_; }
    int particles() const noexcept { return k_; }
    std::uint64_t dimension() const noexcept { return dimension_; }

    // Accepts the subset in any order; rejects wrong cardinality, duplicates,
    // and out-of-range nodes.
    std::uint64_t rank(std::span<const int> subset) const;
    std::vector<int> unrank(std::uint64_t index) const;

private:
    std::uint64_t choose(int n, int k) const;

    int n_;
    int k_;
    std::uint64_t dimension_;
    std::vector<std::uint64_t> binom_;  // (n + 1) x (k + 1)
};

struct OccupationOptions {
    std::uint64_t max_basis = 20000;
};

// Sparse symmetric 0/1 adjacency of the occupation graph G^(k), stored CSR
// style (row offsets + sorted column indices).
class OccupationGraph {
public:
    OccupationGraph(OccupationBasis basis, std::vector<std::uint64_t> offsets, std::vector<std::uint32_t> columns,
                    std::vector<std::int8_t> signs = {})
        : basis_(std::move(basis)), offsets_(std::move(offsets)), columns_(std::move(columns)), signs_(std::move(signs)) {}

    const OccupationBasis& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return offsets_.size() - 1; }
    std::span<const std::uint32_t> neighbors(std::size_t index) const;
    std::size_t degree(std::size_t index) const { return neighbors(index).size(); }
    std::size_t max_degree() const;
    std::size_t nonzeros() const noexcept { return columns_.size(); }

    // Entry signs aligned with neighbors(index); empty span for an unsigned graph.
    bool is_signed() const noexcept { return !signs_.empty(); }
    std::span<const std::int8_t> signs(std::size_t index) const;

    // The occupation graph as an ordinary graph with D integer-labelled nodes.
    Graph as_graph() const;

private:
    OccupationBasis basis_;
    std::vector<std::uint64_t> offsets_;
    std::vector<std::uint32_t> columns_;
    std::vector<std::int8_t> signs_;
};

// Two basis states are adjacent iff they differ by moving one particle along
// an edge of g onto an empty node. Throws ResourceError when C(n, k) exceeds
// options.max_basis.
OccupationGraph build_occupation_graph(const Graph& g, int k, const OccupationOptions& options = {});

// Same sparsity pattern with Jordan-Wigner signs: moving a particle from p to q
// picks up (-1)^(number of occupied nodes strictly between p and q). This is
// the k-fermion sector of the free hopping Hamiltonian, whose propagator has
// matrix elements det U[T, S] for the single-particle U.
OccupationGraph build_fermion_occupation_graph(const Graph& g, int k, const OccupationOptions& options = {});

}  // namespace qwgi
