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

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwgi/evolve.hpp"
#include "qwgi/graph.hpp"

namespace qwgi {

enum class ParticleStatistics { Hardcore, Boson, Fermion };

const char* to_string(ParticleStatistics stats);

// Sorted multiset of node indices. Fermion and hardcore configurations are duplicate-free.
struct Configuration {
    std::vector<int> nodes;
    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;
};

Configuration make_configuration(std::vector<int> nodes, ParticleStatistics stats);

// exp(-i A theta) for the base adjacency A.
Eigen::MatrixXcd single_particle_unitary(const Graph& g, double theta);

// Direct permutation sum; intended for k <= 4.
std::complex<double> permanent(const Eigen::MatrixXcd& m);

// Fermions: det U[to, from]. Bosons: perm U[to, from] / sqrt(prod m_from! prod m_to!).
// Rows and columns follow the canonical sorted order of the configurations.
std::complex<double> transition_amplitude(const Eigen::MatrixXcd& u, const Configuration& from, const Configuration& to, ParticleStatistics stats);

// Output basis for a statistics: distinct k-subsets in colex rank order for
// fermions, k-multisets in lexicographic order for bosons.
std::vector<Configuration> output_basis(int n, int k, ParticleStatistics stats);

using ConfigurationState = std::vector<std::pair<Configuration, std::complex<double>>>;

// Uniform amplitude over distinct k-subsets (the hardcore |1^(k)>).
ConfigurationState uniform_distinct_input(int n, int k);
// Uniform amplitude over all k-multisets.
ConfigurationState uniform_multiset_input(int n, int k);
// The product state |1^(1)> ⊗ ... ⊗ |1^(1)> written in the symmetric multiset basis.
ConfigurationState product_uniform_input(int n, int k);

// |sum_b psi(b) <c|U|b>|^2 over output_basis(n, k, stats), for k <= 4. Input
// configurations must be canonical and the state normalized to 1e-8.
ProbabilityList output_distribution(const Eigen::MatrixXcd& u, const ConfigurationState& psi_in, ParticleStatistics stats,
                                    unsigned threads = 1);

// Closed form for bosons started in k copies of the single-particle mode phi = U 1/sqrt(n):
// P(c) = k! / prod m_c! * prod_i |phi_i|^(2 m_i), over the boson output basis.
ProbabilityList boson_product_distribution(const Eigen::MatrixXcd& u, int k);

}  // namespace qwgi
