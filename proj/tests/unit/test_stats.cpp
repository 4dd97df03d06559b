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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "qwgi/cfi.hpp"
#include "qwgi/errors.hpp"
#include "qwgi/evolve.hpp"
#include "qwgi/experiments.hpp"
#include "qwgi/stats.hpp"

using namespace qwgi;

namespace {

// Oracle: permanent by Ryser's formula.
std::complex<double> ryser(const Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    std::complex<double> total = 0.0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::complex<double> prod = 1.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> row = 0.0;
            for (int j = 0; j < n; ++j)
                if ((mask >> j) & 1u) row += m(i, j);
            prod *= row;
        }
        total += ((n - __builtin_popcount(mask)) % 2 ? -1.0 : 1.0) * prod;
    }
    return total;
}

double sum(const ProbabilityList& p) {
    double s = 0.0;
    for (double x : p) s += x;
    return s;
}

}  // namespace

TEST_CASE("single-particle unitary") {
    const auto id = single_particle_unitary(cycle_graph(5), 0.0);
    CHECK(id.isApprox(Eigen::MatrixXcd::Identity(5, 5)));
    const auto u = single_particle_unitary(path_graph(2), std::numbers::pi / 2);
    CHECK(std::abs(std::abs(u(0, 1)) - 1.0) < 1e-12);
    for (const auto& g : {build_morris_pair(2).p, build_cai_pair(2).q, cycle_graph(6)}) {
        const auto w = single_particle_unitary(g, 1.1);
        CHECK((w * w.adjoint() - Eigen::MatrixXcd::Identity(w.rows(), w.cols())).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("permanent against Ryser") {
    std::mt19937 rng(4);
    std::normal_distribution<double> normal;
    for (int n = 1; n <= 6; ++n) {
        Eigen::MatrixXcd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = {normal(rng), normal(rng)};
        CHECK(std::abs(permanent(m) - ryser(m)) < 1e-10 * std::max(1.0, std::abs(ryser(m))));
    }
    CHECK(std::abs(permanent(Eigen::MatrixXcd::Ones(4, 4)) - 24.0) < 1e-12);
    CHECK_THROWS_AS(permanent(Eigen::MatrixXcd::Ones(9, 9)), InvalidArgument);
}

TEST_CASE("transition amplitudes") {
    const auto u = single_particle_unitary(cycle_graph(5), 0.8);
    for (auto stats : {ParticleStatistics::Boson, ParticleStatistics::Fermion}) {
        const auto a = transition_amplitude(u, make_configuration({1}, stats), make_configuration({3}, stats), stats);
        CHECK(std::abs(a - u(3, 1)) < 1e-15);
    }
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
    const auto from = make_configuration({0, 2}, ParticleStatistics::Fermion);
    const auto other = make_configuration({1, 2}, ParticleStatistics::Fermion);
    CHECK(std::abs(transition_amplitude(id, from, from, ParticleStatistics::Fermion) - 1.0) < 1e-15);
    CHECK(std::abs(transition_amplitude(id, from, other, ParticleStatistics::Fermion)) < 1e-15);
    CHECK(std::abs(transition_amplitude(id, from, from, ParticleStatistics::Boson) - 1.0) < 1e-15);

    // Balanced splitter: U = [[c, -is], [-is, c]] at pi/4. perm = c^2 - s^2 = 0, det = c^2 + s^2 = 1.
    const auto bs = single_particle_unitary(path_graph(2), std::numbers::pi / 4);
    const auto both = make_configuration({0, 1}, ParticleStatistics::Boson);
    CHECK(std::abs(transition_amplitude(bs, both, both, ParticleStatistics::Boson)) < 1e-12);
    CHECK(std::abs(std::abs(transition_amplitude(bs, both, both, ParticleStatistics::Fermion)) - 1.0) < 1e-12);

    const auto twice = make_configuration({0, 0}, ParticleStatistics::Boson);
    CHECK(std::abs(std::abs(transition_amplitude(bs, both, twice, ParticleStatistics::Boson)) - std::sqrt(0.5)) < 1e-12);
    CHECK_THROWS_AS(make_configuration({1, 1}, ParticleStatistics::Fermion), InvalidArgument);
    CHECK_THROWS_AS(transition_amplitude(bs, both, both, ParticleStatistics::Hardcore), InvalidArgument);
}

TEST_CASE("output distributions") {
    const auto g = build_morris_pair(2).q;
    const int n = g.node_count();
    const auto u = single_particle_unitary(g, 0.7);

    // k = 1: all statistics coincide with the hardcore walk.
    const auto occ = build_occupation_graph(g, 1);
    const auto hard = probability_list(evolve(occ, uniform_superposition(occ.basis()), 0.7));
    for (auto stats : {ParticleStatistics::Boson, ParticleStatistics::Fermion}) {
        const auto p = output_distribution(u, uniform_distinct_input(n, 1), stats);
        for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p[i] - hard[i]) < 1e-12);
    }

    for (int k : {2, 3}) {
        CHECK(std::abs(sum(output_distribution(u, uniform_distinct_input(n, k), ParticleStatistics::Fermion)) - 1.0) < 1e-8);
        CHECK(std::abs(sum(output_distribution(u, uniform_multiset_input(n, k), ParticleStatistics::Boson)) - 1.0) < 1e-8);
        const auto generic = output_distribution(u, product_uniform_input(n, k), ParticleStatistics::Boson);
        const auto closed = boson_product_distribution(u, k);
        REQUIRE(generic.size() == closed.size());
        for (std::size_t i = 0; i < closed.size(); ++i) CHECK(std::abs(generic[i] - closed[i]) < 1e-12);
    }

    ConfigurationState bad = uniform_distinct_input(n, 2);
    bad[0].second *= 2.0;
    CHECK_THROWS_AS(output_distribution(u, bad, ParticleStatistics::Fermion), InvalidArgument);
}

TEST_CASE("fermion determinants match the signed occupation walk") {
    const auto g = build_cai_pair(1).p;
    const int n = g.node_count();
    const double theta = 1.3;
    const auto u = single_particle_unitary(g, theta);
    const auto occ = build_fermion_occupation_graph(g, 2);
    const Evolver ev(occ);
    const auto prop = ev.propagator(theta);
    const auto basis = output_basis(n, 2, ParticleStatistics::Fermion);
    for (std::size_t s = 0; s < basis.size(); ++s)
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const auto det = transition_amplitude(u, basis[s], basis[t], ParticleStatistics::Fermion);
            CHECK(std::abs(det - prop(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s))) < 1e-10);
        }
}

TEST_CASE("boson interference hides the Morris pair") {
    const auto pair = build_morris_pair(2);
    for (double theta : default_theta_grid(8)) {
        const auto a = boson_product_distribution(single_particle_unitary(pair.p, theta), 2);
        const auto b = boson_product_distribution(single_particle_unitary(pair.q, theta), 2);
        CHECK(delta(a, b) <= 1e-12);
    }
}

TEST_CASE("threaded output matches the serial result") {
    const auto g = build_morris_pair(2).p;
    const auto u = single_particle_unitary(g, 2.1);
    const auto psi = uniform_distinct_input(g.node_count(), 3);
    CHECK(output_distribution(u, psi, ParticleStatistics::Fermion, 1) == output_distribution(u, psi, ParticleStatistics::Fermion, 4));
}
