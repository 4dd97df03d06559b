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

#include "qwgi/stats.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <numeric>

#include "qwgi/combinatorics.hpp"
#include "qwgi/errors.hpp"
#include "qwgi/occupation.hpp"
#include "qwgi/parallel.hpp"

namespace qwgi {

namespace {

using cplx = std::complex<double>;

double factorial_product(const std::vector<int>& sorted) {
    double out = 1.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out *= std::tgamma(static_cast<double>(j - i) + 1.0);
        i = j;
    }
    return out;
}

cplx small_determinant(const Eigen::MatrixXcd& m) {
    switch (m.rows()) {
        case 0:
            return 1.0;
        case 1:
            return m(0, 0);
        case 2:
            return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        case 3:
            return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        default:
            return m.determinant();
    }
}

Eigen::MatrixXcd submatrix(const Eigen::MatrixXcd& u, const std::vector<int>& rows, const std::vector<int>& cols) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = u(rows[r], cols[c]);
    return m;
}

constexpr int kMaxParticles = 4;

struct Packed {
    std::array<int, kMaxParticles> nodes{};
    cplx weight;
};

Packed pack(const Configuration& c, cplx amplitude, ParticleStatistics stats) {
    Packed p;
    std::copy(c.nodes.begin(), c.nodes.end(), p.nodes.begin());
    p.weight = stats == ParticleStatistics::Boson ? amplitude / std::sqrt(factorial_product(c.nodes)) : amplitude;
    return p;
}

cplx packed_determinant(const std::array<cplx, kMaxParticles * kMaxParticles>& m, int k) {
    auto at = [&](int r, int c) { return m[static_cast<std::size_t>(r * k + c)]; };
    switch (k) {
        case 1:
            return at(0, 0);
        case 2:
            return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        case 3:
            return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                   at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        default: {
            Eigen::MatrixXcd dense(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) dense(r, c) = at(r, c);
            return dense.determinant();
        }
    }
}

cplx packed_permanent(const std::array<cplx, kMaxParticles * kMaxParticles>& m, int k) {
    auto at = [&](int r, int c) { return m[static_cast<std::size_t>(r * k + c)]; };
    switch (k) {
        case 1:
            return at(0, 0);
        case 2:
            return at(0, 0) * at(1, 1) + at(0, 1) * at(1, 0);
        case 3:
            return at(0, 0) * (at(1, 1) * at(2, 2) + at(1, 2) * at(2, 1)) + at(0, 1) * (at(1, 0) * at(2, 2) + at(1, 2) * at(2, 0)) +
                   at(0, 2) * (at(1, 0) * at(2, 1) + at(1, 1) * at(2, 0));
        default: {
            Eigen::MatrixXcd dense(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) dense(r, c) = at(r, c);
            return permanent(dense);
        }
    }
}

void check_stats(ParticleStatistics stats) {
    if (stats == ParticleStatistics::Hardcore)
        throw InvalidArgument("hardcore walks are simulated on the occupation graph, not through single-particle amplitudes");
}

}  // namespace

const char* to_string(ParticleStatistics stats) {
    switch (stats) {
        case ParticleStatistics::Hardcore:
            return "hardcore";
        case ParticleStatistics::Boson:
            return "boson";
        case ParticleStatistics::Fermion:
            return "fermion";
    }
    return "";
}

Configuration make_configuration(std::vector<int> nodes, ParticleStatistics stats) {
    std::sort(nodes.begin(), nodes.end());
    if (stats != ParticleStatistics::Boson && std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw InvalidArgument(std::string(to_string(stats)) + " configuration has a doubly occupied node");
    return {std::move(nodes)};
}

Eigen::MatrixXcd single_particle_unitary(const Graph& g, double theta) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    const auto spec = decompose(a);
    const Eigen::MatrixXcd v = spec.eigenvectors.cast<cplx>();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index i = 0; i < n; ++i) phases[i] = std::exp(cplx(0.0, -spec.eigenvalues[i] * theta));
    return v * phases.asDiagonal() * v.transpose();
}

cplx permanent(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("permanent needs a square matrix");
    const auto k = static_cast<int>(m.rows());
    if (k > 8) throw InvalidArgument("direct permanent limited to 8x8 matrices");
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    cplx sum = 0.0;
    do {
        cplx term = 1.0;
        for (int i = 0; i < k; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

cplx transition_amplitude(const Eigen::MatrixXcd& u, const Configuration& from, const Configuration& to, ParticleStatistics stats) {
    check_stats(stats);
    if (from.nodes.size() != to.nodes.size()) throw InvalidArgument("configurations hold different particle numbers");
    const auto sub = submatrix(u, to.nodes, from.nodes);
    if (stats == ParticleStatistics::Fermion) {
        make_configuration(from.nodes, stats);
        make_configuration(to.nodes, stats);
        return small_determinant(sub);
    }
    return permanent(sub) / std::sqrt(factorial_product(from.nodes) * factorial_product(to.nodes));
}

std::vector<Configuration> output_basis(int n, int k, ParticleStatistics stats) {
    check_stats(stats);
    std::vector<Configuration> out;
    if (stats == ParticleStatistics::Fermion) {
        OccupationBasis basis(n, k);
        for (std::uint64_t r = 0; r < basis.dimension(); ++r) out.push_back({basis.unrank(r)});
    } else {
        for (auto& m : multisets(n, k)) out.push_back({std::move(m)});
    }
    return out;
}

ConfigurationState uniform_distinct_input(int n, int k) {
    const auto basis = output_basis(n, k, ParticleStatistics::Fermion);
    const cplx amp = 1.0 / std::sqrt(static_cast<double>(basis.size()));
    ConfigurationState out;
    for (const auto& c : basis) out.emplace_back(c, amp);
    return out;
}

ConfigurationState uniform_multiset_input(int n, int k) {
    const auto basis = output_basis(n, k, ParticleStatistics::Boson);
    const cplx amp = 1.0 / std::sqrt(static_cast<double>(basis.size()));
    ConfigurationState out;
    for (const auto& c : basis) out.emplace_back(c, amp);
    return out;
}

ConfigurationState product_uniform_input(int n, int k) {
    // The symmetric basis state |c> is the normalized sum of its k!/prod m! orderings.
    const double scale = std::pow(static_cast<double>(n), -0.5 * k) * std::sqrt(std::tgamma(k + 1.0));
    ConfigurationState out;
    for (auto& c : output_basis(n, k, ParticleStatistics::Boson)) {
        const double amp = scale / std::sqrt(factorial_product(c.nodes));
        out.emplace_back(std::move(c), amp);
    }
    return out;
}

ProbabilityList output_distribution(const Eigen::MatrixXcd& u, const ConfigurationState& psi_in, ParticleStatistics stats, unsigned threads) {
    check_stats(stats);
    if (psi_in.empty()) throw InvalidArgument("empty input state");
    double norm = 0.0;
    for (const auto& [c, a] : psi_in) norm += std::norm(a);
    if (std::abs(norm - 1.0) > 1e-8) throw InvalidArgument("input state is not normalized (norm^2 = " + std::to_string(norm) + ")");
    const auto k = static_cast<int>(psi_in.front().first.nodes.size());
    if (k > kMaxParticles) throw InvalidArgument("at most " + std::to_string(kMaxParticles) + " non-interacting particles are supported");

    // Fold the boson normalization of each input into its amplitude once.
    std::vector<Packed> inputs;
    inputs.reserve(psi_in.size());
    for (const auto& [c, a] : psi_in) {
        if (static_cast<int>(c.nodes.size()) != k) throw InvalidArgument("input configurations hold different particle numbers");
        const auto canonical = make_configuration(c.nodes, stats);
        if (canonical.nodes != c.nodes) throw InvalidArgument("input configuration is not in sorted canonical form");
        inputs.push_back(pack(c, a, stats));
    }
    const auto outputs = output_basis(static_cast<int>(u.rows()), k, stats);
    ProbabilityList p(outputs.size());
    parallel_for(outputs.size(), threads, [&](std::size_t o) {
        const Packed out = pack(outputs[o], 1.0, stats);
        cplx amp = 0.0;
        std::array<cplx, kMaxParticles * kMaxParticles> m{};
        for (const auto& in : inputs) {
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) m[static_cast<std::size_t>(r * k + c)] = u(out.nodes[static_cast<std::size_t>(r)], in.nodes[static_cast<std::size_t>(c)]);
            amp += in.weight * (stats == ParticleStatistics::Fermion ? packed_determinant(m, k) : packed_permanent(m, k));
        }
        p[o] = std::norm(amp * out.weight);
    });
    return p;
}

ProbabilityList boson_product_distribution(const Eigen::MatrixXcd& u, int k) {
    const auto n = u.rows();
    const Eigen::VectorXcd phi = u * Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    const auto outputs = output_basis(static_cast<int>(n), k, ParticleStatistics::Boson);
    ProbabilityList p(outputs.size());
    const double kfact = std::tgamma(k + 1.0);
    for (std::size_t o = 0; o < outputs.size(); ++o) {
        double prob = kfact / factorial_product(outputs[o].nodes);
        for (int node : outputs[o].nodes) prob *= std::norm(phi[node]);
        p[o] = prob;
    }
    return p;
}

}  // namespace qwgi
