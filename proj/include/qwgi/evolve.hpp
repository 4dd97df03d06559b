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
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwgi/occupation.hpp"

namespace qwgi {

using ProbabilityList = std::vector<double>;

// Complex amplitudes over an occupation basis.
struct StateVector {
    Eigen::VectorXcd amplitudes;

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(amplitudes.size()); }
    double norm() const { return amplitudes.norm(); }
};

StateVector uniform_superposition(const OccupationBasis& basis);
StateVector localized_state(const OccupationBasis& basis, std::span<const int> subset);

// Eigenvalues in ascending order with orthonormal eigenvectors (columns).
// Clusters are half-open index ranges [begin, end) of numerically equal
// eigenvalues: neighbours closer than 1e-8 * max(1, max |lambda|) merge.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
};

inline constexpr double kClusterRelativeTolerance = 1e-8;
// Eigenvalues closer than this (relative) are treated as one frequency by the
// closed-form time average; far below any clustering decision.
inline constexpr double kEigenvalueMergeTolerance = 1e-12;

SpectralDecomposition decompose(const Eigen::MatrixXd& symmetric);
SpectralDecomposition decompose(const OccupationGraph& graph);

Eigen::MatrixXd dense_adjacency(const OccupationGraph& graph);

struct EvolveOptions {
    std::size_t dense_threshold = 4000;
    double krylov_tolerance = 1e-10;
    int krylov_dimension = 60;
    long max_krylov_iterations = 2'000'000;
};

enum class EvolveMethod { Spectral, Krylov };

const char* to_string(EvolveMethod method);

// Applies exp(-i H theta) where H is the occupation-graph adjacency (signed
// for fermionic graphs). Dimensions
// up to options.dense_threshold use a dense eigendecomposition computed once at
// construction; larger ones use restarted Lanczos with full
// reorthogonalization and an a-posteriori step-error estimate.
class Evolver {
public:
    explicit Evolver(OccupationGraph graph, EvolveOptions options = {});
    Evolver(OccupationGraph graph, EvolveOptions options, EvolveMethod method);

    EvolveMethod method() const noexcept { return method_; }
    std::size_t dimension() const noexcept { return graph_.dimension(); }
    const OccupationGraph& graph() const noexcept { return graph_; }
    const EvolveOptions& options() const noexcept { return options_; }

    StateVector apply(const StateVector& psi, double theta) const;

    // Full propagator exp(-i H theta); spectral method only.
    Eigen::MatrixXcd propagator(double theta) const;

    // Throws ResourceError for the Krylov method.
    const SpectralDecomposition& spectrum() const;

private:
    StateVector apply_spectral(const StateVector& psi, double theta) const;
    StateVector apply_krylov(const StateVector& psi, double theta) const;

    OccupationGraph graph_;
    EvolveOptions options_;
    EvolveMethod method_;
    SpectralDecomposition spectrum_;
};

StateVector evolve(const OccupationGraph& graph, const StateVector& psi, double theta, const EvolveOptions& options = {});

// y = A x for the occupation adjacency A.
Eigen::VectorXcd multiply(const OccupationGraph& graph, const Eigen::VectorXcd& x);

ProbabilityList probability_list(const StateVector& psi);

// p_inf(i) = sum over eigenvalue clusters C of |<i| P_C |psi>|^2.
ProbabilityList limiting_distribution(const SpectralDecomposition& spectrum, const StateVector& psi);
// Throws ResourceError above the dense threshold (use the time-average estimator).
ProbabilityList limiting_distribution(const OccupationGraph& graph, const StateVector& psi, const EvolveOptions& options = {});

// Row a holds p_inf(a -> i) for the localized start a.
std::vector<ProbabilityList> limiting_matrix(const SpectralDecomposition& spectrum);

struct TimeAverage {
    ProbabilityList probabilities;
    ProbabilityList half_horizon;  // same estimator over [0, T/2]
    // Largest entrywise change between the averages over [0, T] and [0, T/2].
    double error = 0.0;
};

// Trapezoidal average of |<i|exp(-iHt)|psi>|^2 over `samples` uniform points in [0, T].
TimeAverage time_averaged_distribution(const Evolver& evolver, const StateVector& psi, double T, int samples);

struct TimeAverageMatrix {
    std::vector<ProbabilityList> rows;
    std::vector<ProbabilityList> half_horizon;
    double error = 0.0;
};

// Same estimator for every localized start at once; spectral method only. The
// quadrature sum over the sample grid is evaluated in closed form per pair of
// distinct eigenvalues rather than by forming the propagator at every sample.
TimeAverageMatrix time_averaged_matrix(const Evolver& evolver, double T, int samples);

}  // namespace qwgi
