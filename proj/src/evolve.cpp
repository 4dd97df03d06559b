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

#include "qwgi/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "qwgi/errors.hpp"

namespace qwgi {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

std::vector<std::pair<Eigen::Index, Eigen::Index>> cluster(const Eigen::VectorXd& values) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
    if (values.size() == 0) return clusters;
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    const double tol = kClusterRelativeTolerance * scale;
    Eigen::Index begin = 0;
    for (Eigen::Index i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i] - values[i - 1] >= tol) {
            clusters.emplace_back(begin, i);
            begin = i;
        }
    }
    return clusters;
}

struct TrapezoidPair {
    ProbabilityList full;
    ProbabilityList half;
};

// Trapezoidal averages over [0, T] and [0, T/2]. With an odd sample count the
// half grid is the first half of the full grid and both share one sweep.
template <typename Fn>
TrapezoidPair trapezoid_averages(double T, int samples, Fn&& probabilities_at) {
    const int half_samples = std::max(2, (samples + 1) / 2);
    const bool shared = samples % 2 == 1;
    auto sweep = [&](double horizon, int points, ProbabilityList* nested, int nested_points) {
        const double dt = horizon / static_cast<double>(points - 1);
        ProbabilityList sum;
        for (int s = 0; s < points; ++s) {
            const auto p = probabilities_at(dt * s);
            if (sum.empty()) {
                sum.assign(p.size(), 0.0);
                if (nested) nested->assign(p.size(), 0.0);
            }
            const double weight = (s == 0 || s == points - 1) ? 0.5 : 1.0;
            for (std::size_t i = 0; i < p.size(); ++i) sum[i] += weight * p[i];
            if (nested && s < nested_points) {
                const double w = (s == 0 || s == nested_points - 1) ? 0.5 : 1.0;
                for (std::size_t i = 0; i < p.size(); ++i) (*nested)[i] += w * p[i];
            }
        }
        for (auto& v : sum) v *= dt / horizon;
        if (nested)
            for (auto& v : *nested) v *= dt / (horizon / 2.0);
        return sum;
    };
    TrapezoidPair out;
    if (shared) {
        out.full = sweep(T, samples, &out.half, half_samples);
    } else {
        out.full = sweep(T, samples, nullptr, 0);
        out.half = sweep(T / 2.0, half_samples, nullptr, 0);
    }
    return out;
}

// Trapezoidal mean of cos(omega t) over `points` uniform samples of [0, horizon].
double trapezoid_cosine_mean(double omega, double horizon, int points) {
    const double dt = horizon / static_cast<double>(points - 1);
    const double x = omega * dt;
    const double s = std::sin(x / 2.0);
    double total = 0.0;
    if (std::abs(s) < 1e-6) {
        for (int k = 0; k < points; ++k) total += std::cos(x * k);
    } else {
        total = std::sin(points * x / 2.0) / s * std::cos((points - 1) * x / 2.0);
    }
    total -= 0.5 * (1.0 + std::cos(omega * horizon));
    return total * dt / horizon;
}

void check_time_average_args(double T, int samples) {
    if (!(T > 0.0) || !std::isfinite(T)) throw InvalidArgument("time-average horizon T must be positive and finite");
    if (samples < 2) throw InvalidArgument("time-average needs at least 2 samples");
}

}  // namespace

StateVector uniform_superposition(const OccupationBasis& basis) {
    const auto dim = static_cast<Eigen::Index>(basis.dimension());
    if (dim < 1) throw InvalidArgument("empty basis");
    return {Eigen::VectorXcd::Constant(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0))};
}

StateVector localized_state(const OccupationBasis& basis, std::span<const int> subset) {
    StateVector psi{Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dimension()))};
    psi.amplitudes[static_cast<Eigen::Index>(basis.rank(subset))] = 1.0;
    return psi;
}

SpectralDecomposition decompose(const Eigen::MatrixXd& symmetric) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric);
    if (solver.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver did not converge", 0.0);
    SpectralDecomposition out{solver.eigenvalues(), solver.eigenvectors(), {}};
    out.clusters = cluster(out.eigenvalues);
    return out;
}

Eigen::MatrixXd dense_adjacency(const OccupationGraph& graph) {
    const auto dim = static_cast<Eigen::Index>(graph.dimension());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto cols = graph.neighbors(static_cast<std::size_t>(i));
        const auto signs = graph.signs(static_cast<std::size_t>(i));
        for (std::size_t e = 0; e < cols.size(); ++e) a(i, static_cast<Eigen::Index>(cols[e])) = signs.empty() ? 1.0 : signs[e];
    }
    return a;
}

SpectralDecomposition decompose(const OccupationGraph& graph) { return decompose(dense_adjacency(graph)); }

const char* to_string(EvolveMethod method) { return method == EvolveMethod::Spectral ? "spectral" : "krylov"; }

Evolver::Evolver(OccupationGraph graph, EvolveOptions options)
    : Evolver(graph, options, graph.dimension() <= options.dense_threshold ? EvolveMethod::Spectral : EvolveMethod::Krylov) {}

Evolver::Evolver(OccupationGraph graph, EvolveOptions options, EvolveMethod method)
    : graph_(std::move(graph)), options_(options), method_(method) {
    if (method_ == EvolveMethod::Spectral) spectrum_ = decompose(graph_);
}

const SpectralDecomposition& Evolver::spectrum() const {
    if (method_ != EvolveMethod::Spectral)
        throw ResourceError("dimension " + std::to_string(dimension()) + " is above the dense threshold; no spectral decomposition");
    return spectrum_;
}

StateVector Evolver::apply(const StateVector& psi, double theta) const {
    if (psi.dimension() != dimension())
        throw InvalidArgument("state dimension " + std::to_string(psi.dimension()) + " does not match operator dimension " + std::to_string(dimension()));
    if (!std::isfinite(theta)) throw InvalidArgument("evolution time must be finite");
    if (theta == 0.0) return psi;
    return method_ == EvolveMethod::Spectral ? apply_spectral(psi, theta) : apply_krylov(psi, theta);
}

StateVector Evolver::apply_spectral(const StateVector& psi, double theta) const {
    const auto& v = spectrum_.eigenvectors;
    const Eigen::VectorXd re = v.transpose() * psi.amplitudes.real();
    const Eigen::VectorXd im = v.transpose() * psi.amplitudes.imag();
    Eigen::VectorXd c_re(re.size());
    Eigen::VectorXd c_im(re.size());
    for (Eigen::Index a = 0; a < re.size(); ++a) {
        const cplx c = cplx(re[a], im[a]) * std::exp(-kI * spectrum_.eigenvalues[a] * theta);
        c_re[a] = c.real();
        c_im[a] = c.imag();
    }
    StateVector out{Eigen::VectorXcd(re.size())};
    out.amplitudes.real() = v * c_re;
    out.amplitudes.imag() = v * c_im;
    return out;
}

Eigen::MatrixXcd Evolver::propagator(double theta) const {
    const auto& spec = spectrum();
    const auto& v = spec.eigenvectors;
    const Eigen::ArrayXd angle = spec.eigenvalues.array() * theta;
    Eigen::MatrixXcd u(v.rows(), v.rows());
    u.real() = v * angle.cos().matrix().asDiagonal() * v.transpose();
    u.imag() = -(v * angle.sin().matrix().asDiagonal() * v.transpose());
    return u;
}

Eigen::VectorXcd multiply(const OccupationGraph& graph, const Eigen::VectorXcd& x) {
    Eigen::VectorXcd y(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const auto cols = graph.neighbors(static_cast<std::size_t>(i));
        const auto signs = graph.signs(static_cast<std::size_t>(i));
        cplx sum = 0.0;
        if (signs.empty()) {
            for (auto j : cols) sum += x[static_cast<Eigen::Index>(j)];
        } else {
            for (std::size_t e = 0; e < cols.size(); ++e) sum += static_cast<double>(signs[e]) * x[static_cast<Eigen::Index>(cols[e])];
        }
        y[i] = sum;
    }
    return y;
}

StateVector Evolver::apply_krylov(const StateVector& psi, double theta) const {
    const double total = std::abs(theta);
    const double direction = theta < 0 ? -1.0 : 1.0;
    const auto dim = static_cast<Eigen::Index>(dimension());
    const int max_m = std::max(2, std::min<int>(options_.krylov_dimension, static_cast<int>(dim)));
    const double norm_bound = std::max<double>(1.0, static_cast<double>(graph_.max_degree()));

    Eigen::VectorXcd w = psi.amplitudes;
    double done = 0.0;
    double step = std::min(total, 20.0 / norm_bound);
    long iterations = 0;
    double last_estimate = 0.0;

    while (done < total) {
        step = std::min(step, total - done);
        const double beta0 = w.norm();
        if (beta0 == 0.0) break;

        // Lanczos basis for span{w, Aw, ...}; the basis does not depend on the step.
        Eigen::MatrixXcd basis(dim, max_m + 1);
        Eigen::VectorXd alpha = Eigen::VectorXd::Zero(max_m);
        Eigen::VectorXd beta = Eigen::VectorXd::Zero(max_m);
        basis.col(0) = w / beta0;
        int m = 0;
        bool invariant = false;
        for (int j = 0; j < max_m; ++j) {
            Eigen::VectorXcd r = multiply(graph_, basis.col(j));
            alpha[j] = basis.col(j).dot(r).real();
            for (int pass = 0; pass < 2; ++pass)
                for (int q = 0; q <= j; ++q) r -= basis.col(q) * basis.col(q).dot(r);
            beta[j] = r.norm();
            m = j + 1;
            ++iterations;
            if (beta[j] <= 1e-12 * norm_bound) {
                invariant = true;
                break;
            }
            basis.col(j + 1) = r / beta[j];
        }

        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
        for (int j = 0; j < m; ++j) {
            tri(j, j) = alpha[j];
            if (j + 1 < m) tri(j, j + 1) = tri(j + 1, j) = beta[j];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(tri);
        const Eigen::MatrixXcd sv = small.eigenvectors().cast<cplx>();

        while (true) {
            Eigen::VectorXcd phases(m);
            for (int a = 0; a < m; ++a) phases[a] = std::exp(-kI * small.eigenvalues()[a] * (direction * step));
            const Eigen::VectorXcd small_result = sv * phases.asDiagonal() * sv.row(0).transpose();
            const double estimate = invariant ? 0.0 : beta0 * beta[m - 1] * std::abs(small_result[m - 1]);
            last_estimate = estimate;
            if (estimate <= options_.krylov_tolerance * std::max(step / total, 1e-3)) {
                w = beta0 * (basis.leftCols(m) * small_result);
                done += step;
                step *= 1.25;
                break;
            }
            step *= 0.5;
            if (step < 1e-12 * total)
                throw ConvergenceError("Krylov propagation step collapsed", estimate);
        }
        if (iterations > options_.max_krylov_iterations)
            throw ConvergenceError("Krylov propagation exceeded " + std::to_string(options_.max_krylov_iterations) + " iterations", last_estimate);
    }
    return {w};
}

StateVector evolve(const OccupationGraph& graph, const StateVector& psi, double theta, const EvolveOptions& options) {
    return Evolver(graph, options).apply(psi, theta);
}

ProbabilityList probability_list(const StateVector& psi) {
    ProbabilityList p(psi.dimension());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(psi.amplitudes[static_cast<Eigen::Index>(i)]);
    return p;
}

ProbabilityList limiting_distribution(const SpectralDecomposition& spectrum, const StateVector& psi) {
    const auto& v = spectrum.eigenvectors;
    if (static_cast<std::size_t>(v.rows()) != psi.dimension()) throw InvalidArgument("state dimension does not match spectrum");
    const Eigen::VectorXcd coeffs = v.transpose().cast<cplx>() * psi.amplitudes;
    ProbabilityList p(psi.dimension(), 0.0);
    for (const auto& [begin, end] : spectrum.clusters) {
        const Eigen::VectorXcd projected = v.middleCols(begin, end - begin).cast<cplx>() * coeffs.segment(begin, end - begin);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += std::norm(projected[static_cast<Eigen::Index>(i)]);
    }
    return p;
}

ProbabilityList limiting_distribution(const OccupationGraph& graph, const StateVector& psi, const EvolveOptions& options) {
    if (graph.dimension() > options.dense_threshold)
        throw ResourceError("dimension " + std::to_string(graph.dimension()) + " exceeds the dense threshold " +
                            std::to_string(options.dense_threshold) + "; use the time-average estimator");
    return limiting_distribution(decompose(graph), psi);
}

std::vector<ProbabilityList> limiting_matrix(const SpectralDecomposition& spectrum) {
    const auto dim = spectrum.eigenvectors.rows();
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& [begin, end] : spectrum.clusters) {
        const auto block = spectrum.eigenvectors.middleCols(begin, end - begin);
        const Eigen::MatrixXd projector = block * block.transpose();
        acc += projector.cwiseAbs2();
    }
    std::vector<ProbabilityList> rows(static_cast<std::size_t>(dim), ProbabilityList(static_cast<std::size_t>(dim)));
    for (Eigen::Index a = 0; a < dim; ++a)
        for (Eigen::Index i = 0; i < dim; ++i) rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] = acc(i, a);
    return rows;
}

TimeAverage time_averaged_distribution(const Evolver& evolver, const StateVector& psi, double T, int samples) {
    check_time_average_args(T, samples);
    auto at = [&](double t) { return probability_list(evolver.apply(psi, t)); };
    auto averages = trapezoid_averages(T, samples, at);
    TimeAverage out;
    out.probabilities = std::move(averages.full);
    out.half_horizon = std::move(averages.half);
    for (std::size_t i = 0; i < out.half_horizon.size(); ++i)
        out.error = std::max(out.error, std::abs(out.probabilities[i] - out.half_horizon[i]));
    return out;
}

TimeAverageMatrix time_averaged_matrix(const Evolver& evolver, double T, int samples) {
    check_time_average_args(T, samples);
    const auto& spec = evolver.spectrum();
    const auto& v = spec.eigenvectors;
    const Eigen::Index dim = v.rows();

    // Group numerically identical eigenvalues; U(t) = sum_g exp(-i mu_g t) P_g.
    std::vector<Eigen::Index> group_of(static_cast<std::size_t>(dim));
    std::vector<std::pair<Eigen::Index, Eigen::Index>> groups;
    std::vector<double> mu;
    const double tol = kEigenvalueMergeTolerance * std::max(1.0, dim ? spec.eigenvalues.cwiseAbs().maxCoeff() : 0.0);
    for (Eigen::Index j = 0; j < dim; ++j) {
        if (j == 0 || spec.eigenvalues[j] - spec.eigenvalues[j - 1] >= tol) groups.emplace_back(j, j);
        groups.back().second = j + 1;
        group_of[static_cast<std::size_t>(j)] = static_cast<Eigen::Index>(groups.size() - 1);
    }
    for (const auto& [b, e] : groups) mu.push_back(spec.eigenvalues.segment(b, e - b).mean());

    // M = sum_{g,h} K(mu_g - mu_h) P_g o P_h = sum_g P_g o (V diag(K(mu_g - mu_.)) V^T).
    auto average = [&](double horizon, int points) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
        Eigen::VectorXd weights(dim);
        for (std::size_t g = 0; g < groups.size(); ++g) {
            for (Eigen::Index j = 0; j < dim; ++j) weights[j] = trapezoid_cosine_mean(mu[g] - mu[static_cast<std::size_t>(group_of[static_cast<std::size_t>(j)])], horizon, points);
            const auto [b, e] = groups[g];
            const Eigen::MatrixXd vg = v.middleCols(b, e - b);
            const Eigen::MatrixXd projector = vg * vg.transpose();
            const Eigen::MatrixXd weighted = v * weights.asDiagonal() * v.transpose();
            m += projector.cwiseProduct(weighted);
        }
        return m;
    };
    const Eigen::MatrixXd full = average(T, samples);
    const Eigen::MatrixXd half = average(T / 2.0, std::max(2, (samples + 1) / 2));

    TimeAverageMatrix out;
    out.rows.assign(static_cast<std::size_t>(dim), ProbabilityList(static_cast<std::size_t>(dim)));
    out.half_horizon.assign(static_cast<std::size_t>(dim), ProbabilityList(static_cast<std::size_t>(dim)));
    // row a = start, column i = detection node; M is symmetric.
    for (Eigen::Index a = 0; a < dim; ++a)
        for (Eigen::Index i = 0; i < dim; ++i) {
            out.rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] = full(i, a);
            out.half_horizon[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] = half(i, a);
            out.error = std::max(out.error, std::abs(full(i, a) - half(i, a)));
        }
    return out;
}

}  // namespace qwgi
