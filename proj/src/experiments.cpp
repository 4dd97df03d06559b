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

#include "qwgi/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "qwgi/cfi.hpp"
#include "qwgi/combinatorics.hpp"
#include "qwgi/errors.hpp"
#include "qwgi/graph_io.hpp"
#include "qwgi/hop_count.hpp"
#include "qwgi/parallel.hpp"
#include "qwgi/srg.hpp"

namespace qwgi {

namespace {

using Clock = std::chrono::steady_clock;

void validate(const ExperimentSpec& spec) {
    if (spec.walk_k < 1) throw InvalidArgument("walk particle number must be at least 1");
    if (spec.thetas.empty() && spec.p_inf == PInfMode::None) throw InvalidArgument("theta grid is empty and no p_inf mode was requested");
    for (double t : spec.thetas)
        if (!std::isfinite(t)) throw InvalidArgument("theta values must be finite");
    if (spec.p_inf != PInfMode::None && spec.stats != ParticleStatistics::Hardcore)
        throw InvalidArgument("p_inf is only available for hardcore walks");
}

ProbabilityList flatten(const std::vector<ProbabilityList>& rows) {
    ProbabilityList flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return flat;
}

ProbabilityList flatten(const Eigen::MatrixXcd& propagator) {
    const auto dim = propagator.rows();
    ProbabilityList flat(static_cast<std::size_t>(dim * dim));
    for (Eigen::Index a = 0; a < dim; ++a)
        for (Eigen::Index i = 0; i < dim; ++i) flat[static_cast<std::size_t>(a * dim + i)] = std::norm(propagator(i, a));
    return flat;
}

// A hardcore or fermionic walk expressed as evolution on an occupation graph.
Evolver sector_evolver(const Graph& g, const ExperimentSpec& spec) {
    auto occ = spec.stats == ParticleStatistics::Fermion ? build_fermion_occupation_graph(g, spec.walk_k, spec.occupation)
                                                         : build_occupation_graph(g, spec.walk_k, spec.occupation);
    return Evolver(std::move(occ), spec.evolve);
}

ProbabilityList boson_superposition(const Graph& g, double theta, const ExperimentSpec& spec) {
    const auto u = single_particle_unitary(g, theta);
    const int n = g.node_count();
    switch (spec.boson_input) {
        case BosonInput::Product:
            return boson_product_distribution(u, spec.walk_k);
        case BosonInput::Distinct:
            return output_distribution(u, uniform_distinct_input(n, spec.walk_k), ParticleStatistics::Boson);
        case BosonInput::Multiset:
            return output_distribution(u, uniform_multiset_input(n, spec.walk_k), ParticleStatistics::Boson);
    }
    return {};
}

ProbabilityList boson_localized(const Graph& g, double theta, const ExperimentSpec& spec) {
    const auto u = single_particle_unitary(g, theta);
    ProbabilityList flat;
    for (const auto& start : output_basis(g.node_count(), spec.walk_k, ParticleStatistics::Fermion)) {
        const auto p = output_distribution(u, {{start, 1.0}}, ParticleStatistics::Boson);
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return flat;
}

std::size_t boson_dimension(int n, int k) { return static_cast<std::size_t>(binomial(n + k - 1, k)); }

void fill_dims(DeltaResult& r, const Graph& a, const Graph& b, const ExperimentSpec& spec) {
    r.nodes_a = a.node_count();
    r.nodes_b = b.node_count();
    if (spec.stats == ParticleStatistics::Boson) {
        r.dim_a = boson_dimension(a.node_count(), spec.walk_k);
        r.dim_b = boson_dimension(b.node_count(), spec.walk_k);
    } else {
        r.dim_a = static_cast<std::size_t>(binomial(a.node_count(), spec.walk_k));
        r.dim_b = static_cast<std::size_t>(binomial(b.node_count(), spec.walk_k));
    }
}

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

}  // namespace

const char* to_string(InputMode mode) { return mode == InputMode::Superposition ? "superposition" : "localized"; }

const char* to_string(BosonInput input) {
    switch (input) {
        case BosonInput::Product:
            return "product";
        case BosonInput::Distinct:
            return "distinct";
        case BosonInput::Multiset:
            return "multiset";
    }
    return "";
}

const char* to_string(PInfMode mode) {
    switch (mode) {
        case PInfMode::None:
            return "none";
        case PInfMode::Projector:
            return "projector";
        case PInfMode::TimeAverage:
            return "time-average";
    }
    return "";
}

double DeltaResult::max_delta() const {
    double best = 0.0;
    for (const auto& t : per_theta) best = std::max(best, t.delta);
    return best;
}

double delta(ProbabilityList l1, ProbabilityList l2) {
    if (l1.size() != l2.size())
        throw LengthMismatch("probability lists differ in length (" + std::to_string(l1.size()) + " vs " + std::to_string(l2.size()) +
                             "); the inputs are structurally different");
    std::sort(l1.begin(), l1.end());
    std::sort(l2.begin(), l2.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < l1.size(); ++i) sum += std::abs(l1[i] - l2[i]);
    return sum;
}

std::vector<double> default_theta_grid(int points) {
    if (points < 1) throw InvalidArgument("theta grid needs at least one point");
    if (points == 1) return {0.1};
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double lo = 0.1;
    const double hi = 2.0 * std::numbers::pi;
    for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    return grid;
}

DeltaResult run_superposition(const Graph& a, const Graph& b, const ExperimentSpec& spec) {
    validate(spec);
    const auto start = Clock::now();
    DeltaResult result;
    fill_dims(result, a, b, spec);
    result.per_theta.resize(spec.thetas.size());
    if (spec.keep_lists) result.sorted_lists.resize(spec.thetas.size());

    auto record = [&](std::size_t i, ProbabilityList pa, ProbabilityList pb) {
        result.per_theta[i] = {spec.thetas[i], delta(pa, pb)};
        if (spec.keep_lists) {
            std::sort(pa.begin(), pa.end());
            std::sort(pb.begin(), pb.end());
            result.sorted_lists[i] = {std::move(pa), std::move(pb)};
        }
    };

    if (spec.stats == ParticleStatistics::Boson) {
        result.method = std::string("permanent/") + to_string(spec.boson_input);
        parallel_for(spec.thetas.size(), spec.threads, [&](std::size_t i) {
            record(i, boson_superposition(a, spec.thetas[i], spec), boson_superposition(b, spec.thetas[i], spec));
        });
        result.runtime_s = seconds_since(start);
        return result;
    }

    const Evolver ea = sector_evolver(a, spec);
    const Evolver eb = sector_evolver(b, spec);
    result.method = to_string(ea.method());
    const auto psi_a = uniform_superposition(ea.graph().basis());
    const auto psi_b = uniform_superposition(eb.graph().basis());
    parallel_for(spec.thetas.size(), spec.threads, [&](std::size_t i) {
        record(i, probability_list(ea.apply(psi_a, spec.thetas[i])), probability_list(eb.apply(psi_b, spec.thetas[i])));
    });

    if (spec.p_inf == PInfMode::Projector) {
        if (ea.method() != EvolveMethod::Spectral || eb.method() != EvolveMethod::Spectral)
            throw ResourceError("p_inf projector mode needs dimensions within the dense threshold; use the time-average estimator");
        result.p_inf = PInfResult{delta(limiting_distribution(ea.spectrum(), psi_a), limiting_distribution(eb.spectrum(), psi_b)), std::nullopt};
    } else if (spec.p_inf == PInfMode::TimeAverage) {
        const auto ta = time_averaged_distribution(ea, psi_a, spec.horizon, spec.samples);
        const auto tb = time_averaged_distribution(eb, psi_b, spec.horizon, spec.samples);
        const double full = delta(ta.probabilities, tb.probabilities);
        const double half = delta(ta.half_horizon, tb.half_horizon);
        result.p_inf = PInfResult{full, std::abs(full - half)};
    }
    result.runtime_s = seconds_since(start);
    return result;
}

DeltaResult run_localized(const Graph& a, const Graph& b, const ExperimentSpec& spec) {
    validate(spec);
    const auto start = Clock::now();
    DeltaResult result;
    fill_dims(result, a, b, spec);
    const std::uint64_t starts = std::max(binomial(a.node_count(), spec.walk_k), binomial(b.node_count(), spec.walk_k));
    const std::uint64_t entries = starts * std::max<std::uint64_t>(result.dim_a, result.dim_b);
    if (entries > spec.max_localized_entries)
        throw ResourceError("localized probability matrix has " + std::to_string(entries) + " entries, above the limit " +
                            std::to_string(spec.max_localized_entries));
    result.per_theta.resize(spec.thetas.size());

    if (spec.stats == ParticleStatistics::Boson) {
        result.method = "permanent";
        parallel_for(spec.thetas.size(), spec.threads, [&](std::size_t i) {
            const double theta = spec.thetas[i];
            result.per_theta[i] = {theta, delta(boson_localized(a, theta, spec), boson_localized(b, theta, spec))};
        });
        result.runtime_s = seconds_since(start);
        return result;
    }

    const Evolver ea = sector_evolver(a, spec);
    const Evolver eb = sector_evolver(b, spec);
    if (ea.method() != EvolveMethod::Spectral || eb.method() != EvolveMethod::Spectral)
        throw ResourceError("localized mode needs the full propagator; dimension exceeds the dense threshold");
    result.method = "spectral";
    parallel_for(spec.thetas.size(), spec.threads, [&](std::size_t i) {
        const double theta = spec.thetas[i];
        result.per_theta[i] = {theta, delta(flatten(ea.propagator(theta)), flatten(eb.propagator(theta)))};
    });

    if (spec.p_inf == PInfMode::Projector) {
        result.p_inf = PInfResult{delta(flatten(limiting_matrix(ea.spectrum())), flatten(limiting_matrix(eb.spectrum()))), std::nullopt};
    } else if (spec.p_inf == PInfMode::TimeAverage) {
        const auto ta = time_averaged_matrix(ea, spec.horizon, spec.samples);
        const auto tb = time_averaged_matrix(eb, spec.horizon, spec.samples);
        const double full = delta(flatten(ta.rows), flatten(tb.rows));
        const double half = delta(flatten(ta.half_horizon), flatten(tb.half_horizon));
        result.p_inf = PInfResult{full, std::abs(full - half)};
    }
    result.runtime_s = seconds_since(start);
    return result;
}

DeltaResult run_experiment(const Graph& a, const Graph& b, const ExperimentSpec& spec) {
    return spec.input == InputMode::Superposition ? run_superposition(a, b, spec) : run_localized(a, b, spec);
}

MhopComparison run_mhop_comparison(const Graph& a, const Graph& b, int walk_k, int m_max, const OccupationOptions& options) {
    if (m_max < 1) throw InvalidArgument("m_max must be at least 1");
    const auto oa = build_occupation_graph(a, walk_k, options);
    const auto ob = build_occupation_graph(b, walk_k, options);
    auto first_difference = [](const std::vector<HopCountVector>& x, const std::vector<HopCountVector>& y) -> std::optional<int> {
        for (std::size_t m = 0; m < x.size(); ++m)
            if (sorted_counts(x[m]) != sorted_counts(y[m])) return static_cast<int>(m);
        return std::nullopt;
    };
    MhopComparison out;
    out.m_max = m_max;
    out.superposition_m = first_difference(mhop_series(oa, m_max, all_ones(oa.dimension())), mhop_series(ob, m_max, all_ones(ob.dimension())));
    out.circuit_m = first_difference(circuit_series(oa, m_max), circuit_series(ob, m_max));
    return out;
}

Graph srg_family(std::string_view name) {
    if (name == "rooks4") return rooks_4x4();
    if (name == "shrikhande") return shrikhande();
    if (name == "petersen") return petersen();
    throw InvalidArgument("unknown SRG family '" + std::string(name) + "' (expected rooks4, shrikhande or petersen)");
}

GraphPair resolve_pair(std::string_view source) {
    auto parse_k = [&](std::string_view digits) {
        int k = 0;
        if (digits.empty()) throw InvalidArgument("missing k in pair source '" + std::string(source) + "'");
        for (char c : digits) {
            if (c < '0' || c > '9') throw InvalidArgument("invalid k in pair source '" + std::string(source) + "'");
            k = k * 10 + (c - '0');
        }
        return k;
    };
    auto split = [&](std::string_view rest) {
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) throw InvalidArgument("pair source '" + std::string(source) + "' needs two comma-separated entries");
        return std::pair{rest.substr(0, comma), rest.substr(comma + 1)};
    };
    if (source.starts_with("morris:")) {
        auto pair = build_morris_pair(parse_k(source.substr(7)));
        return {std::move(pair.p), std::move(pair.q), std::string(source)};
    }
    if (source.starts_with("cai:")) {
        auto pair = build_cai_pair(parse_k(source.substr(4)));
        return {std::move(pair.p), std::move(pair.q), std::string(source)};
    }
    if (source.starts_with("srg:")) {
        const auto [x, y] = split(source.substr(4));
        return {srg_family(x), srg_family(y), std::string(source)};
    }
    if (source == "cycles") {
        return {cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3)), "cycles"};
    }
    if (source.starts_with("file:")) {
        const auto [x, y] = split(source.substr(5));
        if (!y.starts_with("file:")) throw InvalidArgument("second entry of '" + std::string(source) + "' must start with file:");
        return {read_graph_file(std::string(x)), read_graph_file(std::string(y.substr(5))), std::string(source)};
    }
    throw InvalidArgument("unknown pair source '" + std::string(source) + "'");
}

}  // namespace qwgi
