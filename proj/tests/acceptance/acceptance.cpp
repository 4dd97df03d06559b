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

// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
// Usage: qwgi_acceptance [--long] [--threads N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qwgi/cfi.hpp"
#include "qwgi/combinatorics.hpp"
#include "qwgi/evolve.hpp"
#include "qwgi/experiments.hpp"
#include "qwgi/isomorphism.hpp"
#include "qwgi/occupation.hpp"
#include "qwgi/srg.hpp"
#include "qwgi/stats.hpp"
#include "qwgi/wl.hpp"

using namespace qwgi;

namespace {

constexpr double kPInfTolerance = 5e-3;
constexpr double kDegradedSeparation = 1e-3;
constexpr double kPermutedZero = 1e-10;
constexpr double kDistinguished = 1e-6;
constexpr double kBosonSuperpositionZero = 1e-12;
constexpr double kLocalizedZero = 1e-10;
constexpr double kSrgZero = 1e-9;
constexpr double kTimeAverageTarget = 1.95;
constexpr double kTimeAverageWindow = 0.10;
constexpr double kUnitarity = 1e-9;
constexpr double kKrylovOverlap = 1.0 - 1e-9;
constexpr double kNormalization = 1e-9;
// Absolute floor for comparing a time average to p_inf when both agree to roundoff.
constexpr double kRoundoffFloor = 1e-12;
constexpr double kTimeAverageHorizon = 2000.0;
constexpr int kTimeAverageSamples = 40001;
constexpr double kHygieneHorizon = 1000.0;
constexpr int kHygieneSamples = 10001;
constexpr int kGridPoints = 32;
constexpr int kMaxHygieneDimension = 1000;

struct Options {
    bool long_runs = false;
    unsigned threads = 1;
};

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    bool degraded = false;

    void check(bool ok, const std::string& what) {
        if (!ok) pass = false;
        notes.push_back(std::string(ok ? "ok   " : "MISS ") + what);
    }
    void note(const std::string& what) { notes.push_back("     " + what); }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::vector<int> random_permutation(int n, std::uint32_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

ExperimentSpec spec_for(int walk_k, InputMode input, ParticleStatistics stats, const Options& opt) {
    ExperimentSpec spec;
    spec.walk_k = walk_k;
    spec.input = input;
    spec.stats = stats;
    spec.thetas = default_theta_grid(kGridPoints);
    spec.threads = opt.threads;
    return spec;
}

ExperimentSpec pinf_spec(int walk_k, InputMode input, PInfMode mode) {
    ExperimentSpec spec;
    spec.walk_k = walk_k;
    spec.input = input;
    spec.p_inf = mode;
    spec.horizon = kTimeAverageHorizon;
    spec.samples = kTimeAverageSamples;
    return spec;
}

std::string tag(const char* construction, int k) { return std::string(construction) + " k=" + std::to_string(k); }

Outcome structure(const Options&) {
    Outcome o;
    auto occ_size = [](const Graph& g, int k) { return build_occupation_graph(g, k).dimension(); };
    const int morris_nodes[] = {4, 12, 28};
    const std::size_t morris_occ[] = {4, 66, 3276};
    const int cai_nodes[] = {6, 18, 40};
    const std::size_t cai_occ[] = {6, 153, 9880};
    for (int k = 1; k <= 3; ++k) {
        const auto m = build_morris_pair(k);
        const auto c = build_cai_pair(k);
        const auto i = static_cast<std::size_t>(k - 1);
        o.check(m.p.node_count() == morris_nodes[i] && m.q.node_count() == morris_nodes[i], tag("morris", k) + " |V| = " + std::to_string(m.p.node_count()));
        o.check(occ_size(m.p, k) == morris_occ[i] && occ_size(m.q, k) == morris_occ[i], tag("morris", k) + " |G^(k)| = " + std::to_string(occ_size(m.p, k)));
        o.check(c.p.node_count() == cai_nodes[i] && c.q.node_count() == cai_nodes[i], tag("cai", k) + " |V| = " + std::to_string(c.p.node_count()));
        o.check(occ_size(c.p, k) == cai_occ[i] && occ_size(c.q, k) == cai_occ[i], tag("cai", k) + " |G^(k)| = " + std::to_string(occ_size(c.p, k)));
    }
    const auto m2 = build_morris_pair(2);
    const auto m3 = build_morris_pair(3);
    const auto c2 = build_cai_pair(2);
    const auto c3 = build_cai_pair(3);
    o.check(occ_size(m2.p, 1) == 12 && occ_size(m3.p, 2) == 378, "morris (k-1)-walk sizes 12/378");
    o.check(occ_size(c2.p, 1) == 18 && occ_size(c3.p, 2) == 780, "cai (k-1)-walk sizes 18/780");
    return o;
}

Outcome two_cliques(const Options&) {
    Outcome o;
    for (int k = 2; k <= 3; ++k) {
        const auto m = build_morris_pair(k);
        const auto p = find_2_cliques(m.p, k + 1, k);
        const auto q = find_2_cliques(m.q, k + 1, k);
        o.check(!p.empty(), tag("morris", k) + " P has " + std::to_string(p.size()) + " size-" + std::to_string(k + 1) + " 2-cliques on degree-" + std::to_string(k) + " nodes");
        o.check(q.empty(), tag("morris", k) + " Q has " + std::to_string(q.size()));
        // Diagnostic: cliques taking one top node from each base vertex.
        auto spanning = [](const Graph& g, const std::vector<std::vector<int>>& cliques) {
            std::size_t count = 0;
            for (const auto& c : cliques) {
                std::set<int> vertices;
                for (int v : c) vertices.insert(std::get<TopLabel>(g.labels()[static_cast<std::size_t>(v)]).vertex);
                count += vertices.size() == c.size() ? 1 : 0;
            }
            return count;
        };
        o.note(tag("morris", k) + " cliques with one node per base vertex: P " + std::to_string(spanning(m.p, p)) + ", Q " + std::to_string(spanning(m.q, q)));
    }
    return o;
}

Outcome non_isomorphism(const Options&) {
    Outcome o;
    for (int k = 1; k <= 3; ++k) {
        for (auto construction : {CfiConstruction::Morris, CfiConstruction::Cai}) {
            const auto pair = construction == CfiConstruction::Morris ? build_morris_pair(k) : build_cai_pair(k);
            o.check(!are_isomorphic(pair.p, pair.q).isomorphic, tag(to_string(construction), k) + " P and Q non-isomorphic");
            const auto perm = random_permutation(pair.p.node_count(), static_cast<std::uint32_t>(k));
            const auto moved = permute(pair.p, perm);
            const auto r = are_isomorphic(pair.p, moved);
            o.check(r.isomorphic && r.witness && is_isomorphism(pair.p, moved, *r.witness), tag(to_string(construction), k) + " P ~ permute(P) with verified witness");
        }
    }
    return o;
}

Outcome wl_failure(const Options&) {
    Outcome o;
    for (int k = 2; k <= 3; ++k) {
        const auto m = build_morris_pair(k);
        const auto c = build_cai_pair(k);
        o.check(compare_wl(m.p, m.q, 1).histograms_equal, tag("morris", k) + " 1-WL histograms equal");
        o.check(compare_wl(c.p, c.q, 1).histograms_equal, tag("cai", k) + " 1-WL histograms equal");
    }
    const auto m2 = build_morris_pair(2);
    const bool two_equal = compare_wl(m2.p, m2.q, 2).histograms_equal;
    if (two_equal)
        o.check(true, "morris k=2 oblivious 2-WL histograms equal");
    else
        o.note("morris k=2 oblivious 2-WL distinguishes the pair (1-WL is the gate)");
    o.check(!compare_wl(m2.p, m2.q, 3).histograms_equal, "morris k=2 oblivious 3-WL histograms unequal");
    return o;
}

Outcome pinf_reproduction(const Options&) {
    Outcome o;
    struct Row {
        CfiConstruction construction;
        int k;
        double reference;
    };
    const std::vector<Row> rows{{CfiConstruction::Morris, 1, 0.3667}, {CfiConstruction::Morris, 2, 0.0619}, {CfiConstruction::Cai, 1, 0.1667}, {CfiConstruction::Cai, 2, 0.2611}};
    bool all_within = true;
    std::vector<std::pair<std::string, double>> pair_values;
    std::vector<std::pair<std::string, double>> permuted_values;
    for (const auto& row : rows) {
        const auto pair = row.construction == CfiConstruction::Morris ? build_morris_pair(row.k) : build_cai_pair(row.k);
        const auto spec = pinf_spec(row.k, InputMode::Superposition, PInfMode::Projector);
        const double measured = run_superposition(pair.p, pair.q, spec).p_inf->delta;
        const bool within = std::abs(measured - row.reference) <= kPInfTolerance;
        all_within = all_within && within;
        const auto name = tag(to_string(row.construction), row.k);
        o.note(name + " Delta(p_inf) measured " + fmt(measured) + " vs reference " + fmt(row.reference) + (within ? " (within 5e-3)" : " (outside 5e-3)"));
        pair_values.emplace_back(name, measured);
        for (const auto* g : {&pair.p, &pair.q}) {
            const auto moved = permute(*g, random_permutation(g->node_count(), 17));
            permuted_values.emplace_back(name, run_superposition(*g, moved, spec).p_inf->delta);
        }
    }
    if (all_within) {
        o.check(true, "all four Delta(p_inf) values within 5e-3");
        return o;
    }
    o.degraded = true;
    o.note("degraded gate: Delta(p_inf) > 1e-3 per pair, <= 1e-10 for permuted copies");
    for (const auto& [name, v] : pair_values) o.check(v > kDegradedSeparation, name + " Delta(p_inf) = " + fmt(v) + " > 1e-3");
    double worst = 0.0;
    for (const auto& [name, v] : permuted_values) worst = std::max(worst, v);
    o.check(worst <= kPermutedZero, "permuted copies max Delta(p_inf) = " + fmt(worst));
    return o;
}

Outcome superposition_separation(const Options& opt) {
    Outcome o;
    for (int k = 1; k <= 2; ++k) {
        for (auto construction : {CfiConstruction::Morris, CfiConstruction::Cai}) {
            const auto pair = construction == CfiConstruction::Morris ? build_morris_pair(k) : build_cai_pair(k);
            const double d = run_superposition(pair.p, pair.q, spec_for(k, InputMode::Superposition, ParticleStatistics::Hardcore, opt)).max_delta();
            o.check(d > kDistinguished, tag(to_string(construction), k) + " hardcore " + std::to_string(k) + "-QW superposition grid-max Delta = " + fmt(d));
        }
    }
    if (opt.long_runs) {
        const auto m3 = build_morris_pair(3);
        const double d = run_superposition(m3.p, m3.q, spec_for(3, InputMode::Superposition, ParticleStatistics::Hardcore, opt)).max_delta();
        o.check(d > kDistinguished, "morris k=3 hardcore 3-QW superposition grid-max Delta = " + fmt(d));
    } else {
        o.note("morris k=3 hardcore 3-QW superposition skipped (pass --long)");
    }
    for (int k = 2; k <= 3; ++k) {
        const auto m = build_morris_pair(k);
        const double d = run_superposition(m.p, m.q, spec_for(k, InputMode::Superposition, ParticleStatistics::Boson, opt)).max_delta();
        o.check(d <= kBosonSuperpositionZero, tag("morris", k) + " boson superposition grid-max Delta = " + fmt(d));
    }
    return o;
}

Outcome localized_separation(const Options& opt) {
    Outcome o;
    for (auto construction : {CfiConstruction::Morris, CfiConstruction::Cai}) {
        const auto pair = construction == CfiConstruction::Morris ? build_morris_pair(2) : build_cai_pair(2);
        const double d = run_localized(pair.p, pair.q, spec_for(1, InputMode::Localized, ParticleStatistics::Hardcore, opt)).max_delta();
        o.check(d > kDistinguished, tag(to_string(construction), 2) + " 1-QW localized grid-max Delta = " + fmt(d));
    }
    const auto m3 = build_morris_pair(3);
    const double hard = run_localized(m3.p, m3.q, spec_for(2, InputMode::Localized, ParticleStatistics::Hardcore, opt)).max_delta();
    o.check(hard > kDistinguished, "morris k=3 hardcore 2-QW localized grid-max Delta = " + fmt(hard));
    for (auto stats : {ParticleStatistics::Boson, ParticleStatistics::Fermion}) {
        const double d = run_localized(m3.p, m3.q, spec_for(2, InputMode::Localized, stats, opt)).max_delta();
        o.check(d <= kLocalizedZero, std::string("morris k=3 ") + to_string(stats) + " 2-QW localized grid-max Delta = " + fmt(d));
    }

    const auto m2 = build_morris_pair(2);
    const auto ta = run_localized(m2.p, m2.q, pinf_spec(1, InputMode::Localized, PInfMode::TimeAverage)).p_inf;
    const double projector = run_localized(m2.p, m2.q, pinf_spec(1, InputMode::Localized, PInfMode::Projector)).p_inf->delta;
    o.note("morris k=2 1-QW localized Delta(p_inf): time average (T=" + fmt(kTimeAverageHorizon) + ") " + fmt(ta->delta) + " +/- " + fmt(*ta->error) +
           ", projector " + fmt(projector));
    if (std::abs(ta->delta - kTimeAverageTarget) <= kTimeAverageWindow) {
        o.check(true, "time-average Delta(p_inf) within 1.95 +/- 0.10");
    } else {
        o.degraded = true;
        o.check(ta->delta > kDegradedSeparation, "degraded gate: time-average Delta(p_inf) > 1e-3");
        const auto moved = permute(m2.p, random_permutation(m2.p.node_count(), 23));
        const double same = run_localized(m2.p, moved, pinf_spec(1, InputMode::Localized, PInfMode::TimeAverage)).p_inf->delta;
        o.check(same <= kPermutedZero, "degraded gate: permuted copy Delta(p_inf) = " + fmt(same));
    }
    return o;
}

Outcome hop_counts(const Options&) {
    Outcome o;
    const auto m2 = build_morris_pair(2);
    const auto one = run_mhop_comparison(m2.p, m2.q, 1, 6);
    o.check(one.circuit_m.has_value(), "morris k=2 1-particle sorted diag(A^m) first differs at m = " + (one.circuit_m ? std::to_string(*one.circuit_m) : std::string("none up to 6")));
    const auto two = run_mhop_comparison(m2.p, m2.q, 2, 4);
    o.check(two.superposition_m.has_value(), "morris k=2 2-particle sorted A^m 1 first differs at m = " + (two.superposition_m ? std::to_string(*two.superposition_m) : std::string("none up to 4")));
    return o;
}

Outcome srg_suite(const Options& opt) {
    Outcome o;
    const auto rook = rooks_4x4();
    const auto shr = shrikhande();
    const SrgParams expected{16, 6, 2, 2};
    for (const auto& [name, g] : {std::pair<std::string, const Graph*>{"rooks4", &rook}, {"shrikhande", &shr}}) {
        const auto check = srg_params(*g);
        o.check(check.status == SrgCheck::Status::StronglyRegular && check.params == expected, name + " is SRG(16,6,2,2)");
        o.check(verify_closed_algebra(*g, expected) == 0, name + " closed-algebra residual 0");
        for (auto type : {PairType::Edge, PairType::NonEdge})
            o.check(occupation_degree_profile(*g, type) == expected_degree_profile(expected, type),
                    name + (type == PairType::Edge ? " edge-type" : " non-edge-type") + " G^(2) degree profile");
    }
    auto run = [&](int k, InputMode input) {
        auto spec = spec_for(k, input, ParticleStatistics::Hardcore, opt);
        spec.p_inf = PInfMode::Projector;
        return run_experiment(rook, shr, spec);
    };
    const auto sup1 = run(1, InputMode::Superposition);
    const auto loc1 = run(1, InputMode::Localized);
    const auto sup2 = run(2, InputMode::Superposition);
    o.check(sup1.max_delta() <= kSrgZero && sup1.p_inf->delta <= kSrgZero, "1-QW superposition grid-max " + fmt(sup1.max_delta()) + ", p_inf " + fmt(sup1.p_inf->delta));
    o.check(loc1.max_delta() <= kSrgZero && loc1.p_inf->delta <= kSrgZero, "1-QW localized grid-max " + fmt(loc1.max_delta()) + ", p_inf " + fmt(loc1.p_inf->delta));
    o.check(sup2.max_delta() <= kSrgZero && sup2.p_inf->delta <= kSrgZero, "2-QW superposition grid-max " + fmt(sup2.max_delta()) + ", p_inf " + fmt(sup2.p_inf->delta));
    const auto loc2 = run_localized(rook, shr, spec_for(2, InputMode::Localized, ParticleStatistics::Hardcore, opt));
    o.check(loc2.max_delta() > kDistinguished, "2-QW localized grid-max " + fmt(loc2.max_delta()));
    return o;
}

Outcome hygiene(const Options&) {
    Outcome o;
    std::vector<std::pair<std::string, Graph>> graphs;
    for (int k = 1; k <= 3; ++k) {
        const auto m = build_morris_pair(k);
        const auto c = build_cai_pair(k);
        graphs.emplace_back(tag("morris", k) + " P", m.p);
        graphs.emplace_back(tag("morris", k) + " Q", m.q);
        graphs.emplace_back(tag("cai", k) + " P", c.p);
        graphs.emplace_back(tag("cai", k) + " Q", c.q);
    }
    graphs.emplace_back("rooks4", rooks_4x4());
    graphs.emplace_back("shrikhande", shrikhande());
    graphs.emplace_back("petersen", petersen());
    graphs.emplace_back("hexagon", cycle_graph(6));
    graphs.emplace_back("two triangles", disjoint_union(complete_graph(3), complete_graph(3)));

    std::mt19937 rng(2024);
    std::normal_distribution<double> normal;
    auto random_state = [&](std::size_t dim) {
        StateVector psi{Eigen::VectorXcd(static_cast<Eigen::Index>(dim))};
        for (auto& a : psi.amplitudes) a = {normal(rng), normal(rng)};
        psi.amplitudes.normalize();
        return psi;
    };

    EvolveOptions krylov_opts;
    krylov_opts.dense_threshold = 0;
    double worst_norm = 0.0, worst_prob = 0.0, worst_overlap = 1.0, worst_pinf_sum = 0.0;
    std::size_t fixtures = 0, ta_total = 0, ta_within = 0;
    double worst_ratio = 0.0, worst_ta_dev = 0.0;
    std::string worst_ratio_name;
    for (const auto& [name, g] : graphs) {
        for (int k = 1; k <= 3; ++k) {
            if (k > g.node_count() || binomial(g.node_count(), k) > static_cast<std::uint64_t>(kMaxHygieneDimension)) continue;
            const auto occ = build_occupation_graph(g, k);
            ++fixtures;
            const Evolver spectral(occ, {}, EvolveMethod::Spectral);
            const Evolver krylov(occ, krylov_opts);
            for (double theta : {0.7, 3.1}) {
                const auto psi = random_state(occ.dimension());
                const auto a = spectral.apply(psi, theta);
                const auto b = krylov.apply(psi, theta);
                worst_norm = std::max(worst_norm, std::abs(a.norm() - 1.0));
                const auto p = probability_list(a);
                worst_prob = std::max(worst_prob, std::abs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0));
                worst_overlap = std::min(worst_overlap, std::abs(a.amplitudes.dot(b.amplitudes)));
            }
            const auto psi = uniform_superposition(occ.basis());
            const auto pinf = limiting_distribution(spectral.spectrum(), psi);
            worst_pinf_sum = std::max(worst_pinf_sum, std::abs(std::accumulate(pinf.begin(), pinf.end(), 0.0) - 1.0));
            if (k > 2) continue;
            const auto ta = time_averaged_distribution(spectral, psi, kHygieneHorizon, kHygieneSamples);
            double dev = 0.0;
            for (std::size_t i = 0; i < pinf.size(); ++i) dev = std::max(dev, std::abs(pinf[i] - ta.probabilities[i]));
            ++ta_total;
            worst_ta_dev = std::max(worst_ta_dev, dev);
            if (dev <= ta.error + kRoundoffFloor) {
                ++ta_within;
            } else if (dev / std::max(ta.error, kRoundoffFloor) > worst_ratio) {
                worst_ratio = dev / std::max(ta.error, kRoundoffFloor);
                worst_ratio_name = name + " k=" + std::to_string(k);
            }
        }
    }
    o.note(std::to_string(fixtures) + " occupation fixtures with D <= 1000");
    o.check(worst_norm <= kUnitarity, "unitarity: max |norm - 1| = " + fmt(worst_norm));
    o.check(worst_prob <= kNormalization && worst_pinf_sum <= kNormalization, "normalization: max |sum p - 1| = " + fmt(std::max(worst_prob, worst_pinf_sum)));
    o.check(worst_overlap >= kKrylovOverlap, "spectral vs Krylov: min overlap = " + fmt(worst_overlap));
    o.note("time average at T=" + fmt(kHygieneHorizon) + ": max |p_inf - average| = " + fmt(worst_ta_dev));
    o.check(ta_within == ta_total, "p_inf within the T vs T/2 error estimate on " + std::to_string(ta_within) + "/" + std::to_string(ta_total) + " k <= 2 fixtures" +
                                       (worst_ratio_name.empty() ? std::string() : "; worst " + worst_ratio_name + " deviation/estimate = " + fmt(worst_ratio)));
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome(const Options&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) {
            opt.long_runs = true;
        } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
            opt.threads = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));
        } else {
            std::fprintf(stderr, "usage: %s [--long] [--threads N]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "structure reproduction", 1.0, structure},
        {2, "2-clique separation", 10.0, two_cliques},
        {3, "non-isomorphism oracle", 60.0, non_isomorphism},
        {4, "WL failure", 60.0, wl_failure},
        {5, "p_inf reproduction", 300.0, pinf_reproduction},
        {6, "superposition separation", 600.0, superposition_separation},
        {7, "localized separation", 600.0, localized_separation},
        {8, "hop-count bounds", 60.0, hop_counts},
        {9, "SRG suite", 300.0, srg_suite},
        {10, "numerical hygiene", 120.0, hygiene},
    };

    int failures = 0;
    std::vector<std::string> summary;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run(opt);
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.notes.push_back(std::string("MISS exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = elapsed <= c.budget_s;
        const bool pass = outcome.pass && in_budget;
        failures += pass ? 0 : 1;
        for (const auto& n : outcome.notes) std::printf("    [%d] %s\n", c.id, n.c_str());
        char line[256];
        std::snprintf(line, sizeof line, "criterion %2d %-4s %-30s %8.2fs (budget %.0fs)%s%s", c.id, pass ? "PASS" : "FAIL", c.name, elapsed, c.budget_s,
                      outcome.degraded ? " [degraded gate]" : "", in_budget ? "" : " [over budget]");
        std::printf("%s\n", line);
        std::fflush(stdout);
        summary.emplace_back(line);
    }
    std::printf("\nsummary\n");
    for (const auto& s : summary) std::printf("%s\n", s.c_str());
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
