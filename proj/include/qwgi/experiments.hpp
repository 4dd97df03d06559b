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
#include <string>
#include <string_view>
#include <vector>

#include "qwgi/errors.hpp"
#include "qwgi/evolve.hpp"
#include "qwgi/graph.hpp"
#include "qwgi/occupation.hpp"
#include "qwgi/stats.hpp"

namespace qwgi {

enum class InputMode { Superposition, Localized };
// Superposition input used for non-interacting bosons: k copies of the
// single-particle uniform state, the uniform state over distinct k-subsets,
// or the uniform state over k-multisets.
enum class BosonInput { Product, Distinct, Multiset };
enum class PInfMode { None, Projector, TimeAverage };

const char* to_string(InputMode mode);
const char* to_string(BosonInput input);
const char* to_string(PInfMode mode);

struct ExperimentSpec {
    int walk_k = 1;
    InputMode input = InputMode::Superposition;
    ParticleStatistics stats = ParticleStatistics::Hardcore;
    BosonInput boson_input = BosonInput::Product;
    std::vector<double> thetas;
    PInfMode p_inf = PInfMode::None;
    double horizon = 400.0;  // time-average T
    int samples = 8001;      // time-average grid points on [0, T]
    EvolveOptions evolve;
    OccupationOptions occupation;
    std::uint64_t max_localized_entries = 10'000'000;
    unsigned threads = 1;
    bool keep_lists = false;  // superposition only: retain both sorted lists per theta
};

struct ThetaDelta {
    double theta = 0.0;
    double delta = 0.0;
};

struct PInfResult {
    double delta = 0.0;
    // Time-average mode: |Delta over [0, T] - Delta over [0, T/2]|.
    std::optional<double> error;
};

struct DeltaResult {
    std::vector<ThetaDelta> per_theta;
    std::optional<PInfResult> p_inf;
    int nodes_a = 0;
    int nodes_b = 0;
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::string method;
    double runtime_s = 0.0;
    std::vector<std::pair<ProbabilityList, ProbabilityList>> sorted_lists;

    // Largest per-theta value (0 when no theta was requested).
    double max_delta() const;
};

// Thrown by delta() when the two lists differ in length.
class LengthMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Sum of |sort(l1) - sort(l2)| with both lists sorted ascending.
double delta(ProbabilityList l1, ProbabilityList l2);

// `points` values evenly spaced on [0.1, 2 pi], endpoints included.
std::vector<double> default_theta_grid(int points = 32);

// Each graph evolves the uniform superposition over the chosen statistics'
// basis; Delta compares the output lists per theta (and p_inf if requested).
DeltaResult run_superposition(const Graph& a, const Graph& b, const ExperimentSpec& spec);

// Each graph yields the D x D matrix of |<j| U |i>|^2 over all localized starts
// i (distinct k-subsets for every statistics), flattened into one list.
DeltaResult run_localized(const Graph& a, const Graph& b, const ExperimentSpec& spec);

DeltaResult run_experiment(const Graph& a, const Graph& b, const ExperimentSpec& spec);

struct MhopComparison {
    // First m at which sorted A^m 1 differ between the two occupation graphs.
    std::optional<int> superposition_m;
    // First m at which sorted diag(A^m) differ.
    std::optional<int> circuit_m;
    int m_max = 0;
};

MhopComparison run_mhop_comparison(const Graph& a, const Graph& b, int walk_k, int m_max, const OccupationOptions& options = {});

struct GraphPair {
    Graph a;
    Graph b;
    std::string description;
};

// "morris:K", "cai:K", "srg:NAME,NAME" (rooks4 | shrikhande | petersen),
// "cycles" (hexagon vs two triangles) or "file:A,file:B".
GraphPair resolve_pair(std::string_view source);
Graph srg_family(std::string_view name);

}  // namespace qwgi
