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

#include "reproduce.hpp"

#include <cstdio>
#include <sstream>

#include "qwgi/cfi.hpp"
#include "qwgi/combinatorics.hpp"
#include "qwgi/errors.hpp"

namespace qwgi::tools {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string grid_label(const std::vector<double>& thetas) {
    return "linspace(" + num(thetas.front()) + ";" + num(thetas.back()) + ";" + std::to_string(thetas.size()) + ")";
}

}  // namespace

Table reproduce_table(const TableOptions& options) {
    if (options.table < 1 || options.table > 4) throw InvalidArgument("table must be 1, 2, 3 or 4");
    if (options.max_k < 1) throw InvalidArgument("--max-k must be at least 1");
    const bool morris = options.table == 1 || options.table == 3;
    const bool localized = options.table >= 3;

    Table table;
    table.number = options.table;
    table.construction = morris ? "morris" : "cai";
    table.walk = localized ? "k-1" : "k";
    table.input = localized ? "localized" : "superposition";
    table.thetas = default_theta_grid(options.theta_points);

    const int first_k = localized ? 2 : 1;
    for (int k = first_k; k <= std::min(3, options.max_k); ++k) {
        const auto pair = morris ? build_morris_pair(k) : build_cai_pair(k);
        const int walk_k = localized ? k - 1 : k;
        if (options.verbose) std::fprintf(stderr, "table %d: k=%d (walk %d, %s)\n", options.table, k, walk_k, table.input.c_str());

        ExperimentSpec spec;
        spec.walk_k = walk_k;
        spec.input = localized ? InputMode::Localized : InputMode::Superposition;
        spec.thetas = table.thetas;
        spec.threads = options.threads;
        spec.evolve = options.evolve;
        spec.occupation = options.occupation;
        spec.horizon = options.horizon;
        spec.samples = options.samples;

        TableRow row;
        row.k = k;
        row.nodes = pair.p.node_count();
        row.dimension = static_cast<std::size_t>(binomial(pair.p.node_count(), walk_k));

        const bool dense_ok = row.dimension <= options.evolve.dense_threshold;
        if (localized) {
            spec.p_inf = PInfMode::TimeAverage;
            row.p_inf_method = "time-average";
        } else if (dense_ok) {
            spec.p_inf = PInfMode::Projector;
            row.p_inf_method = "projector";
        } else if (options.long_runs) {
            spec.evolve.dense_threshold = row.dimension;
            spec.p_inf = PInfMode::Projector;
            row.p_inf_method = "projector";
        } else {
            row.p_inf_method = "skipped";
        }

        const auto hard = run_experiment(pair.p, pair.q, spec);
        row.delta = hard.max_delta();
        row.evolve_method = hard.method;
        if (hard.p_inf) {
            row.p_inf = hard.p_inf->delta;
            row.p_inf_error = hard.p_inf->error;
        }
        if (localized) {
            auto projector = spec;
            projector.thetas.clear();
            projector.p_inf = PInfMode::Projector;
            row.p_inf_projector = run_localized(pair.p, pair.q, projector).p_inf->delta;
        }

        auto others = spec;
        others.p_inf = PInfMode::None;
        others.evolve = options.evolve;
        others.stats = ParticleStatistics::Boson;
        row.boson = run_experiment(pair.p, pair.q, others).max_delta();
        others.stats = ParticleStatistics::Fermion;
        row.fermion = run_experiment(pair.p, pair.q, others).max_delta();
        table.rows.push_back(row);
    }
    return table;
}

constexpr const char* kCsvSchemaVersion = "1.0";

std::string to_csv(const Table& table) {
    std::ostringstream out;
    out << "# qwgi table " << table.number << " schema_version " << kCsvSchemaVersion << '\n';
    out << "k,size of graph G,size of graph G^(k),Delta,Delta(p_inf),Delta N.I. Bosons,Delta N.I. Fermion,"
           "Delta(p_inf) error,Delta(p_inf) method,Delta(p_inf) projector,walk,input,theta grid,evolve method\n";
    for (const auto& r : table.rows) {
        out << r.k << ',' << r.nodes << ',' << r.dimension << ',' << num(r.delta) << ',' << (r.p_inf ? num(*r.p_inf) : "skipped") << ',' << num(r.boson) << ','
            << num(r.fermion) << ',' << (r.p_inf_error ? num(*r.p_inf_error) : "") << ',' << r.p_inf_method << ','
            << (r.p_inf_projector ? num(*r.p_inf_projector) : "") << ',' << table.walk << ',' << table.input << ',' << grid_label(table.thetas) << ','
            << r.evolve_method << '\n';
    }
    return out.str();
}

nlohmann::ordered_json to_json(const Table& table) {
    nlohmann::ordered_json j;
    j["table"] = table.number;
    j["construction"] = table.construction;
    j["walk"] = table.walk;
    j["input"] = table.input;
    j["theta_grid"] = table.thetas;
    j["delta_reduction"] = "max over theta grid";
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
        nlohmann::ordered_json row;
        row["k"] = r.k;
        row["nodes"] = r.nodes;
        row["dimension"] = r.dimension;
        row["delta"] = r.delta;
        nlohmann::ordered_json p;
        p["method"] = r.p_inf_method;
        p["delta"] = r.p_inf ? nlohmann::ordered_json(*r.p_inf) : nlohmann::ordered_json(nullptr);
        p["error"] = r.p_inf_error ? nlohmann::ordered_json(*r.p_inf_error) : nlohmann::ordered_json(nullptr);
        if (r.p_inf_projector) p["projector_delta"] = *r.p_inf_projector;
        row["p_inf"] = p;
        row["boson"] = r.boson;
        row["fermion"] = r.fermion;
        row["evolve_method"] = r.evolve_method;
        rows.push_back(row);
    }
    return j;
}

}  // namespace qwgi::tools
