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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwgi/experiments.hpp"

namespace qwgi::tools {

struct TableOptions {
    int table = 1;
    int theta_points = 32;
    double horizon = 2000.0;
    int samples = 40001;
    int max_k = 3;
    bool long_runs = false;  // dense p_inf for the 9880-dimensional row
    unsigned threads = 1;
    EvolveOptions evolve;
    OccupationOptions occupation;
    bool verbose = false;
};

struct TableRow {
    int k = 0;
    int nodes = 0;
    std::size_t dimension = 0;
    double delta = 0.0;
    std::optional<double> p_inf;
    std::optional<double> p_inf_error;
    std::optional<double> p_inf_projector;
    std::string p_inf_method;
    double boson = 0.0;
    double fermion = 0.0;
    std::string evolve_method;
};

struct Table {
    int number = 0;
    std::string construction;
    std::string walk;   // "k" or "k-1"
    std::string input;  // superposition or localized
    std::vector<double> thetas;
    std::vector<TableRow> rows;
};

Table reproduce_table(const TableOptions& options);
std::string to_csv(const Table& table);
nlohmann::ordered_json to_json(const Table& table);

}  // namespace qwgi::tools
