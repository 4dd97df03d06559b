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

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qwgi/cfi.hpp"
#include "qwgi/errors.hpp"
#include "qwgi/experiments.hpp"
#include "qwgi/graph.hpp"
#include "qwgi/graph_io.hpp"
#include "qwgi/occupation.hpp"
#include "qwgi/srg.hpp"
#include "qwgi/wl.hpp"

namespace py = pybind11;
using namespace qwgi;

namespace {

template <typename E>
E enum_from(const std::string& value, std::initializer_list<std::pair<const char*, E>> table, const char* what) {
    for (const auto& [name, e] : table)
        if (value == name) return e;
    throw InvalidArgument(std::string("unknown ") + what + " '" + value + "'");
}

std::vector<std::string> label_strings(const Graph& g) {
    std::vector<std::string> out;
    out.reserve(g.labels().size());
    for (const auto& l : g.labels()) out.push_back(to_string(l));
    return out;
}

py::dict result_dict(const DeltaResult& r) {
    py::dict d;
    std::vector<std::pair<double, double>> per;
    for (const auto& t : r.per_theta) per.emplace_back(t.theta, t.delta);
    d["per_theta"] = per;
    d["max_delta"] = r.max_delta();
    if (r.p_inf) {
        py::dict p;
        p["delta"] = r.p_inf->delta;
        p["error"] = r.p_inf->error ? py::cast(*r.p_inf->error) : py::none();
        d["p_inf"] = p;
    } else {
        d["p_inf"] = py::none();
    }
    d["dims"] = py::make_tuple(r.dim_a, r.dim_b);
    d["nodes"] = py::make_tuple(r.nodes_a, r.nodes_b);
    d["method"] = r.method;
    d["runtime_s"] = r.runtime_s;
    if (!r.sorted_lists.empty()) d["sorted_lists"] = r.sorted_lists;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qwgi, m) {
    m.doc() = "Quantum-walk graph distinguishers";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    auto resource = py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<OracleOutOfRange>(m, "OracleOutOfRange", resource.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<StructuralError>(m, "StructuralError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return from_edge_list(n, edges); }), py::arg("n"), py::arg("edges"))
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", &Graph::edges)
        .def_property_readonly("labels", &label_strings)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("degree_sequence", [](const Graph& g) { return degree_sequence(g); })
        .def("permute", [](const Graph& g, const std::vector<int>& perm) { return permute(g, perm); }, py::arg("perm"))
        .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
        .def("to_edge_list", [](const Graph& g) { return write_edge_list(g); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "<qwgi.Graph n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
    m.def("read_graph", [](const std::string& path) { return read_graph_file(path); });
    m.def("write_graph", [](const std::string& path, const Graph& g) { write_graph_file(path, g); });
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("disjoint_union", &disjoint_union);

    m.def("cfi_pair", [](const std::string& construction, int k) {
        const auto pair = enum_from<CfiConstruction>(construction, {{"morris", CfiConstruction::Morris}, {"cai", CfiConstruction::Cai}}, "construction") ==
                                  CfiConstruction::Morris
                              ? build_morris_pair(k)
                              : build_cai_pair(k);
        return py::make_tuple(pair.p, pair.q);
    }, py::arg("construction"), py::arg("k"));
    m.def("srg_family", &srg_family, py::arg("name"));
    m.def("resolve_pair", [](const std::string& source) {
        auto pair = resolve_pair(source);
        return py::make_tuple(pair.a, pair.b, pair.description);
    });

    m.def("srg_params", [](const Graph& g) -> py::object {
        const auto check = srg_params(g);
        if (!check.params) return py::none();
        return py::make_tuple(check.params->n, check.params->d, check.params->mu, check.params->nu);
    });

    m.def("occupation_dimension", [](const Graph& g, int k, std::uint64_t max_basis) {
        OccupationOptions o;
        o.max_basis = max_basis;
        return build_occupation_graph(g, k, o).dimension();
    }, py::arg("graph"), py::arg("k"), py::arg("max_basis") = OccupationOptions{}.max_basis);
    m.def("occupation_graph", [](const Graph& g, int k, std::uint64_t max_basis) {
        OccupationOptions o;
        o.max_basis = max_basis;
        return build_occupation_graph(g, k, o).as_graph();
    }, py::arg("graph"), py::arg("k"), py::arg("max_basis") = OccupationOptions{}.max_basis);

    m.def("wl_equal", [](const Graph& a, const Graph& b, int k) { return compare_wl(a, b, k).histograms_equal; }, py::arg("a"), py::arg("b"), py::arg("k"));

    m.def("delta", [](const std::vector<double>& a, const std::vector<double>& b) { return delta(a, b); });
    m.def("theta_grid", &default_theta_grid, py::arg("points") = 32);

    m.def(
        "run_experiment",
        [](const Graph& a, const Graph& b, int walk_k, const std::string& input, const std::string& stats, const std::string& boson_input,
           std::vector<double> thetas, const std::string& p_inf, double horizon, int samples, std::size_t dense_threshold,
           std::uint64_t max_basis, unsigned threads, bool keep_lists) {
            ExperimentSpec spec;
            spec.walk_k = walk_k;
            spec.input = enum_from<InputMode>(input, {{"superposition", InputMode::Superposition}, {"localized", InputMode::Localized}}, "input");
            spec.stats = enum_from<ParticleStatistics>(stats, {{"hardcore", ParticleStatistics::Hardcore}, {"boson", ParticleStatistics::Boson}, {"fermion", ParticleStatistics::Fermion}}, "statistics");
            spec.boson_input = enum_from<BosonInput>(boson_input, {{"product", BosonInput::Product}, {"distinct", BosonInput::Distinct}, {"multiset", BosonInput::Multiset}}, "boson input");
            spec.p_inf = enum_from<PInfMode>(p_inf, {{"none", PInfMode::None}, {"projector", PInfMode::Projector}, {"time-average", PInfMode::TimeAverage}}, "p_inf mode");
            spec.thetas = std::move(thetas);
            spec.horizon = horizon;
            spec.samples = samples;
            spec.evolve.dense_threshold = dense_threshold;
            spec.occupation.max_basis = max_basis;
            spec.threads = threads;
            spec.keep_lists = keep_lists;
            DeltaResult r;
            {
                py::gil_scoped_release release;
                r = run_experiment(a, b, spec);
            }
            return result_dict(r);
        },
        py::arg("a"), py::arg("b"), py::arg("walk_k") = 1, py::arg("input") = "superposition", py::arg("stats") = "hardcore",
        py::arg("boson_input") = "product", py::arg("thetas") = std::vector<double>{}, py::arg("p_inf") = "none",
        py::arg("horizon") = ExperimentSpec{}.horizon, py::arg("samples") = ExperimentSpec{}.samples,
        py::arg("dense_threshold") = EvolveOptions{}.dense_threshold, py::arg("max_basis") = OccupationOptions{}.max_basis,
        py::arg("threads") = 1u, py::arg("keep_lists") = false);

    m.def("mhop", [](const Graph& a, const Graph& b, int walk_k, int m_max) {
        const auto r = run_mhop_comparison(a, b, walk_k, m_max, {});
        py::dict d;
        d["superposition_m"] = r.superposition_m ? py::cast(*r.superposition_m) : py::none();
        d["circuit_m"] = r.circuit_m ? py::cast(*r.circuit_m) : py::none();
        d["m_max"] = r.m_max;
        return d;
    }, py::arg("a"), py::arg("b"), py::arg("walk_k") = 1, py::arg("m_max") = 6);
}
