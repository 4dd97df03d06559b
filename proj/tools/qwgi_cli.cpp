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

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwgi/cfi.hpp"
#include "qwgi/errors.hpp"
#include "qwgi/evolve.hpp"
#include "qwgi/experiments.hpp"
#include "qwgi/graph_io.hpp"
#include "qwgi/occupation.hpp"
#include "qwgi/srg.hpp"
#include "qwgi/wl.hpp"
#include "reproduce.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qwgi;

constexpr const char* kSchemaVersion = "1.0";

struct Common {
    std::string out;
    bool verbose = false;
    unsigned threads = 1;
    std::size_t dense_threshold = EvolveOptions{}.dense_threshold;
    std::uint64_t max_basis = OccupationOptions{}.max_basis;
    std::uint64_t max_localized_entries = ExperimentSpec{}.max_localized_entries;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file '" + path + "'");
    f << text;
}

void emit_json(json j, const std::string& path) { emit(j.dump(2) + "\n", path); }

json header(const std::string& command) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

json resources(const Common& c) {
    json j;
    j["threads"] = c.threads;
    j["dense_threshold"] = c.dense_threshold;
    j["max_basis"] = c.max_basis;
    j["max_localized_entries"] = c.max_localized_entries;
    return j;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json profile_json(const OccupationDegreeProfile& p) {
    return json{{"degree", p.degree}, {"edge_type_neighbors", p.edge_type_neighbors}, {"non_edge_type_neighbors", p.non_edge_type_neighbors}};
}

void add_resource_flags(CLI::App* app, Common& c) {
    app->add_option("--dense-threshold", c.dense_threshold, "Largest dimension handled by dense eigendecomposition")->capture_default_str();
    app->add_option("--max-basis", c.max_basis, "Refuse occupation bases larger than this")->capture_default_str();
    app->add_option("--max-localized-entries", c.max_localized_entries, "Refuse localized probability matrices with more entries")->capture_default_str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename E>
E parse_enum(const std::string& value, std::initializer_list<std::pair<const char*, E>> table, const char* what) {
    for (const auto& [name, e] : table)
        if (value == name) return e;
    throw InvalidArgument(std::string("unknown ") + what + " '" + value + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-walk distinguishers for CFI and strongly regular graph pairs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a TOML/INI file (flags override file values)");
    Common common;
    app.add_flag("-v,--verbose", common.verbose, "Progress messages on stderr");
    app.add_option("--threads", common.threads, "Worker threads (environment QWGI_THREADS)")->envname("QWGI_THREADS")->check(CLI::Range(1u, 1024u));

    // gen
    auto* gen = app.add_subcommand("gen", "Generate or convert graphs");
    gen->require_subcommand(1);
    std::string construction = "morris";
    int cfi_k = 2;
    std::vector<std::string> cfi_out;
    std::string labels_out;
    auto* gen_cfi = gen->add_subcommand("cfi", "Write a CFI pair");
    gen_cfi->add_option("--construction", construction, "morris | cai")->check(CLI::IsMember({"morris", "cai"}))->capture_default_str();
    gen_cfi->add_option("--k", cfi_k, "Base graph is the complete graph on k+1 vertices")->required();
    gen_cfi->add_option("--out", cfi_out, "Output files for P and Q (.g6 or edge list)")->required()->expected(2);
    gen_cfi->add_option("--labels", labels_out, "Sidecar JSON with node labels for both graphs");

    std::string family;
    std::string srg_out = "-";
    auto* gen_srg = gen->add_subcommand("srg", "Write a strongly regular graph");
    gen_srg->add_option("--family", family, "rooks4 | shrikhande | petersen")->required()->check(CLI::IsMember({"rooks4", "shrikhande", "petersen"}));
    gen_srg->add_option("--out", srg_out, "Output file (.g6 or edge list); '-' writes graph6 to stdout")->capture_default_str();

    std::string convert_in, convert_out;
    auto* gen_convert = gen->add_subcommand("convert", "Convert between graph6 and edge-list files");
    gen_convert->add_option("input", convert_in)->required()->check(CLI::ExistingFile);
    gen_convert->add_option("output", convert_out)->required();

    // occ dump
    auto* occ = app.add_subcommand("occ", "Occupation graphs");
    occ->require_subcommand(1);
    int occ_k = 2;
    std::string occ_file, spectrum_out;
    auto* occ_dump = occ->add_subcommand("dump", "Write the k-particle occupation graph as an edge list");
    occ_dump->add_option("--k", occ_k, "Particle number")->required();
    occ_dump->add_option("file", occ_file, "Input graph")->required()->check(CLI::ExistingFile);
    occ_dump->add_option("--out", common.out, "Output edge list (default stdout)");
    occ_dump->add_option("--spectrum", spectrum_out, "Also write the eigenvalues as a JSON array");
    add_resource_flags(occ_dump, common);

    // wl
    int wl_k = 1;
    std::string wl_a, wl_b;
    auto* wl = app.add_subcommand("wl", "Compare WL color histograms of two graphs");
    wl->add_option("--k", wl_k, "1 = color refinement, k >= 2 = oblivious k-WL")->required();
    wl->add_option("a", wl_a)->required()->check(CLI::ExistingFile);
    wl->add_option("b", wl_b)->required()->check(CLI::ExistingFile);
    wl->add_option("--out", common.out, "Output JSON (default stdout)");

    // srg verify
    auto* srg = app.add_subcommand("srg", "Strongly regular graph checks");
    srg->require_subcommand(1);
    std::string srg_file;
    auto* srg_verify = srg->add_subcommand("verify", "Report SRG parameters, algebra residual and G^(2) degree profile");
    srg_verify->add_option("file", srg_file)->required()->check(CLI::ExistingFile);
    srg_verify->add_option("--out", common.out, "Output JSON (default stdout)");

    // delta
    std::string pair_source, input = "superposition", stats = "hardcore", boson_input = "product", p_inf = "none";
    int walk_k = 1;
    std::optional<int> theta_grid;
    std::vector<double> thetas;
    double horizon = ExperimentSpec{}.horizon;
    int samples = ExperimentSpec{}.samples;
    std::optional<int> delta_mhop;
    bool keep_lists = false;
    auto* delta = app.add_subcommand("delta", "Run a distinguishing experiment on a graph pair");
    delta->add_option("--pair", pair_source, "morris:K | cai:K | srg:A,B | cycles | file:A,file:B")->required();
    delta->add_option("--walk-k", walk_k, "Number of walkers")->capture_default_str();
    delta->add_option("--input", input, "superposition | localized")->check(CLI::IsMember({"superposition", "localized"}))->capture_default_str();
    delta->add_option("--stats", stats, "hardcore | boson | fermion")->check(CLI::IsMember({"hardcore", "boson", "fermion"}))->capture_default_str();
    delta->add_option("--boson-input", boson_input, "product | distinct | multiset")->check(CLI::IsMember({"product", "distinct", "multiset"}))->capture_default_str();
    auto* grid_opt = delta->add_option("--theta-grid", theta_grid, "Uniform grid of N points on [0.1, 2 pi]");
    delta->add_option("--theta", thetas, "Explicit theta values (comma separated or repeated)")->delimiter(',')->excludes(grid_opt);
    delta->add_option("--p-inf", p_inf, "none | projector | time-average")->check(CLI::IsMember({"none", "projector", "time-average"}))->capture_default_str();
    delta->add_option("--T", horizon, "Time-average horizon")->capture_default_str();
    delta->add_option("--samples", samples, "Time-average sample count on [0, T]")->capture_default_str();
    delta->add_option("--mhop", delta_mhop, "Also compare exact m-hop counts up to this m");
    delta->add_flag("--keep-lists", keep_lists, "Include both sorted probability lists per theta (superposition)");
    delta->add_option("--out", common.out, "Output JSON (default stdout)");
    add_resource_flags(delta, common);

    // mhop
    int mhop_walk_k = 1, m_max = 6;
    std::string mhop_pair;
    auto* mhop = app.add_subcommand("mhop", "First m at which exact m-hop counts differ");
    mhop->add_option("--pair", mhop_pair, "Pair source as for delta")->required();
    mhop->add_option("--walk-k", mhop_walk_k)->capture_default_str();
    mhop->add_option("--m-max", m_max)->capture_default_str();
    mhop->add_option("--out", common.out, "Output JSON (default stdout)");
    add_resource_flags(mhop, common);

    // reproduce-table
    tools::TableOptions table_opts;
    std::string table_json;
    auto* reproduce = app.add_subcommand("reproduce-table", "Reproduce one of the four gap tables as CSV");
    reproduce->add_option("table", table_opts.table, "1 | 2 | 3 | 4")->required()->check(CLI::Range(1, 4));
    reproduce->add_option("--theta-grid", table_opts.theta_points, "Grid points on [0.1, 2 pi]")->capture_default_str();
    reproduce->add_option("--T", table_opts.horizon, "Time-average horizon (tables 3 and 4)")->capture_default_str();
    reproduce->add_option("--samples", table_opts.samples, "Time-average samples (tables 3 and 4)")->capture_default_str();
    reproduce->add_option("--max-k", table_opts.max_k, "Largest CFI k to run")->capture_default_str();
    reproduce->add_flag("--long", table_opts.long_runs, "Run the dense p_inf row above the dense threshold");
    reproduce->add_option("--out", common.out, "Output CSV (default stdout)");
    reproduce->add_option("--json", table_json, "Also write the JSON report here");
    add_resource_flags(reproduce, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const auto t0 = std::chrono::steady_clock::now();
    EvolveOptions evolve_opts;
    evolve_opts.dense_threshold = common.dense_threshold;
    OccupationOptions occ_opts;
    occ_opts.max_basis = common.max_basis;

    try {
        if (gen_cfi->parsed()) {
            const auto pair = construction == "morris" ? build_morris_pair(cfi_k) : build_cai_pair(cfi_k);
            write_graph_file(cfi_out[0], pair.p);
            write_graph_file(cfi_out[1], pair.q);
            if (!labels_out.empty()) {
                json j = header("gen cfi");
                j["construction"] = construction;
                j["k"] = cfi_k;
                for (const auto& [key, g] : {std::pair{"p", &pair.p}, {"q", &pair.q}}) {
                    json labels = json::object();
                    for (int v = 0; v < g->node_count(); ++v) labels[std::to_string(v)] = to_string(g->labels()[static_cast<std::size_t>(v)]);
                    j[key] = labels;
                }
                emit_json(j, labels_out);
            }
        } else if (gen_srg->parsed()) {
            const auto g = srg_family(family);
            if (srg_out == "-")
                std::cout << write_graph6(g) << "\n";
            else
                write_graph_file(srg_out, g);
        } else if (gen_convert->parsed()) {
            write_graph_file(convert_out, read_graph_file(convert_in));
        } else if (occ_dump->parsed()) {
            const auto g = read_graph_file(occ_file);
            const auto og = build_occupation_graph(g, occ_k, occ_opts);
            emit(write_edge_list(og.as_graph()), common.out);
            if (!spectrum_out.empty()) {
                if (og.dimension() > common.dense_threshold) throw ResourceError("spectrum dump needs a dimension within the dense threshold");
                const auto s = decompose(og);
                json j = header("occ dump");
                j["k"] = occ_k;
                j["dimension"] = og.dimension();
                j["eigenvalues"] = std::vector<double>(s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
                emit_json(j, spectrum_out);
            }
        } else if (wl->parsed()) {
            const auto cmp = compare_wl(read_graph_file(wl_a), read_graph_file(wl_b), wl_k);
            json j = header("wl");
            j["k"] = wl_k;
            j["convention"] = wl_k == 1 ? "color refinement" : "oblivious";
            j["rounds_a"] = cmp.a.rounds;
            j["rounds_b"] = cmp.b.rounds;
            j["classes_a"] = cmp.a.histogram.size();
            j["classes_b"] = cmp.b.histogram.size();
            j["histograms_equal"] = cmp.histograms_equal;
            emit_json(j, common.out);
        } else if (srg_verify->parsed()) {
            const auto g = read_graph_file(srg_file);
            const auto check = srg_params(g);
            json j = header("srg verify");
            j["nodes"] = g.node_count();
            j["edges"] = g.edge_count();
            j["status"] = check.status == SrgCheck::Status::StronglyRegular ? "strongly-regular"
                          : check.status == SrgCheck::Status::Disconnected ? "disconnected"
                                                                            : "not-strongly-regular";
            if (check.params) {
                const auto& p = *check.params;
                j["params"] = json{{"n", p.n}, {"d", p.d}, {"mu", p.mu}, {"nu", p.nu}};
                j["feasible"] = srg_feasible(p);
                j["algebra_residual"] = verify_closed_algebra(g, p);
                json profile;
                for (auto [key, type] : {std::pair{"edge", PairType::Edge}, {"non_edge", PairType::NonEdge}}) {
                    json entry = profile_json(occupation_degree_profile(g, type));
                    entry["expected"] = profile_json(expected_degree_profile(p, type));
                    profile[key] = entry;
                }
                j["occupation_profile"] = profile;
            } else {
                j["params"] = nullptr;
                if (check.counterexample) {
                    const auto& [x, y] = *check.counterexample;
                    j["counterexample"] = json::array({json::array({x.first, x.second}), json::array({y.first, y.second})});
                }
            }
            emit_json(j, common.out);
        } else if (delta->parsed()) {
            ExperimentSpec spec;
            spec.walk_k = walk_k;
            spec.input = parse_enum<InputMode>(input, {{"superposition", InputMode::Superposition}, {"localized", InputMode::Localized}}, "input");
            spec.stats = parse_enum<ParticleStatistics>(stats, {{"hardcore", ParticleStatistics::Hardcore}, {"boson", ParticleStatistics::Boson}, {"fermion", ParticleStatistics::Fermion}}, "statistics");
            spec.boson_input = parse_enum<BosonInput>(boson_input, {{"product", BosonInput::Product}, {"distinct", BosonInput::Distinct}, {"multiset", BosonInput::Multiset}}, "boson input");
            spec.p_inf = parse_enum<PInfMode>(p_inf, {{"none", PInfMode::None}, {"projector", PInfMode::Projector}, {"time-average", PInfMode::TimeAverage}}, "p_inf mode");
            if (theta_grid) spec.thetas = default_theta_grid(*theta_grid);
            else spec.thetas = thetas;
            if (spec.thetas.empty() && spec.p_inf == PInfMode::None) throw InvalidArgument("give --theta-grid N, --theta values, or a --p-inf mode");
            spec.horizon = horizon;
            spec.samples = samples;
            spec.evolve = evolve_opts;
            spec.occupation = occ_opts;
            spec.max_localized_entries = common.max_localized_entries;
            spec.threads = common.threads;
            spec.keep_lists = keep_lists;

            const auto pair = resolve_pair(pair_source);
            if (common.verbose) std::fprintf(stderr, "delta: %s, %d walker(s), %s, %s\n", pair_source.c_str(), walk_k, input.c_str(), stats.c_str());
            const auto result = run_experiment(pair.a, pair.b, spec);

            json j = header("delta");
            json s;
            s["pair"] = pair_source;
            s["walk_k"] = walk_k;
            s["input"] = input;
            s["stats"] = stats;
            s["boson_input"] = boson_input;
            s["theta_grid"] = optional_json(theta_grid);
            s["thetas"] = spec.thetas;
            s["p_inf"] = p_inf;
            s["T"] = horizon;
            s["samples"] = samples;
            s["mhop_m_max"] = optional_json(delta_mhop);
            s["resources"] = resources(common);
            j["spec"] = s;
            j["dims"] = json{{"nodes_a", result.nodes_a}, {"nodes_b", result.nodes_b}, {"dim_a", result.dim_a}, {"dim_b", result.dim_b}};
            j["method"] = result.method;
            json per = json::array();
            for (const auto& t : result.per_theta) per.push_back(json{{"theta", t.theta}, {"delta", t.delta}});
            j["per_theta"] = per;
            j["max_delta"] = result.max_delta();
            j["p_inf"] = result.p_inf ? json{{"delta", result.p_inf->delta}, {"error", optional_json(result.p_inf->error)}} : json(nullptr);
            if (delta_mhop) {
                const auto m = run_mhop_comparison(pair.a, pair.b, walk_k, *delta_mhop, occ_opts);
                j["mhop"] = json{{"m_max", m.m_max}, {"superposition_m", optional_json(m.superposition_m)}, {"circuit_m", optional_json(m.circuit_m)}};
            } else {
                j["mhop"] = nullptr;
            }
            if (keep_lists) {
                json lists = json::array();
                for (const auto& [a, b] : result.sorted_lists) lists.push_back(json{{"a", a}, {"b", b}});
                j["sorted_lists"] = lists;
            }
            j["runtime_s"] = seconds_since(t0);
            emit_json(j, common.out);
        } else if (mhop->parsed()) {
            const auto pair = resolve_pair(mhop_pair);
            const auto m = run_mhop_comparison(pair.a, pair.b, mhop_walk_k, m_max, occ_opts);
            json j = header("mhop");
            j["spec"] = json{{"pair", mhop_pair}, {"walk_k", mhop_walk_k}, {"m_max", m_max}, {"resources", resources(common)}};
            j["superposition_m"] = optional_json(m.superposition_m);
            j["circuit_m"] = optional_json(m.circuit_m);
            j["runtime_s"] = seconds_since(t0);
            emit_json(j, common.out);
        } else if (reproduce->parsed()) {
            table_opts.threads = common.threads;
            table_opts.evolve = evolve_opts;
            table_opts.occupation = occ_opts;
            table_opts.verbose = common.verbose;
            const auto table = tools::reproduce_table(table_opts);
            emit(tools::to_csv(table), common.out);
            if (!table_json.empty()) {
                json j = header("reproduce-table");
                j["config"] = json{{"table", table_opts.table}, {"theta_grid", table_opts.theta_points}, {"T", table_opts.horizon}, {"samples", table_opts.samples},
                                   {"max_k", table_opts.max_k}, {"long", table_opts.long_runs}, {"resources", resources(common)}};
                j["result"] = tools::to_json(table);
                j["runtime_s"] = seconds_since(t0);
                emit_json(j, table_json);
            }
        }
    } catch (const ConvergenceError& e) {
        std::fprintf(stderr, "error: %s (residual %g)\n", e.what(), e.residual());
        return 3;
    } catch (const ResourceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
