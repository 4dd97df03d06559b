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

#include "qwgi/cfi.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "qwgi/combinatorics.hpp"
#include "qwgi/errors.hpp"

namespace qwgi {

namespace {

void check_k(int k) {
    if (k < 1 || k > kMaxCfiK)
        throw InvalidArgument("CFI parameter k=" + std::to_string(k) + " outside supported range [1," + std::to_string(kMaxCfiK) + "]");
}

std::vector<Edge> base_edges(int k) {
    std::vector<Edge> edges;
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
    return edges;
}

std::vector<Edge> incident(const std::vector<Edge>& edges, int v) {
    std::vector<Edge> out;
    for (const auto& e : edges)
        if (e.first == v || e.second == v) out.push_back(e);
    return out;
}

bool contains(const std::vector<Edge>& subset, const Edge& e) { return std::find(subset.begin(), subset.end(), e) != subset.end(); }

Graph build_morris(int k, bool odd_at_zero) {
    const auto edges = base_edges(k);
    std::vector<NodeLabel> labels;
    std::vector<std::pair<int, std::vector<Edge>>> tops;
    for (int v = 0; v <= k; ++v) {
        const auto inc = incident(edges, v);
        for (auto& subset : subsets_with_parity<Edge>(inc, odd_at_zero && v == 0)) {
            labels.emplace_back(TopLabel{v, subset});
            tops.emplace_back(v, std::move(subset));
        }
    }
    std::map<std::pair<Edge, int>, int> bottom;
    for (const auto& e : edges)
        for (int bit = 0; bit < 2; ++bit) {
            bottom[{e, bit}] = static_cast<int>(labels.size());
            labels.emplace_back(BottomLabel{e, bit});
        }

    std::vector<Edge> out;
    for (const auto& e : edges) out.emplace_back(bottom.at({e, 0}), bottom.at({e, 1}));
    for (std::size_t t = 0; t < tops.size(); ++t) {
        const auto& [v, subset] = tops[t];
        for (const auto& e : incident(edges, v)) out.emplace_back(static_cast<int>(t), bottom.at({e, contains(subset, e) ? 1 : 0}));
    }
    const int n = static_cast<int>(labels.size());
    return Graph(n, std::move(out), std::move(labels));
}

Graph build_cai(int k, bool twisted) {
    const auto edges = base_edges(k);
    std::vector<NodeLabel> labels;
    std::vector<Edge> out;
    // (vertex, edge, is_a) -> node index
    std::map<std::tuple<int, Edge, bool>, int> outer;
    for (int v = 0; v <= k; ++v) {
        const auto inc = incident(edges, v);
        std::vector<std::pair<int, std::vector<Edge>>> middles;
        for (auto& subset : subsets_with_parity<Edge>(inc, false)) {
            middles.emplace_back(static_cast<int>(labels.size()), subset);
            labels.emplace_back(GadgetLabel{GadgetLabel::Kind::Middle, v, std::move(subset), {}});
        }
        for (const auto& e : inc) {
            outer[{v, e, true}] = static_cast<int>(labels.size());
            labels.emplace_back(GadgetLabel{GadgetLabel::Kind::OuterA, v, {}, e});
            outer[{v, e, false}] = static_cast<int>(labels.size());
            labels.emplace_back(GadgetLabel{GadgetLabel::Kind::OuterB, v, {}, e});
        }
        for (const auto& [index, subset] : middles)
            for (const auto& e : inc) out.emplace_back(index, outer.at({v, e, contains(subset, e)}));
    }
    for (const auto& e : edges) {
        const auto [u, v] = e;
        const bool cross = twisted && e == edges.front();
        out.emplace_back(outer.at({u, e, true}), outer.at({v, e, !cross}));
        out.emplace_back(outer.at({u, e, false}), outer.at({v, e, cross}));
    }
    const int n = static_cast<int>(labels.size());
    return Graph(n, std::move(out), std::move(labels));
}

}  // namespace

std::uint64_t morris_node_count(int k) { return static_cast<std::uint64_t>(k + 1) * (std::uint64_t{1} << (k - 1)) + 2 * binomial(k + 1, 2); }

std::uint64_t cai_node_count(int k) { return static_cast<std::uint64_t>(k + 1) * (std::uint64_t{1} << (k - 1)) + 4 * binomial(k + 1, 2); }

CfiPair build_morris_pair(int k) {
    check_k(k);
    return {build_morris(k, false), build_morris(k, true), k, CfiConstruction::Morris};
}

CfiPair build_cai_pair(int k) {
    check_k(k);
    return {build_cai(k, false), build_cai(k, true), k, CfiConstruction::Cai};
}

const char* to_string(CfiConstruction c) { return c == CfiConstruction::Morris ? "morris" : "cai"; }

}  // namespace qwgi
