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

#include "qwgi/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "qwgi/errors.hpp"

namespace qwgi {

namespace {

using Coloring = std::vector<int>;

// Refines two colorings jointly so that color ids stay comparable across graphs.
// New ids are assigned in sorted signature order, which keeps the procedure
// equivariant: isomorphic inputs produce colorings related by the isomorphism.
void refine(const Graph& a, const Graph& b, Coloring& ca, Coloring& cb) {
    auto classes = [](const Coloring& x, const Coloring& y) {
        std::vector<int> all(x);
        all.insert(all.end(), y.begin(), y.end());
        std::sort(all.begin(), all.end());
        return std::unique(all.begin(), all.end()) - all.begin();
    };
    auto before = classes(ca, cb);
    while (true) {
        std::map<std::vector<int>, int> table;
        auto signatures = [&](const Graph& g, const Coloring& c) {
            std::vector<std::vector<int>> sig(c.size());
            for (int v = 0; v < g.node_count(); ++v) {
                auto& s = sig[static_cast<std::size_t>(v)];
                s.push_back(c[static_cast<std::size_t>(v)]);
                for (int w : g.neighbors(v)) s.push_back(c[static_cast<std::size_t>(w)]);
                std::sort(s.begin() + 1, s.end());
                table.emplace(s, 0);
            }
            return sig;
        };
        const auto sa = signatures(a, ca);
        const auto sb = signatures(b, cb);
        int next = 0;
        for (auto& [key, id] : table) id = next++;
        for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = table.at(sa[v]);
        for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = table.at(sb[v]);
        const auto after = classes(ca, cb);
        if (after == before) return;
        before = after;
    }
}

bool same_histogram(Coloring ca, Coloring cb) {
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

class Search {
public:
    Search(const Graph& a, const Graph& b) : a_(a), b_(b) {}

    std::optional<std::vector<int>> run(Coloring ca, Coloring cb) {
        refine(a_, b_, ca, cb);
        if (!same_histogram(ca, cb)) return std::nullopt;

        // Target cell: smallest non-singleton cell, ties broken by color id.
        std::map<int, int> sizes;
        for (int c : ca) ++sizes[c];
        int target = -1;
        int best = 0;
        for (const auto& [color, size] : sizes)
            if (size > 1 && (target < 0 || size < best)) {
                target = color;
                best = size;
            }

        if (target < 0) {
            std::vector<int> map(ca.size());
            std::vector<int> where(cb.size());
            const int n = static_cast<int>(cb.size());
            std::vector<int> by_color(static_cast<std::size_t>(*std::max_element(cb.begin(), cb.end()) + 1), -1);
            for (int w = 0; w < n; ++w) by_color[static_cast<std::size_t>(cb[static_cast<std::size_t>(w)])] = w;
            for (std::size_t v = 0; v < ca.size(); ++v) map[v] = by_color[static_cast<std::size_t>(ca[v])];
            if (is_isomorphism(a_, b_, map)) return map;
            return std::nullopt;
        }

        const int v = static_cast<int>(std::find(ca.begin(), ca.end(), target) - ca.begin());
        const int fresh = std::max(*std::max_element(ca.begin(), ca.end()), *std::max_element(cb.begin(), cb.end())) + 1;
        for (int w = 0; w < b_.node_count(); ++w) {
            if (cb[static_cast<std::size_t>(w)] != target) continue;
            Coloring na = ca;
            Coloring nb = cb;
            na[static_cast<std::size_t>(v)] = fresh;
            nb[static_cast<std::size_t>(w)] = fresh;
            if (auto found = run(std::move(na), std::move(nb))) return found;
        }
        return std::nullopt;
    }

private:
    const Graph& a_;
    const Graph& b_;
};

}  // namespace

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& map) {
    const int n = a.node_count();
    if (n != b.node_count() || a.edge_count() != b.edge_count() || static_cast<int>(map.size()) != n) return false;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int m : map) {
        if (m < 0 || m >= n || used[static_cast<std::size_t>(m)]) return false;
        used[static_cast<std::size_t>(m)] = 1;
    }
    return std::all_of(a.edges().begin(), a.edges().end(), [&](const Edge& e) {
        return b.has_edge(map[static_cast<std::size_t>(e.first)], map[static_cast<std::size_t>(e.second)]);
    });
}

IsomorphismResult are_isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options) {
    if (a.node_count() > options.node_limit || b.node_count() > options.node_limit)
        throw OracleOutOfRange("isomorphism oracle out of range: " + std::to_string(std::max(a.node_count(), b.node_count())) +
                               " nodes exceeds limit " + std::to_string(options.node_limit));
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return {};
    Search search(a, b);
    auto witness = search.run(Coloring(static_cast<std::size_t>(a.node_count()), 0), Coloring(static_cast<std::size_t>(b.node_count()), 0));
    if (!witness) return {};
    if (!is_isomorphism(a, b, *witness)) throw StructuralError("isomorphism search produced an invalid witness");
    return {true, std::move(witness)};
}

}  // namespace qwgi
