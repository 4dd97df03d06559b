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

#include "qwgi/graph.hpp"

#include <algorithm>
#include <deque>

#include "qwgi/errors.hpp"

namespace qwgi {

namespace {

std::string edge_string(const Edge& e) { return std::to_string(e.first) + std::to_string(e.second); }

std::string subset_string(const std::vector<Edge>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ",";
        s += edge_string(subset[i]);
    }
    return s + "}";
}

std::vector<NodeLabel> integer_labels(int n) {
    std::vector<NodeLabel> labels;
    labels.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) labels.emplace_back(IntegerLabel{i});
    return labels;
}

}  // namespace

std::string to_string(const NodeLabel& label) {
    struct Visitor {
        std::string operator()(const IntegerLabel& l) const { return std::to_string(l.id); }
        std::string operator()(const TopLabel& l) const {
            return "(" + std::to_string(l.vertex) + "," + subset_string(l.subset) + ")";
        }
        std::string operator()(const BottomLabel& l) const { return edge_string(l.edge) + "^" + std::to_string(l.bit); }
        std::string operator()(const GadgetLabel& l) const {
            switch (l.kind) {
                case GadgetLabel::Kind::Middle:
                    return "m(" + std::to_string(l.vertex) + "," + subset_string(l.subset) + ")";
                case GadgetLabel::Kind::OuterA:
                    return "a(" + std::to_string(l.vertex) + "," + edge_string(l.edge) + ")";
                case GadgetLabel::Kind::OuterB:
                    return "b(" + std::to_string(l.vertex) + "," + edge_string(l.edge) + ")";
            }
            return {};
        }
    };
    return std::visit(Visitor{}, label);
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<NodeLabel> labels)
    : edges_(std::move(edges)), labels_(std::move(labels)), adjacency_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 1) throw InvalidArgument("graph must have at least one node, got " + std::to_string(n));
    if (static_cast<int>(labels_.size()) != n)
        throw InvalidArgument("label count " + std::to_string(labels_.size()) + " does not match node count " + std::to_string(n));
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
        if (u == v) throw InvalidArgument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= node_count()) return false;
    const auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

Graph from_edge_list(int n, std::span<const Edge> edges) { return from_edge_list(n, edges, integer_labels(n)); }

Graph from_edge_list(int n, std::span<const Edge> edges, std::vector<NodeLabel> labels) {
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()), std::move(labels));
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degrees(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) degrees[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.node_count();
    DistanceMatrix dist(n);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        dist.set(s, s, 0);
        queue.assign(1, s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (dist.at(s, w) != DistanceMatrix::kUnreachable) continue;
                dist.set(s, w, dist.at(s, u) + 1);
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> find_2_cliques(const Graph& g, int size, std::optional<int> degree_filter) {
    if (size < 2) throw InvalidArgument("2-clique size must be at least 2, got " + std::to_string(size));
    const auto dist = all_pairs_distances(g);
    std::vector<int> candidates;
    for (int v = 0; v < g.node_count(); ++v)
        if (!degree_filter || g.degree(v) == *degree_filter) candidates.push_back(v);

    std::vector<std::vector<int>> found;
    std::vector<int> current;
    // Extend `current` with candidates after position `start` that are at distance 2 from every member.
    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(current.size()) == size) {
            found.push_back(current);
            return;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            const int v = candidates[i];
            const bool ok = std::all_of(current.begin(), current.end(), [&](int u) { return dist.at(u, v) == 2; });
            if (!ok) continue;
            current.push_back(v);
            self(self, i + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return found;
}

Graph permute(const Graph& g, std::span<const int> perm) {
    const int n = g.node_count();
    if (static_cast<int>(perm.size()) != n)
        throw InvalidArgument("permutation length " + std::to_string(perm.size()) + " does not match node count " + std::to_string(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw InvalidArgument("permutation is not a bijection on [0," + std::to_string(n) + ")");
        seen[static_cast<std::size_t>(p)] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    std::vector<NodeLabel> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = g.labels()[static_cast<std::size_t>(i)];
    return Graph(n, std::move(edges), std::move(labels));
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edge_list(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.node_count();
    std::vector<Edge> edges = a.edges();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    std::vector<NodeLabel> labels;
    for (int i = 0; i < na + b.node_count(); ++i) labels.emplace_back(IntegerLabel{i});
    return Graph(na + b.node_count(), std::move(edges), std::move(labels));
}

}  // namespace qwgi
