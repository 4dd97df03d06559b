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
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qwgi {

using Edge = std::pair<int, int>;

// Node provenance labels. Labels travel with nodes as payload; every
// algorithm in the library works on indices only.
struct IntegerLabel {
    int id = 0;
    bool operator==(const IntegerLabel&) const = default;
};

// Top node (v, S) of the Morris construction; S is a subset of the base edges at v.
struct TopLabel {
    int vertex = 0;
    std::vector<Edge> subset;
    bool operator==(const TopLabel&) const = default;
};

// Bottom node e^bit of the Morris construction.
struct BottomLabel {
    Edge edge;
    int bit = 0;
    bool operator==(const BottomLabel&) const = default;
};

// Gadget node of the Cai construction: a middle node m_{v,S} or an outer node a_{v,e} / b_{v,e}.
struct GadgetLabel {
    enum class Kind { Middle, OuterA, OuterB };
    Kind kind = Kind::Middle;
    int vertex = 0;
    std::vector<Edge> subset;  // Middle only
    Edge edge{};               // OuterA / OuterB only
    bool operator==(const GadgetLabel&) const = default;
};

using NodeLabel = std::variant<IntegerLabel, TopLabel, BottomLabel, GadgetLabel>;

std::string to_string(const NodeLabel& label);

// Undirected simple graph with immutable structure. Edges are stored as
// sorted pairs (i < j) in lexicographic order; neighbor lists are sorted.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges, std::vector<NodeLabel> labels);

    int node_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<NodeLabel>& labels() const noexcept { return labels_; }
    std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const { return edges_ == other.edges_ && node_count() == other.node_count(); }

private:
    std::vector<Edge> edges_;
    std::vector<NodeLabel> labels_;
    std::vector<std::vector<int>> adjacency_;
};

// Builds a graph with integer labels 0..n-1. Duplicate pairs are collapsed;
// out-of-range indices and self-loops are rejected with the offending pair.
Graph from_edge_list(int n, std::span<const Edge> edges);

// Same as above but with caller-supplied labels (size must equal n).
Graph from_edge_list(int n, std::span<const Edge> edges, std::vector<NodeLabel> labels);

std::vector<int> degree_sequence(const Graph& g);

class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

    int size() const noexcept { return n_; }
    int at(int i, int j) const { return d_[index(i, j)]; }
    void set(int i, int j, int value) { d_[index(i, j)] = value; }

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }
    int n_;
    std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// All node sets of exactly `size` members that are pairwise at distance 2.
// With a degree filter only nodes of that degree are candidates. Each set is
// sorted; the list is in lexicographic order.
std::vector<std::vector<int>> find_2_cliques(const Graph& g, int size, std::optional<int> degree_filter = std::nullopt);

// Relabels node i as perm[i]. Labels move with their nodes.
Graph permute(const Graph& g, std::span<const int> perm);

// Simple fixtures.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace qwgi
