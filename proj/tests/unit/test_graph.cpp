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

#include <algorithm>
#include <deque>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "qwgi/cfi.hpp"
#include "qwgi/errors.hpp"
#include "qwgi/graph.hpp"
#include "qwgi/graph_io.hpp"
#include "qwgi/isomorphism.hpp"
#include "qwgi/srg.hpp"

using namespace qwgi;

namespace {

int index_of(const Graph& g, const std::string& label) {
    for (int v = 0; v < g.node_count(); ++v)
        if (to_string(g.labels()[static_cast<std::size_t>(v)]) == label) return v;
    FAIL("label not found: " << label);
    return -1;
}

}  // namespace

TEST_CASE("graph construction and validation") {
    const std::vector<Edge> tri{{0, 1}, {0, 2}, {1, 2}};
    const auto k3 = from_edge_list(3, tri);
    CHECK(k3.edge_count() == 3);
    CHECK(degree_sequence(k3) == std::vector<int>{2, 2, 2});

    const auto empty = from_edge_list(4, std::vector<Edge>{});
    CHECK(empty.edge_count() == 0);

    const auto hex = cycle_graph(6);
    for (int v = 0; v < 6; ++v) CHECK(hex.degree(v) == 2);

    CHECK_THROWS_AS(from_edge_list(0, std::vector<Edge>{}), InvalidArgument);
    CHECK_THROWS_AS(from_edge_list(3, std::vector<Edge>{{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(from_edge_list(3, std::vector<Edge>{{1, 1}}), InvalidArgument);

    const auto dup = from_edge_list(3, std::vector<Edge>{{1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
    CHECK(dup.has_edge(1, 0));
}

TEST_CASE("degree sequences of the smallest CFI graphs") {
    const auto pair1 = build_morris_pair(1);
    const auto p_deg = degree_sequence(pair1.p);
    const auto q_deg = degree_sequence(pair1.q);
    CHECK(*std::max_element(p_deg.begin(), p_deg.end()) == 3);
    CHECK(*std::max_element(q_deg.begin(), q_deg.end()) == 2);
    CHECK(pair1.p.degree(index_of(pair1.p, "01^0")) == 3);

    const auto pair2 = build_morris_pair(2);
    for (int v = 0; v < pair2.p.node_count(); ++v)
        if (std::holds_alternative<TopLabel>(pair2.p.labels()[static_cast<std::size_t>(v)])) CHECK(pair2.p.degree(v) == 2);
}

TEST_CASE("all-pairs distances match an independent BFS") {
    const auto hex = cycle_graph(6);
    CHECK(all_pairs_distances(hex).at(0, 3) == 3);
    const auto k3 = complete_graph(3);
    const auto d3 = all_pairs_distances(k3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(d3.at(i, j) == (i == j ? 0 : 1));

    const auto p2 = build_morris_pair(2).p;
    const auto d = all_pairs_distances(p2);
    CHECK(d.at(index_of(p2, "(1,{})"), index_of(p2, "(2,{})")) == 2);

    // Oracle: BFS over the dense adjacency rows.
    const auto rows = testing::adjacency_rows(p2);
    const int n = p2.node_count();
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::deque<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w = 0; w < n; ++w)
                if (rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] && dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
        }
        for (int t = 0; t < n; ++t) CHECK(d.at(s, t) == dist[static_cast<std::size_t>(t)]);
    }

    const auto split = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(all_pairs_distances(split).at(0, 4) == DistanceMatrix::kUnreachable);
}

TEST_CASE("2-cliques separate the Morris pairs") {
    const auto pair2 = build_morris_pair(2);
    const auto found = find_2_cliques(pair2.p, 3, 2);
    std::vector<int> expected{index_of(pair2.p, "(0,{})"), index_of(pair2.p, "(1,{})"), index_of(pair2.p, "(2,{})")};
    std::sort(expected.begin(), expected.end());
    CHECK(std::find(found.begin(), found.end(), expected) != found.end());
    CHECK(find_2_cliques(pair2.q, 3, 2).empty());

    // At k = 3 every gadget holds four subsets that pairwise agree on one edge, so
    // both graphs have size-4 2-cliques; only P has one spanning all four base vertices.
    const auto pair3 = build_morris_pair(3);
    auto spanning = [](const Graph& g, const std::vector<std::vector<int>>& cliques) {
        std::size_t count = 0;
        for (const auto& c : cliques) {
            std::set<int> vertices;
            for (int v : c) vertices.insert(std::get<TopLabel>(g.labels()[static_cast<std::size_t>(v)]).vertex);
            count += vertices.size() == c.size() ? 1 : 0;
        }
        return count;
    };
    const auto p3 = find_2_cliques(pair3.p, 4, 3);
    const auto q3 = find_2_cliques(pair3.q, 4, 3);
    CHECK(p3.size() == 24);
    CHECK(q3.size() == 16);
    CHECK(spanning(pair3.p, p3) == 8);
    CHECK(spanning(pair3.q, q3) == 0);
    const auto d = all_pairs_distances(pair3.q);
    for (const auto& c : q3)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(d.at(c[i], c[j]) == 2);
}

TEST_CASE("permutations") {
    const auto hex = cycle_graph(6);
    const std::vector<int> id{0, 1, 2, 3, 4, 5};
    CHECK(permute(hex, id) == hex);
    const std::vector<int> rot{1, 2, 3, 4, 5, 0};
    CHECK(permute(hex, rot) == hex);
    CHECK_THROWS_AS(permute(hex, std::vector<int>{0, 0, 1, 2, 3, 4}), InvalidArgument);

    const auto p2 = build_morris_pair(2).p;
    const auto perm = testing::random_permutation(p2.node_count(), 7);
    const auto moved = permute(p2, perm);
    CHECK(are_isomorphic(p2, moved).isomorphic);
    CHECK(to_string(moved.labels()[static_cast<std::size_t>(perm[0])]) == to_string(p2.labels()[0]));
}

TEST_CASE("isomorphism oracle") {
    const auto pair2 = build_morris_pair(2);
    for (std::uint32_t seed = 0; seed < 5; ++seed) {
        const auto perm = testing::random_permutation(pair2.p.node_count(), seed);
        const auto moved = permute(pair2.p, perm);
        const auto r = are_isomorphic(pair2.p, moved);
        REQUIRE(r.isomorphic);
        REQUIRE(r.witness);
        CHECK(is_isomorphism(pair2.p, moved, *r.witness));
    }
    CHECK_FALSE(are_isomorphic(pair2.p, pair2.q).isomorphic);
    CHECK_FALSE(are_isomorphic(build_cai_pair(2).p, build_cai_pair(2).q).isomorphic);
    CHECK_FALSE(are_isomorphic(rooks_4x4(), shrikhande()).isomorphic);
    CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))).isomorphic);
    CHECK_FALSE(are_isomorphic(cycle_graph(5), cycle_graph(6)).isomorphic);
    CHECK_THROWS_AS(are_isomorphic(cycle_graph(70), cycle_graph(70)), OracleOutOfRange);
}

TEST_CASE("graph6 against hand encodings") {
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    CHECK(write_graph6(from_edge_list(1, std::vector<Edge>{})) == "@");
    // Path 0-1-2-3: upper-triangle bits (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) = 101001 -> 41+63 = 'h'.
    CHECK(write_graph6(path_graph(4)) == "Ch");
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));

    const auto s = shrikhande();
    CHECK(parse_graph6(write_graph6(s)) == s);
    const auto big = cycle_graph(100);
    CHECK(write_graph6(big).substr(0, 4) == std::string{char(126), char(63), char(64), char(63 + 36)});
    CHECK(parse_graph6(write_graph6(big)) == big);

    auto kind_of = [](std::string_view text) {
        try {
            parse_graph6(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        FAIL("expected a parse error");
        return ParseErrorKind::MalformedHeader;
    };
    CHECK(kind_of("") == ParseErrorKind::MalformedHeader);
    CHECK(kind_of("C") == ParseErrorKind::TruncatedPayload);
    CHECK(kind_of("Bww") == ParseErrorKind::TrailingGarbage);
    CHECK(kind_of("B\x01") == ParseErrorKind::InvalidCharacter);
}

TEST_CASE("edge list round trip") {
    const auto g = build_cai_pair(1).q;
    CHECK(parse_edge_list(write_edge_list(g)) == g);
    CHECK(parse_edge_list("3 2\n0 1\n1 2\n") == path_graph(3));
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), InvalidArgument);
}
