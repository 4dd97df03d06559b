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

#include "qwgi/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace qwgi {

namespace {

constexpr int kOffset = 63;

bool is_g6_char(char c) { return c >= 63 && c <= 126; }

std::string_view strip_newline(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    return text;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = strip_newline(text);
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (text.empty()) throw ParseError(ParseErrorKind::MalformedHeader, "graph6: empty input");

    std::size_t pos = 0;
    auto read_bytes = [&](int count) -> long long {
        long long value = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= text.size()) throw ParseError(ParseErrorKind::MalformedHeader, "graph6: size field ends early");
            const char c = text[pos++];
            if (!is_g6_char(c)) throw ParseError(ParseErrorKind::MalformedHeader, "graph6: invalid byte in size field");
            value = (value << 6) | (c - kOffset);
        }
        return value;
    };

    long long n = 0;
    if (!is_g6_char(text[0])) throw ParseError(ParseErrorKind::MalformedHeader, "graph6: invalid size byte");
    if (text[0] != 126) {
        n = read_bytes(1);
    } else if (text.size() > 1 && text[1] == 126) {
        pos = 2;
        n = read_bytes(6);
    } else {
        pos = 1;
        n = read_bytes(3);
    }
    if (n < 1) throw ParseError(ParseErrorKind::MalformedHeader, "graph6: graph must have at least one node");
    if (n > (1 << 20)) throw ParseError(ParseErrorKind::MalformedHeader, "graph6: node count too large");

    const auto bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t chunks = (bits + 5) / 6;
    const std::string_view payload = text.substr(pos);
    if (payload.size() < chunks)
        throw ParseError(ParseErrorKind::TruncatedPayload, "graph6: expected " + std::to_string(chunks) + " payload bytes, got " + std::to_string(payload.size()));
    if (payload.size() > chunks)
        throw ParseError(ParseErrorKind::TrailingGarbage, "graph6: " + std::to_string(payload.size() - chunks) + " unexpected bytes after payload");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const char c = payload[bit / 6];
            if (!is_g6_char(c)) throw ParseError(ParseErrorKind::InvalidCharacter, "graph6: invalid payload byte");
            if (((c - kOffset) >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (char c : payload)
        if (!is_g6_char(c)) throw ParseError(ParseErrorKind::InvalidCharacter, "graph6: invalid payload byte");
    return from_edge_list(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const long long n = g.node_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kOffset));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) lines.pop_back();

    auto parse_pair = [](std::string_view line, long long& a, long long& b) {
        std::istringstream in{std::string(line)};
        std::string rest;
        return static_cast<bool>(in >> a >> b) && !(in >> rest);
    };

    if (lines.empty()) throw ParseError(ParseErrorKind::MalformedHeader, "edge list: empty input");
    long long n = 0;
    long long m = 0;
    if (!parse_pair(lines[0], n, m) || n < 1 || m < 0)
        throw ParseError(ParseErrorKind::MalformedHeader, "edge list: header must be 'N M' with N >= 1, M >= 0");
    if (static_cast<long long>(lines.size()) - 1 < m)
        throw ParseError(ParseErrorKind::TruncatedPayload, "edge list: header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw ParseError(ParseErrorKind::TrailingGarbage, "edge list: content after the declared " + std::to_string(m) + " edges");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 1; i <= m; ++i) {
        long long a = 0;
        long long b = 0;
        if (!parse_pair(lines[static_cast<std::size_t>(i)], a, b))
            throw ParseError(ParseErrorKind::InvalidCharacter, "edge list: line " + std::to_string(i + 1) + " is not 'i j'");
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open graph file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    return path.extension() == ".g6" ? parse_graph6(text) : parse_edge_list(text);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write graph file " + path.string());
    if (path.extension() == ".g6")
        out << write_graph6(g) << '\n';
    else
        out << write_edge_list(g);
}

}  // namespace qwgi
