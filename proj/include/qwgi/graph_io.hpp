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

#include <filesystem>
#include <string>
#include <string_view>

#include "qwgi/errors.hpp"
#include "qwgi/graph.hpp"

namespace qwgi {

enum class ParseErrorKind { MalformedHeader, TruncatedPayload, TrailingGarbage, InvalidCharacter };

class ParseError : public InvalidArgument {
public:
    ParseError(ParseErrorKind kind, const std::string& what) : InvalidArgument(what), kind_(kind) {}
    ParseErrorKind kind() const noexcept { return kind_; }

private:
    ParseErrorKind kind_;
};

// graph6: size prefix N(n), then the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into 6-bit chunks offset by 63.
// An optional ">>graph6<<" header and one trailing newline are accepted.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge list: first line "N M", then M lines "i j" with 0-based indices.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Format is chosen by extension: ".g6" is graph6, anything else an edge list.
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

}  // namespace qwgi
