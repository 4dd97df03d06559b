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

#include "qwgi/wl.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "qwgi/errors.hpp"

namespace qwgi {

namespace {

std::atomic<std::uint64_t> next_session{1};

// Signature tags keep initial and refined signatures of different kinds apart.
constexpr int kTagDegree = -1;
constexpr int kTagRefine = -2;
constexpr int kTagPattern = -3;
constexpr int kTagTupleRefine = -4;

std::size_t count_classes(const std::vector<int>& colors) { return std::set<int>(colors.begin(), colors.end()).size(); }

WLColoring finish(int arity, std::vector<int> colors, int rounds, std::vector<std::size_t> counts, const WLSession& session) {
    WLColoring out;
    out.arity = arity;
    out.rounds = rounds;
    out.class_counts = std::move(counts);
    out.session = session.id();
    for (int c : colors) ++out.histogram[c];
    out.colors = std::move(colors);
    return out;
}

template <typename Signature>
WLColoring refine_until_stable(int arity, std::vector<int> colors, WLSession& session, Signature&& signature) {
    std::vector<std::size_t> counts{count_classes(colors)};
    int rounds = 0;
    std::vector<int> sig;
    while (true) {
        std::vector<int> next(colors.size());
        for (std::size_t t = 0; t < colors.size(); ++t) {
            signature(t, colors, sig);
            next[t] = session.intern(sig);
        }
        const auto classes = count_classes(next);
        counts.push_back(classes);
        colors = std::move(next);
        if (classes == counts[counts.size() - 2]) break;
        ++rounds;
    }
    return finish(arity, std::move(colors), rounds, std::move(counts), session);
}

}  // namespace

WLSession::WLSession() : id_(next_session++) {}

int WLSession::intern(const std::vector<int>& signature) {
    const auto [it, inserted] = table_.emplace(signature, static_cast<int>(table_.size()));
    return it->second;
}

WLColoring color_refinement(const Graph& g, WLSession& session) {
    std::vector<int> colors(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) colors[static_cast<std::size_t>(v)] = session.intern({kTagDegree, g.degree(v)});
    return refine_until_stable(1, std::move(colors), session, [&](std::size_t v, const std::vector<int>& c, std::vector<int>& sig) {
        sig.assign({kTagRefine, c[v]});
        for (int w : g.neighbors(static_cast<int>(v))) sig.push_back(c[static_cast<std::size_t>(w)]);
        std::sort(sig.begin() + 2, sig.end());
    });
}

WLColoring k_wl(const Graph& g, int k, WLSession& session) {
    if (k < 1) throw InvalidArgument("WL arity must be at least 1");
    if (k == 1) return color_refinement(g, session);
    const auto n = static_cast<std::uint64_t>(g.node_count());
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= n;
        if (total > kMaxWLTuples)
            throw ResourceError(std::to_string(k) + "-WL on " + std::to_string(n) + " nodes exceeds the tuple limit " + std::to_string(kMaxWLTuples));
    }
    std::vector<std::uint64_t> stride(static_cast<std::size_t>(k));
    stride[static_cast<std::size_t>(k - 1)] = 1;
    for (int j = k - 2; j >= 0; --j) stride[static_cast<std::size_t>(j)] = stride[static_cast<std::size_t>(j + 1)] * n;
    auto entry = [&](std::uint64_t t, int j) { return static_cast<int>((t / stride[static_cast<std::size_t>(j)]) % n); };

    std::vector<int> colors(total);
    std::vector<int> sig;
    for (std::uint64_t t = 0; t < total; ++t) {
        sig.assign({kTagPattern});
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                const int u = entry(t, a);
                const int v = entry(t, b);
                sig.push_back(u == v ? 2 : (g.has_edge(u, v) ? 1 : 0));
            }
        colors[t] = session.intern(sig);
    }
    return refine_until_stable(k, std::move(colors), session, [&](std::size_t t, const std::vector<int>& c, std::vector<int>& out) {
        out.assign({kTagTupleRefine, c[t]});
        for (int j = 0; j < k; ++j) {
            const auto base = t - static_cast<std::uint64_t>(entry(t, j)) * stride[static_cast<std::size_t>(j)];
            const auto begin = out.size();
            for (std::uint64_t w = 0; w < n; ++w) out.push_back(c[base + w * stride[static_cast<std::size_t>(j)]]);
            std::sort(out.begin() + static_cast<std::ptrdiff_t>(begin), out.end());
        }
    });
}

bool histograms_equal(const WLColoring& a, const WLColoring& b) {
    if (a.arity != b.arity) throw InvalidArgument("cannot compare WL colorings of different arity");
    if (a.session != b.session) throw InvalidArgument("WL colorings come from different interning sessions");
    return a.histogram == b.histogram;
}

WLComparison compare_wl(const Graph& a, const Graph& b, int k) {
    WLSession session;
    WLComparison out{k_wl(a, k, session), k_wl(b, k, session), false};
    out.histograms_equal = histograms_equal(out.a, out.b);
    return out;
}

}  // namespace qwgi
