// Copyright 2026 The netcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcert/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include <fmt/core.h>

#include "netcert/errors.hpp"
#include "netcert/zmod.hpp"

namespace netcert {

Multigraph::Multigraph(std::uint32_t d, std::size_t n) : d_(d), n_(n), gamma_(n * n, 0) {
    if (!is_prime(d)) throw InvalidArgument(fmt::format("dimension {} is not prime", d));
    if (n == 0) throw InvalidArgument("graph must have at least one vertex");
}

Multigraph Multigraph::from_edges(std::uint32_t d, std::size_t n, std::span<const Edge> edges) {
    Multigraph g(d, n);
    for (const auto& e : edges) {
        g.set_weight(e.u, e.v, mod_add(g.weight(e.u, e.v), e.weight % d, d));
    }
    return g;
}

std::size_t Multigraph::index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
        throw InvalidArgument(fmt::format("vertex index out of range ({}, {}) for n = {}", i, j, n_));
    }
    return i * n_ + j;
}

std::uint32_t Multigraph::weight(std::size_t i, std::size_t j) const { return gamma_[index(i, j)]; }

void Multigraph::set_weight(std::size_t i, std::size_t j, std::uint32_t w) {
    if (i == j) throw InvalidArgument("self-loops are not allowed");
    gamma_[index(i, j)] = w % d_;
    gamma_[index(j, i)] = w % d_;
}

std::size_t Multigraph::degree(std::size_t i) const {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < n_; ++j) deg += weight(i, j) != 0 ? 1 : 0;
    return deg;
}

std::vector<Edge> Multigraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (auto w = weight(i, j)) out.push_back(Edge{i, j, w});
        }
    }
    return out;
}

bool Neighborhood::contains(std::size_t v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

Neighborhood neighborhood(const Multigraph& g, std::size_t i) {
    if (i >= g.size()) throw InvalidArgument(fmt::format("vertex {} out of range", i));
    Neighborhood nb{i, {}};
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g.weight(i, j) != 0) nb.members.push_back(j);
    }
    return nb;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos >= line.size()) break;
        auto end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
        out.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, fmt::format("expected non-negative integer for {}, got '{}'", what, tok));
    }
    return v;
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
    std::uint64_t d = 0;
    std::uint64_t n = 0;
    bool have_d = false;
    bool have_n = false;
    std::vector<Edge> edges;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = split_tokens(line);
        if (tok.empty()) continue;
        if (tok[0] == "dim") {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'dim <d>'");
            if (have_d) throw ParseError(lineno, "duplicate 'dim' line");
            if (!edges.empty()) throw ParseError(lineno, "'dim' must precede edges");
            d = parse_uint(tok[1], lineno, "dim");
            if (d > 0xffffffffULL || !is_prime(d)) throw ParseError(lineno, fmt::format("dimension {} is not prime", d));
            have_d = true;
        } else if (tok[0] == "vertices") {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'vertices <n>'");
            if (have_n) throw ParseError(lineno, "duplicate 'vertices' line");
            n = parse_uint(tok[1], lineno, "vertices");
            if (n == 0) throw ParseError(lineno, "vertex count must be at least 1");
            if (n > 4096) throw ParseError(lineno, "vertex count too large");
            have_n = true;
        } else if (tok[0] == "edge") {
            if (!have_d || !have_n) throw ParseError(lineno, "'dim' and 'vertices' must precede edges");
            if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <u> <v> <w>'");
            auto u = parse_uint(tok[1], lineno, "u");
            auto v = parse_uint(tok[2], lineno, "v");
            auto w = parse_uint(tok[3], lineno, "w");
            if (u < 1 || u > n) throw ParseError(lineno, fmt::format("vertex {} out of range 1..{}", u, n));
            if (v < 1 || v > n) throw ParseError(lineno, fmt::format("vertex {} out of range 1..{}", v, n));
            if (u == v) throw ParseError(lineno, fmt::format("self-loop on vertex {}", u));
            if (w < 1 || w >= d) throw ParseError(lineno, fmt::format("weight {} not in 1..{}", w, d - 1));
            edges.push_back(Edge{u - 1, v - 1, static_cast<std::uint32_t>(w)});
        } else {
            throw ParseError(lineno, fmt::format("unknown directive '{}'", tok[0]));
        }
    }
    if (!have_d) throw ParseError(0, "missing 'dim' line");
    if (!have_n) throw ParseError(0, "missing 'vertices' line");
    return Multigraph::from_edges(static_cast<std::uint32_t>(d), n, edges);
}

Multigraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

std::string format_graph(const Multigraph& g) {
    std::string out = fmt::format("dim {}\nvertices {}\n", g.dim(), g.size());
    for (const auto& e : g.edges()) out += fmt::format("edge {} {} {}\n", e.u + 1, e.v + 1, e.weight);
    return out;
}

Multigraph local_complement(const Multigraph& g, std::size_t pivot, std::uint32_t a) {
    if (pivot >= g.size()) throw InvalidArgument(fmt::format("pivot {} out of range", pivot));
    const auto d = g.dim();
    a %= d;
    Multigraph out = g;
    if (a == 0) return out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == pivot) continue;
        const auto gi = g.weight(i, pivot);
        if (gi == 0) continue;
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (j == pivot) continue;
            const auto gj = g.weight(j, pivot);
            if (gj == 0) continue;
            out.set_weight(i, j, mod_add(g.weight(i, j), mod_mul(a, mod_mul(gi, gj, d), d), d));
        }
    }
    return out;
}

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm) {
    std::vector<std::size_t> inv(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || inv[perm[i]] != perm.size()) {
            throw InvalidArgument("relabel: not a permutation");
        }
        inv[perm[i]] = i;
    }
    return inv;
}

Multigraph relabel(const Multigraph& g, std::span<const std::size_t> perm) {
    if (perm.size() != g.size()) throw InvalidArgument("relabel: permutation has wrong length");
    invert_permutation(perm);
    Multigraph out(g.dim(), g.size());
    for (const auto& e : g.edges()) out.set_weight(perm[e.u], perm[e.v], e.weight);
    return out;
}

}  // namespace netcert
