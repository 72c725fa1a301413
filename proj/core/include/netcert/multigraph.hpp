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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace netcert {

/// One undirected edge bundle. Vertices are 0-based; `weight` in [1, d).
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    std::uint32_t weight = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A multigraph over Z_d: symmetric edge-multiplicity matrix with zero
/// diagonal. Vertices are 0-based in the API; file formats are 1-based.
class Multigraph {
public:
    /// Edgeless graph. Throws InvalidArgument if d is not prime or n == 0.
    Multigraph(std::uint32_t d, std::size_t n);

    static Multigraph from_edges(std::uint32_t d, std::size_t n, std::span<const Edge> edges);

    std::uint32_t dim() const noexcept { return d_; }
    std::size_t size() const noexcept { return n_; }

    std::uint32_t weight(std::size_t i, std::size_t j) const;

    /// Sets gamma[i][j] = gamma[j][i] = w mod d. Self-loops are rejected.
    void set_weight(std::size_t i, std::size_t j, std::uint32_t w);

    std::size_t degree(std::size_t i) const;

    /// Nonzero edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::uint32_t d_;
    std::size_t n_;
    std::vector<std::uint32_t> gamma_;
};

/// Support of row `vertex`, ascending. Never contains `vertex`.
struct Neighborhood {
    std::size_t vertex = 0;
    std::vector<std::size_t> members;

    bool contains(std::size_t v) const;
    std::size_t size() const noexcept { return members.size(); }
};

Neighborhood neighborhood(const Multigraph& g, std::size_t i);

/// Parses the line-oriented graph format:
///
///     # comment
///     dim 3
///     vertices 3
///     edge 1 2 1
///
/// `dim` and `vertices` must appear once each before any `edge`. Repeated
/// edges accumulate mod d. Throws ParseError with the offending line.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(std::string_view text);

/// Inverse of parse_graph (canonical form: one edge line per nonzero pair).
std::string format_graph(const Multigraph& g);

/// gamma'[i][j] = gamma[i][j] + a * gamma[i][pivot] * gamma[j][pivot] for all
/// off-diagonal i, j != pivot. Row and column of the pivot are unchanged.
Multigraph local_complement(const Multigraph& g, std::size_t pivot, std::uint32_t a);

/// gamma'[perm[i]][perm[j]] = gamma[i][j]. Throws InvalidArgument unless perm
/// is a bijection on [0, n).
Multigraph relabel(const Multigraph& g, std::span<const std::size_t> perm);

/// Inverse permutation; throws InvalidArgument when `perm` is not a bijection.
std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm);

}  // namespace netcert
