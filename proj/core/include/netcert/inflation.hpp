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
#include <optional>
#include <string>
#include <vector>

#include "netcert/pauli.hpp"

namespace netcert {

enum class Copy : std::uint8_t { Unprimed = 0, Primed = 1 };

/// One party of a two-copy inflation: original vertex index plus copy.
struct Party {
    std::size_t index = 0;
    Copy copy = Copy::Unprimed;

    friend bool operator==(const Party&, const Party&) = default;
};

/// Two-copy inflation of the fully connected N-party network, determined by
/// the set T of unprimed parties (never vertex 2) wired to 2' instead of 2.
///
/// Wiring: unprimed parties other than 2 form a clique, as do primed parties
/// other than 2'. An unprimed i != 2 talks to 2' if i is in T and to 2
/// otherwise; the primed copy i' takes the complementary copy of the same
/// source. T = {} is two disjoint copies of the original network.
class Inflation {
public:
    /// Throws InvalidArgument if an element is out of range, repeated, or
    /// equal to vertex 2 (index 1).
    Inflation(std::size_t n_parties, std::vector<std::size_t> t);

    std::size_t parties() const noexcept { return n_; }
    const std::vector<std::size_t>& t_set() const noexcept { return t_; }
    bool in_t(std::size_t i) const;

    /// Whether a copy of some source is shared by parties a and b.
    bool connected(const Party& a, const Party& b) const;

    friend bool operator==(const Inflation&, const Inflation&) = default;

private:
    std::size_t n_;
    std::vector<std::size_t> t_;
};

/// Register layout of operators on an inflation: 2N sites, unprimed parties
/// first.
inline std::size_t inflation_site(std::size_t n_parties, const Party& p) {
    return static_cast<std::size_t>(p.copy) * n_parties + p.index;
}

/// Places an N-site word on the unprimed half of a 2N-site register.
PauliWord embed_unprimed(const PauliWord& word);

/// Moves the factor on (party, unprimed) to (party, primed). The primed site
/// must be identity beforehand.
PauliWord move_to_primed(const PauliWord& op, std::size_t party);

/// Parties carrying a non-identity factor, unprimed first then primed.
std::vector<Party> support(const PauliWord& op);

/// If the op's subnetwork in `inf` is isomorphic to a subnetwork of the
/// original network (at most one copy per party, support pairwise
/// connected), returns the N-site word obtained by dropping copy labels.
/// Otherwise returns nullopt and fills `why`.
std::optional<PauliWord> project_to_original(const Inflation& inf, const PauliWord& op, std::string* why = nullptr);

/// Checks both conditions for equal expectation values of `b` on `from` and
/// `c` on `to` under a per-party swap assignment (swap[i] exchanges i and i'):
/// factors agree party by party, and the support-induced connectivity of the
/// two subnetworks corresponds. Parties outside the support must not be
/// swapped.
bool check_transfer(const Inflation& from, const PauliWord& b, const Inflation& to, const PauliWord& c,
                    const std::vector<bool>& swap, std::string* why = nullptr);

/// Searches swap assignments accepted by check_transfer; smallest in the
/// lexicographic order over (party 1, party 2, ...), unswapped first.
std::optional<std::vector<bool>> find_transfer(const Inflation& from, const PauliWord& b, const Inflation& to,
                                               const PauliWord& c);

}  // namespace netcert
