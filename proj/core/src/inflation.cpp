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

#include "netcert/inflation.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "netcert/errors.hpp"
#include "netcert/normalization.hpp"

namespace netcert {

Inflation::Inflation(std::size_t n_parties, std::vector<std::size_t> t) : n_(n_parties), t_(std::move(t)) {
    if (n_ < 2) throw InvalidArgument("inflation needs at least two parties");
    std::sort(t_.begin(), t_.end());
    if (std::adjacent_find(t_.begin(), t_.end()) != t_.end()) throw InvalidArgument("inflation T set has duplicates");
    for (auto i : t_) {
        if (i >= n_) throw InvalidArgument(fmt::format("inflation T element {} out of range", i + 1));
        if (i == kVertex2) throw InvalidArgument("inflation T set may not contain party 2");
    }
}

bool Inflation::in_t(std::size_t i) const { return std::binary_search(t_.begin(), t_.end(), i); }

bool Inflation::connected(const Party& a, const Party& b) const {
    if (a.index == b.index) return false;
    if (a.index != kVertex2 && b.index != kVertex2) return a.copy == b.copy;
    const Party& two = a.index == kVertex2 ? a : b;
    const Party& other = a.index == kVertex2 ? b : a;
    const bool crossed = two.copy != other.copy;
    return crossed == in_t(other.index);
}

PauliWord embed_unprimed(const PauliWord& word) {
    std::vector<SiteExponent> sites(2 * word.size());
    std::copy(word.sites().begin(), word.sites().end(), sites.begin());
    return PauliWord(word.dim(), word.phase(), std::move(sites));
}

PauliWord move_to_primed(const PauliWord& op, std::size_t party) {
    const auto n = op.size() / 2;
    if (op.size() % 2 != 0 || party >= n) throw InvalidArgument("move_to_primed: bad register or party");
    const auto u = inflation_site(n, {party, Copy::Unprimed});
    const auto p = inflation_site(n, {party, Copy::Primed});
    if (!op.site(p).is_identity()) throw InvalidArgument("move_to_primed: primed site already occupied");
    const auto s = op.site(u);
    return op.with_site(u, 0, 0).with_site(p, s.x, s.z);
}

std::vector<Party> support(const PauliWord& op) {
    const auto n = op.size() / 2;
    std::vector<Party> out;
    for (auto copy : {Copy::Unprimed, Copy::Primed}) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!op.site(inflation_site(n, {i, copy})).is_identity()) out.push_back({i, copy});
        }
    }
    return out;
}

namespace {

void set_why(std::string* why, std::string msg) {
    if (why) *why = std::move(msg);
}

std::string party_name(const Party& p) {
    return fmt::format("{}{}", p.index + 1, p.copy == Copy::Primed ? "'" : "");
}

bool register_matches(const Inflation& inf, const PauliWord& op, std::string* why) {
    if (op.size() != 2 * inf.parties()) {
        set_why(why, fmt::format("operator has {} sites, inflation register has {}", op.size(), 2 * inf.parties()));
        return false;
    }
    return true;
}

}  // namespace

std::optional<PauliWord> project_to_original(const Inflation& inf, const PauliWord& op, std::string* why) {
    if (!register_matches(inf, op, why)) return std::nullopt;
    const auto n = inf.parties();
    const auto supp = support(op);
    std::vector<SiteExponent> sites(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& u = op.site(inflation_site(n, {i, Copy::Unprimed}));
        const auto& p = op.site(inflation_site(n, {i, Copy::Primed}));
        if (!u.is_identity() && !p.is_identity()) {
            set_why(why, fmt::format("operator acts on both copies of party {}", i + 1));
            return std::nullopt;
        }
        sites[i] = u.is_identity() ? p : u;
    }
    for (std::size_t a = 0; a < supp.size(); ++a) {
        for (std::size_t b = a + 1; b < supp.size(); ++b) {
            if (!inf.connected(supp[a], supp[b])) {
                set_why(why, fmt::format("parties {} and {} are not connected in the inflation", party_name(supp[a]),
                                         party_name(supp[b])));
                return std::nullopt;
            }
        }
    }
    return PauliWord(op.dim(), op.phase(), std::move(sites));
}

namespace {

Party mapped(const Party& p, const std::vector<bool>& swap) {
    if (!swap[p.index]) return p;
    return {p.index, p.copy == Copy::Primed ? Copy::Unprimed : Copy::Primed};
}

// Factor-wise condition only.
bool factors_match(const PauliWord& b, const PauliWord& c, std::size_t party, bool swapped) {
    const auto n = b.size() / 2;
    for (auto copy : {Copy::Unprimed, Copy::Primed}) {
        const Party src{party, copy};
        const Party dst = swapped ? Party{party, copy == Copy::Primed ? Copy::Unprimed : Copy::Primed} : src;
        if (c.site(inflation_site(n, dst)) != b.site(inflation_site(n, src))) return false;
    }
    return true;
}

bool party_in_support(const PauliWord& op, std::size_t party) {
    const auto n = op.size() / 2;
    return !op.site(inflation_site(n, {party, Copy::Unprimed})).is_identity() ||
           !op.site(inflation_site(n, {party, Copy::Primed})).is_identity();
}

}  // namespace

bool check_transfer(const Inflation& from, const PauliWord& b, const Inflation& to, const PauliWord& c,
                    const std::vector<bool>& swap, std::string* why) {
    if (!register_matches(from, b, why) || !register_matches(to, c, why)) return false;
    const auto n = from.parties();
    if (to.parties() != n || b.dim() != c.dim()) {
        set_why(why, "operators live on different networks");
        return false;
    }
    if (swap.size() != n) {
        set_why(why, fmt::format("swap assignment has {} entries, expected {}", swap.size(), n));
        return false;
    }
    if (b.phase() != c.phase()) {
        set_why(why, fmt::format("phases differ ({} vs {})", b.phase(), c.phase()));
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (swap[i] && !party_in_support(b, i)) {
            set_why(why, fmt::format("party {} is swapped but outside the support", i + 1));
            return false;
        }
        if (!factors_match(b, c, i, swap[i])) {
            set_why(why, fmt::format("factors on party {} do not correspond", i + 1));
            return false;
        }
    }
    const auto supp = support(b);
    for (std::size_t x = 0; x < supp.size(); ++x) {
        for (std::size_t y = x + 1; y < supp.size(); ++y) {
            const bool lhs = from.connected(supp[x], supp[y]);
            const bool rhs = to.connected(mapped(supp[x], swap), mapped(supp[y], swap));
            if (lhs != rhs) {
                set_why(why, fmt::format("connection {}-{} is {} in the source inflation but {} in the target",
                                         party_name(supp[x]), party_name(supp[y]), lhs ? "present" : "absent",
                                         rhs ? "present" : "absent"));
                return false;
            }
        }
    }
    return true;
}

std::optional<std::vector<bool>> find_transfer(const Inflation& from, const PauliWord& b, const Inflation& to,
                                               const PauliWord& c) {
    if (b.size() != 2 * from.parties() || c.size() != b.size() || to.parties() != from.parties()) return std::nullopt;
    const auto n = from.parties();
    // Per-party options from the factor condition; only ambiguous parties
    // (identical factors on both copies) branch.
    std::vector<std::vector<bool>> options(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!party_in_support(b, i)) {
            options[i] = {false};
            continue;
        }
        for (bool s : {false, true}) {
            if (factors_match(b, c, i, s)) options[i].push_back(s);
        }
        if (options[i].empty()) return std::nullopt;
    }
    std::vector<std::size_t> choice(n, 0);
    std::vector<bool> swap(n, false);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) swap[i] = options[i][choice[i]];
        if (check_transfer(from, b, to, c, swap)) return swap;
        std::size_t k = n;
        bool advanced = false;
        while (k-- > 0) {
            if (++choice[k] < options[k].size()) {
                advanced = true;
                break;
            }
            choice[k] = 0;
        }
        if (!advanced) return std::nullopt;
    }
}

}  // namespace netcert
