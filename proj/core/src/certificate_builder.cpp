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

#include <algorithm>
#include <unordered_set>

#include <fmt/core.h>
#include <fmt/ranges.h>

#include "netcert/certificate.hpp"
#include "netcert/errors.hpp"
#include "netcert/graph_state.hpp"
#include "netcert/zmod.hpp"

namespace netcert {

namespace {

class Builder {
public:
    explicit Builder(const Multigraph& g) : g_(g), d_(g.dim()), n_(g.size()) {}

    /// g_i^k on the unprimed half of the register.
    PauliWord gen(std::size_t i, std::uint32_t k = 1) const { return pw_pow(generator(g_, i), k % d_); }

    Inflation inflation(std::vector<std::size_t> t) const { return Inflation(n_, std::move(t)); }

    ClaimId base(const Inflation& inf, const PauliWord& word) {
        auto op = word.size() == n_ ? embed_unprimed(word) : word;
        auto id = add_claim(inf, op);
        if (established_.insert(id).second) cert_.steps.emplace_back(BaseStabilizer{id});
        return id;
    }

    ClaimId fact1(const ClaimId& from, const Inflation& to, const PauliWord& op) {
        const auto& src = claim(from);
        auto swap = find_transfer(src.inflation, src.op, to, op);
        if (!swap) {
            throw InternalCheckFailed(fmt::format("builder: no isomorphism carries {} to T={}", src.op.str(),
                                                  fmt::join(to.t_set(), ",")));
        }
        auto id = add_claim(to, op);
        if (established_.insert(id).second) cert_.steps.emplace_back(Fact1Transfer{from, id, std::move(*swap)});
        return id;
    }

    ClaimId fact2(const ClaimId& p, const ClaimId& q) {
        const auto& a = claim(p);
        auto op = pw_mul(a.op, claim(q).op);
        auto id = add_claim(a.inflation, op);
        if (established_.insert(id).second) cert_.steps.emplace_back(Fact2Combine{p, q, id});
        return id;
    }

    std::vector<ClaimId> powers(const ClaimId& base_id) {
        std::vector<ClaimId> out{base_id};
        for (std::uint32_t k = 2; k < d_; ++k) {
            const auto& b = claim(base_id);
            auto id = add_claim(b.inflation, pw_pow(b.op, k));
            if (established_.insert(id).second) cert_.steps.emplace_back(PowerLift{base_id, k, id});
            out.push_back(id);
        }
        return out;
    }

    void contradiction(const ClaimId& a1, const ClaimId& a2) {
        cert_.contradiction.comm_exponent = pw_commutation_exponent(claim(a1).op, claim(a2).op);
        cert_.contradiction.a1_claims = powers(a1);
        cert_.contradiction.a2_claims = powers(a2);
    }

    const Claim& claim(const ClaimId& id) const {
        const auto* c = cert_.find_claim(id);
        if (!c) throw InternalCheckFailed("builder: dangling claim " + id);
        return *c;
    }

    Certificate take() { return std::move(cert_); }

    const Multigraph& g_;
    const std::uint32_t d_;
    const std::size_t n_;

private:
    ClaimId add_claim(const Inflation& inf, const PauliWord& op) {
        auto id = claim_id(inf, op);
        if (!cert_.find_claim(id)) cert_.claims.push_back(Claim{id, inf, op});
        return id;
    }

    Certificate cert_;
    std::unordered_set<ClaimId> established_;
};

std::vector<std::size_t> set_difference(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Part 1: Cases 1 and 2.
void build_part1(Builder& b) {
    const auto& g = b.g_;
    const auto d = b.d_;
    const auto common = common_neighbors(g);
    const auto n1 = neighborhood(g, kVertex1).members;
    const auto n2 = neighborhood(g, kVertex2).members;

    // T_0 = (N1 \ (N2 u {2})) u {1}.
    auto n2_and_2 = n2;
    n2_and_2.push_back(kVertex2);
    std::sort(n2_and_2.begin(), n2_and_2.end());
    auto t0 = set_difference(n1, n2_and_2);
    const auto exclusive = t0;
    t0.push_back(kVertex1);
    const auto i0 = b.inflation(t0);

    // <g1> on I_q (T empty), then add the common neighbours back one at a
    // time, largest first: T_j = {n_j, ..., n_{q-1}}.
    const auto g12 = g.weight(kVertex1, kVertex2);
    std::vector<std::size_t> t;
    auto cur = b.base(b.inflation({}), b.gen(kVertex1));
    for (auto it = common.rbegin(); it != common.rend(); ++it) {
        const auto n = *it;
        const auto lower = b.inflation(t);
        t.push_back(n);
        std::sort(t.begin(), t.end());
        const auto upper = b.inflation(t);

        std::optional<std::size_t> witness;
        for (std::size_t i = 0; i < g.size() && !witness; ++i) {
            if (i == kVertex2 || i == n) continue;
            if ((g.weight(kVertex2, i) != 0) != (g.weight(n, i) != 0)) witness = i;
        }
        if (!witness) throw InternalCheckFailed(fmt::format("builder: vertex {} has no witness site", n + 1));
        const auto i = *witness;

        if (g.weight(kVertex2, i) == 0) {
            // g_i has no factor on 2, Z^{gamma_in} on n.
            const auto l = mod_mul(mod_neg(g.weight(kVertex1, n), d), mod_inv(g.weight(i, n), d), d);
            auto gil = b.base(lower, b.gen(i, l));
            auto prod = b.fact2(cur, gil);
            auto moved = b.fact1(prod, upper, b.claim(prod).op);
            auto inv = b.base(upper, b.gen(i, d - l));
            cur = b.fact2(moved, inv);
        } else {
            // g_i has Z^{gamma_2i} on 2 and nothing on n.
            const auto l = mod_mul(mod_neg(g12, d), mod_inv(g.weight(kVertex2, i), d), d);
            const auto h = pw_mul(b.gen(kVertex1), b.gen(i, l));
            auto hinv = b.base(lower, pw_inverse(h));
            auto rest = b.fact2(cur, hinv);
            auto moved = b.fact1(rest, upper, b.claim(rest).op);
            auto hid = b.base(upper, h);
            cur = b.fact2(moved, hid);
        }
    }
    // g~1: the Z on 2 moves to 2'.
    auto g1_tilde = b.fact1(cur, i0, move_to_primed(b.claim(cur).op, kVertex2));

    // g2 via T_{-1} = {1} and a witness i in N1 \ (N2 u {2}).
    if (exclusive.empty()) throw InternalCheckFailed("builder: N1 \\ (N2 u {2}) is empty");
    const auto i = exclusive.front();
    const auto l = mod_mul(mod_neg(g12, d), mod_inv(g.weight(kVertex1, i), d), d);
    const auto im1 = b.inflation({kVertex1});
    auto a = b.base(im1, b.gen(i, d - l));
    auto c = b.base(im1, pw_mul(b.gen(kVertex2), b.gen(i, l)));
    auto g2 = b.fact2(a, c);
    auto g2_0 = b.fact1(g2, i0, b.claim(g2).op);
    b.contradiction(g1_tilde, g2_0);
}

// Part 2: Case 3, N1 & N2 = {n}.
void build_part2(Builder& b) {
    const auto& g = b.g_;
    const auto d = b.d_;
    const auto n = common_neighbors(g).front();
    const auto g1n = g.weight(kVertex1, n);
    const auto l = mod_mul(mod_neg(g.weight(kVertex1, kVertex2), d), mod_inv(g1n, d), d);
    const auto m = mod_mul(g.weight(kVertex2, n), mod_inv(g1n, d), d);

    std::vector<std::size_t> t0;
    for (auto j : neighborhood(g, kVertex2).members) {
        if (j != kVertex1 && j != n) t0.push_back(j);
    }
    const auto i0 = b.inflation(t0);
    const auto i1 = b.inflation({n});

    auto p = b.base(i1, pw_mul(b.gen(kVertex1, d - m), b.gen(kVertex2)));
    auto q = b.base(i1, pw_mul(b.gen(kVertex1, m), b.gen(n, l)));
    auto s1 = b.fact2(p, q);
    auto s = b.fact1(s1, i0, move_to_primed(b.claim(s1).op, kVertex2));
    auto g1 = b.base(i0, b.gen(kVertex1));
    b.contradiction(s, g1);
}

// Part 3: Case 4, with the given m.
void build_part3(Builder& b, std::size_t n, std::uint32_t a_n, std::uint32_t m) {
    const auto& g = b.g_;
    const auto d = b.d_;
    const auto l = mod_mul(a_n, g.weight(kVertex2, n), d);
    const auto i0 = b.inflation({});
    const auto i1 = b.inflation({n});

    auto p = b.base(i1, pw_mul(b.gen(kVertex1, m), b.gen(kVertex2)));
    auto q = b.base(i1, pw_mul(b.gen(kVertex1, d - m), b.gen(n, l)));
    auto s1 = b.fact2(p, q);
    auto s = b.fact1(s1, i0, move_to_primed(b.claim(s1).op, kVertex2));
    auto g1 = b.base(i0, b.gen(kVertex1));
    b.contradiction(s, g1);
}

Certificate finish(Builder& b, const Multigraph& input, const TransformLog& log, CaseLabel label, ProofInfo info) {
    auto cert = b.take();
    cert.graph = input;
    cert.normalization = log;
    cert.label = label;
    cert.proof = std::move(info);
    return cert;
}

Certificate build(const Multigraph& input, const Multigraph& g, const TransformLog& log, CaseLabel label) {
    const auto actual = classify(g);
    if (label == CaseLabel::NotApplicable || actual != label) {
        throw CaseMismatch(fmt::format("graph classifies as {}, not {}", to_string(actual), to_string(label)));
    }
    const auto overlap = q_overlap(g, label);
    if (label == CaseLabel::Case1 || label == CaseLabel::Case2 || label == CaseLabel::Case3) {
        Builder b(g);
        label == CaseLabel::Case3 ? build_part2(b) : build_part1(b);
        auto cert = finish(b, input, log, label, ProofInfo{label == CaseLabel::Case3 ? 2 : 1, overlap, "none"});
        if (auto v = verify_certificate(cert); !v.accepted) {
            throw InternalCheckFailed("builder emitted a certificate the checker rejects: " + v.describe());
        }
        return cert;
    }

    // Case 4: smallest twin with a multiplier; the m formula is checked
    // mechanically, literal reading first.
    std::size_t n = 0;
    std::uint32_t a_n = 0;
    for (auto c : common_neighbors(g)) {
        if (!twin_condition(g, c)) continue;
        if (auto a = case4_multiplier(g, c)) {
            n = c;
            a_n = *a;
            break;
        }
    }
    const auto d = g.dim();
    const auto g2n = g.weight(kVertex2, n);
    const auto g1n = g.weight(kVertex1, n);
    const std::pair<const char*, std::uint32_t> candidates[] = {
        {"literal", mod_neg(mod_mul(g2n, g1n, d), d)},
        {"inverse", mod_neg(mod_mul(g2n, mod_inv(g1n, d), d), d)},
    };
    std::string reasons;
    for (const auto& [rule, m] : candidates) {
        Builder b(g);
        try {
            build_part3(b, n, a_n, m);
        } catch (const InternalCheckFailed& e) {
            reasons += fmt::format("\n  m {} = {}: {}", rule, m, e.what());
            continue;
        }
        auto cert = finish(b, input, log, label, ProofInfo{3, overlap, rule});
        auto v = verify_certificate(cert);
        if (v.accepted) return cert;
        reasons += fmt::format("\n  m {} = {}: {}", rule, m, v.describe());
    }
    throw InternalCheckFailed("builder: no m candidate yields an accepted Case4 certificate" + reasons);
}

}  // namespace

Certificate build_certificate(const Multigraph& normalized, CaseLabel label) {
    return build(normalized, normalized, TransformLog{}, label);
}

Certificate build_certificate(const Multigraph& input, const NormalizationResult& norm) {
    if (!(norm.log.replay(input) == norm.graph)) throw InvalidArgument("normalization log does not replay to its graph");
    return build(input, norm.graph, norm.log, norm.label);
}

Certificate prove(const Multigraph& input) { return build_certificate(input, normalize(input)); }

}  // namespace netcert
