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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "netcert/certificate.hpp"
#include "netcert/errors.hpp"
#include "netcert/graph_state.hpp"
#include "oracles.hpp"

using namespace netcert;

namespace {

Multigraph triangle() { return parse_graph(oracle::read_data("triangle.graph")); }

PauliWord reg(std::uint32_t d, std::size_t n, std::vector<std::pair<Party, SiteExponent>> factors) {
    std::vector<SiteExponent> s(2 * n);
    for (const auto& [p, e] : factors) s[inflation_site(n, p)] = e;
    return PauliWord(d, 0, s);
}

constexpr Copy U = Copy::Unprimed;
constexpr Copy P = Copy::Primed;

struct Draft {
    Certificate cert;

    const ClaimId& add(const Inflation& inf, const PauliWord& op) {
        const auto id = claim_id(inf, op);
        if (const auto* c = cert.find_claim(id)) return c->id;
        cert.claims.push_back({id, inf, op});
        return cert.claims.back().id;
    }
};

// The qutrit triangle derivation from the worked example, written out step
// by step without the builder.
Certificate hand_triangle() {
    const auto g = triangle();
    const auto norm = normalize(g);
    Draft dr;
    dr.cert.graph = g;
    dr.cert.normalization = norm.log;
    dr.cert.label = norm.label;

    const Inflation i1(3, {0}), i0(3, {});
    const auto g3 = reg(3, 3, {{{0, U}, {0, 1}}, {{2, U}, {1, 0}}});
    const auto g3sq = pw_pow(g3, 2);
    const auto x2x3 = reg(3, 3, {{{1, U}, {1, 0}}, {{2, U}, {1, 0}}});
    const auto g2 = pw_mul(x2x3, g3sq);
    const auto g2moved = move_to_primed(g2, 1);
    const auto g1 = reg(3, 3, {{{0, U}, {1, 0}}, {{1, U}, {0, 2}}, {{2, U}, {0, 1}}});

    const auto c_g3 = dr.add(i1, g3);
    const auto c_g3sq = dr.add(i1, g3sq);
    const auto c_x2x3 = dr.add(i1, x2x3);
    const auto c_g2 = dr.add(i1, g2);
    const auto c_a2 = dr.add(i0, g2moved);
    const auto c_a2sq = dr.add(i0, pw_pow(g2moved, 2));
    const auto c_g1 = dr.add(i0, g1);
    const auto c_g1sq = dr.add(i0, pw_pow(g1, 2));

    auto& s = dr.cert.steps;
    s.push_back(BaseStabilizer{c_g3});
    s.push_back(PowerLift{c_g3, 2, c_g3sq});
    s.push_back(BaseStabilizer{c_x2x3});
    s.push_back(Fact2Combine{c_x2x3, c_g3sq, c_g2});
    s.push_back(Fact1Transfer{c_g2, c_a2, {false, true, false}});
    s.push_back(BaseStabilizer{c_g1});
    s.push_back(PowerLift{c_g1, 2, c_g1sq});
    s.push_back(PowerLift{c_a2, 2, c_a2sq});
    dr.cert.contradiction = {{c_g1, c_g1sq}, {c_a2, c_a2sq}, pw_commutation_exponent(g1, g2moved)};
    dr.cert.proof = {1, 1, "none"};
    return dr.cert;
}

// Changes one claim's operator, renames it and follows every reference.
Certificate replace_claim(Certificate cert, std::size_t index, const PauliWord& op) {
    const auto old_id = cert.claims[index].id;
    const auto new_id = claim_id(cert.claims[index].inflation, op);
    cert.claims[index].op = op;
    cert.claims[index].id = new_id;
    auto fix = [&](ClaimId& id) {
        if (id == old_id) id = new_id;
    };
    for (auto& step : cert.steps) {
        std::visit(
            [&](auto& st) {
                using S = std::decay_t<decltype(st)>;
                if constexpr (std::is_same_v<S, BaseStabilizer>) fix(st.claim);
                if constexpr (std::is_same_v<S, Fact1Transfer>) fix(st.from), fix(st.to);
                if constexpr (std::is_same_v<S, Fact2Combine>) fix(st.premise1), fix(st.premise2), fix(st.conclusion);
                if constexpr (std::is_same_v<S, PowerLift>) fix(st.base), fix(st.conclusion);
            },
            step);
    }
    for (auto& id : cert.contradiction.a1_claims) fix(id);
    for (auto& id : cert.contradiction.a2_claims) fix(id);
    return cert;
}

std::size_t count_steps(const Certificate& c, std::size_t variant_index) {
    return static_cast<std::size_t>(
        std::count_if(c.steps.begin(), c.steps.end(), [&](const CertStep& s) { return s.index() == variant_index; }));
}

}  // namespace

TEST(Certificate, BoundAndLhs) {
    Certificate c;
    c.graph = Multigraph(3, 3);
    EXPECT_EQ(c.lhs(), 6u);
    EXPECT_NEAR(c.bound(), 3 + std::sqrt(3.0), 1e-12);
    c.graph = Multigraph(5, 3);
    EXPECT_EQ(c.lhs(), 10u);
}

TEST(Certificate, ClaimIdIsContentAddressed) {
    const Inflation a(3, {0}), b(3, {});
    const auto op = reg(3, 3, {{{1, U}, {1, 0}}});
    EXPECT_EQ(claim_id(a, op), claim_id(Inflation(3, {0}), op));
    EXPECT_NE(claim_id(a, op), claim_id(b, op));
    EXPECT_NE(claim_id(a, op), claim_id(a, op.with_phase(1)));
    EXPECT_NE(claim_id(a, op), claim_id(a, move_to_primed(op, 1)));
    EXPECT_EQ(claim_id(a, op).size(), 17u);
    EXPECT_EQ(claim_id(a, op)[0], 'c');
}

TEST(Certificate, HandBuiltTriangleIsAccepted) {
    const auto cert = hand_triangle();
    EXPECT_EQ(cert.label, CaseLabel::Case1);
    const auto v = verify_certificate(cert);
    EXPECT_TRUE(v.accepted) << v.describe();
    EXPECT_EQ(cert.contradiction.comm_exponent, 1u);
    // The fact1 conclusion is Z1^2 X2'.
    const auto* a2 = cert.find_claim(cert.contradiction.a2_claims[0]);
    ASSERT_NE(a2, nullptr);
    EXPECT_EQ(a2->op, reg(3, 3, {{{0, U}, {0, 2}}, {{1, P}, {1, 0}}}));
    // Its square carries Z1 X2'^2, the mirrored claim.
    const auto* a2sq = cert.find_claim(cert.contradiction.a2_claims[1]);
    ASSERT_NE(a2sq, nullptr);
    EXPECT_EQ(a2sq->op.site(0), (SiteExponent{0, 1}));
    EXPECT_EQ(a2sq->op.site(4), (SiteExponent{2, 0}));
}

TEST(Certificate, TriangleBuilder) {
    const auto cert = prove(triangle());
    const auto v = verify_certificate(cert);
    ASSERT_TRUE(v.accepted) << v.describe();
    EXPECT_EQ(cert.lhs(), 6u);
    EXPECT_NEAR(cert.bound(), 3 + std::sqrt(3.0), 1e-9);
    EXPECT_GT(static_cast<double>(cert.lhs()), cert.bound());
    EXPECT_EQ(cert.proof.part, 1);
    EXPECT_EQ(cert.contradiction.a1_claims.size(), 2u);
    EXPECT_EQ(cert.contradiction.a2_claims.size(), 2u);
    EXPECT_NE(cert.contradiction.comm_exponent, 0u);
}

TEST(Certificate, StarGraphSingleTransferOfG1) {
    const auto g = parse_graph(oracle::read_data("star.graph"));
    const auto cert = prove(g);
    ASSERT_TRUE(verify_certificate(cert).accepted);
    EXPECT_EQ(cert.label, CaseLabel::Case1);
    EXPECT_EQ(cert.proof.q_overlap, 1u);
    const auto normalized = cert.normalization.replay(g);
    const auto g1 = embed_unprimed(generator(normalized, kVertex1));
    std::size_t transfers = 0;
    for (const auto& s : cert.steps) {
        if (const auto* f = std::get_if<Fact1Transfer>(&s)) {
            const auto* from = cert.find_claim(f->from);
            ASSERT_NE(from, nullptr);
            if (from->op == g1) {
                EXPECT_TRUE(from->inflation.t_set().empty());
                ++transfers;
            }
        }
    }
    EXPECT_EQ(transfers, 1u);
}

TEST(Certificate, Case3StepPattern) {
    const auto g = parse_graph(oracle::read_data("case3.graph"));
    ASSERT_EQ(classify(g), CaseLabel::Case3);
    const auto cert = prove(g);
    const auto v = verify_certificate(cert);
    ASSERT_TRUE(v.accepted) << v.describe();
    EXPECT_EQ(cert.proof.part, 2);
    EXPECT_EQ(count_steps(cert, 0), 3u);  // base
    EXPECT_EQ(count_steps(cert, 1), 1u);  // fact1
    EXPECT_EQ(count_steps(cert, 2), 1u);  // fact2
    EXPECT_EQ(count_steps(cert, 3), 2u);  // power, k = 2 for both operators
    const auto* a1 = cert.find_claim(cert.contradiction.a1_claims[0]);
    ASSERT_NE(a1, nullptr);
    // T_0 = N2 \ {1, n} with n = 3 here.
    EXPECT_TRUE(a1->inflation.t_set().empty());
}

TEST(Certificate, Case4RecordsMRule) {
    // Same graph as the Case 4 classification example.
    Multigraph g(3, 5);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3}}) {
        g.set_weight(u, v, 1);
    }
    ASSERT_EQ(classify(g), CaseLabel::Case4);
    const auto cert = build_certificate(g, CaseLabel::Case4);
    EXPECT_TRUE(verify_certificate(cert).accepted);
    EXPECT_EQ(cert.proof.part, 3);
    EXPECT_TRUE(cert.proof.m_rule == "literal" || cert.proof.m_rule == "inverse");
}

TEST(Certificate, CaseMismatch) {
    EXPECT_THROW(build_certificate(triangle(), CaseLabel::Case3), CaseMismatch);
    EXPECT_THROW(build_certificate(triangle(), CaseLabel::NotApplicable), CaseMismatch);
    EXPECT_THROW(prove(parse_graph(oracle::read_data("two_vertex.graph"))), PreconditionFailed);
}

TEST(CertificateTamper, PhaseOnBaseClaim) {
    const auto cert = hand_triangle();
    // Claim 0 is g3, established by step 0.
    const auto bad = replace_claim(cert, 0, cert.claims[0].op.with_phase(1));
    const auto v = verify_certificate(bad);
    EXPECT_FALSE(v.accepted);
    EXPECT_EQ(v.stage, "step");
    EXPECT_EQ(v.step, 0u);

    const auto built = prove(triangle());
    for (std::size_t i = 0; i < built.steps.size(); ++i) {
        const auto* b = std::get_if<BaseStabilizer>(&built.steps[i]);
        if (!b) continue;
        const auto idx = static_cast<std::size_t>(built.find_claim(b->claim) - built.claims.data());
        const auto t = replace_claim(built, idx, built.claims[idx].op.with_phase(1));
        const auto tv = verify_certificate(t);
        EXPECT_FALSE(tv.accepted);
        EXPECT_EQ(tv.stage, "step");
        EXPECT_EQ(tv.step, i);
    }
}

TEST(CertificateTamper, CommutingContradiction) {
    auto cert = hand_triangle();
    cert.contradiction.a2_claims = cert.contradiction.a1_claims;
    cert.contradiction.comm_exponent = 0;
    auto v = verify_certificate(cert);
    EXPECT_FALSE(v.accepted);
    EXPECT_EQ(v.stage, "contradiction");
    // Recording a nonzero exponent does not help.
    cert.contradiction.comm_exponent = 1;
    v = verify_certificate(cert);
    EXPECT_FALSE(v.accepted);
    EXPECT_EQ(v.stage, "contradiction");
}

TEST(CertificateTamper, WrongCommExponent) {
    auto cert = hand_triangle();
    cert.contradiction.comm_exponent = 2;
    EXPECT_FALSE(verify_certificate(cert).accepted);
}

TEST(CertificateTamper, Fact2RejectsNonCommutingPremises) {
    // g1 and Z1^2 X2' are both established on I0 but do not commute.
    const auto base = hand_triangle();
    const Inflation i0(3, {});
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            auto cert = base;
            const auto* p = cert.find_claim(cert.contradiction.a1_claims[a]);
            const auto* q = cert.find_claim(cert.contradiction.a2_claims[b]);
            ASSERT_NE(pw_commutation_exponent(p->op, q->op), 0u);
            const auto prod = pw_mul(p->op, q->op);
            const auto pid = p->id, qid = q->id, cid = claim_id(i0, prod);
            cert.claims.push_back({cid, i0, prod});
            cert.steps.push_back(Fact2Combine{pid, qid, cid});
            const auto v = verify_certificate(cert);
            EXPECT_FALSE(v.accepted);
            EXPECT_EQ(v.stage, "step");
            EXPECT_EQ(v.step, cert.steps.size() - 1);
        }
    }
}

TEST(CertificateTamper, UnestablishedPremise) {
    auto cert = hand_triangle();
    // Drop the base step for g3: the power lift now uses an unproven claim.
    cert.steps.erase(cert.steps.begin());
    const auto v = verify_certificate(cert);
    EXPECT_FALSE(v.accepted);
    EXPECT_EQ(v.step, 0u);
}

TEST(CertificateTamper, TransferWithoutSwap) {
    auto cert = hand_triangle();
    std::get<Fact1Transfer>(cert.steps[4]).swap = {false, false, false};
    const auto v = verify_certificate(cert);
    EXPECT_FALSE(v.accepted);
    EXPECT_EQ(v.step, 4u);
}

TEST(CertificateTamper, LabelAndVersion) {
    auto cert = hand_triangle();
    cert.label = CaseLabel::Case2;
    EXPECT_EQ(verify_certificate(cert).stage, "normalization");
    cert = hand_triangle();
    cert.version = "2";
    EXPECT_FALSE(verify_certificate(cert).accepted);
    cert = hand_triangle();
    cert.proof.part = 2;
    EXPECT_EQ(verify_certificate(cert).stage, "proof");
}

TEST(CertificateSoundness, BaseClaimsHoldOnDenseState) {
    // Every base claim, mapped back to the original network, is a +1
    // observable of the dense graph state.
    std::size_t checked = 0;
    for (std::size_t n = 3; n <= 4; ++n) {
        oracle::for_each_graph(3, n, [&](const Multigraph& g) {
            if (!check_preconditions(g)) return;
            const auto cert = prove(g);
            const auto normalized = cert.normalization.replay(g);
            const auto psi = oracle::graph_state(normalized);
            for (const auto& s : cert.steps) {
                const auto* b = std::get_if<BaseStabilizer>(&s);
                if (!b) continue;
                const auto* c = cert.find_claim(b->claim);
                ASSERT_NE(c, nullptr);
                const auto w = project_to_original(c->inflation, c->op);
                ASSERT_TRUE(w);
                const auto e = oracle::expectation(psi, *w);
                ASSERT_NEAR(e.real(), 1.0, 1e-10) << format_graph(g);
                ASSERT_NEAR(e.imag(), 0.0, 1e-10);
                ++checked;
            }
        });
    }
    EXPECT_GT(checked, 1000u);
}
