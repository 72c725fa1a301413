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

#include <unordered_map>
#include <unordered_set>

#include <fmt/core.h>

#include "netcert/certificate.hpp"
#include "netcert/errors.hpp"
#include "netcert/graph_state.hpp"

namespace netcert {

namespace {

class Checker {
public:
    explicit Checker(const Certificate& cert) : cert_(cert), graph_(cert.graph) {}

    Verdict run() {
        if (!check_normalization()) return verdict_;
        if (!check_claims()) return verdict_;
        for (std::size_t i = 0; i < cert_.steps.size(); ++i) {
            if (!std::visit([&](const auto& s) { return check(i, s); }, cert_.steps[i])) return verdict_;
        }
        if (!check_contradiction()) return verdict_;
        if (!check_proof_info()) return verdict_;
        verdict_ = Verdict{true, "", std::nullopt, ""};
        return verdict_;
    }

private:
    bool reject(std::string stage, std::string reason, std::optional<std::size_t> step = std::nullopt) {
        verdict_ = Verdict{false, std::move(stage), step, std::move(reason)};
        return false;
    }

    bool check_normalization() {
        if (cert_.version != Certificate::kVersion) {
            return reject("normalization", fmt::format("unsupported version '{}'", cert_.version));
        }
        try {
            graph_ = cert_.normalization.replay(cert_.graph);
        } catch (const Error& e) {
            return reject("normalization", fmt::format("log does not replay: {}", e.what()));
        }
        const auto label = classify(graph_);
        if (label == CaseLabel::NotApplicable) return reject("normalization", "normalized graph matches no case");
        if (label != cert_.label) {
            return reject("normalization", fmt::format("recorded {} but graph classifies as {}", to_string(cert_.label),
                                                       to_string(label)));
        }
        return true;
    }

    bool check_claims() {
        const auto n = graph_.size();
        for (std::size_t i = 0; i < cert_.claims.size(); ++i) {
            const auto& c = cert_.claims[i];
            if (c.inflation.parties() != n || c.op.size() != 2 * n || c.op.dim() != graph_.dim()) {
                return reject("claims", fmt::format("claim {} does not live on this network", c.id));
            }
            if (claim_id(c.inflation, c.op) != c.id) {
                return reject("claims", fmt::format("claim {} content does not match its id", c.id));
            }
            if (!claims_.emplace(c.id, &c).second) return reject("claims", fmt::format("duplicate claim id {}", c.id));
        }
        return true;
    }

    const Claim* lookup(const ClaimId& id) const {
        auto it = claims_.find(id);
        return it == claims_.end() ? nullptr : it->second;
    }

    // Resolves a premise that must already be established.
    const Claim* premise(std::size_t step, const ClaimId& id) {
        const auto* c = lookup(id);
        if (!c) {
            reject("step", fmt::format("unknown claim {}", id), step);
            return nullptr;
        }
        if (!established_.contains(id)) {
            reject("step", fmt::format("claim {} used before it is established", id), step);
            return nullptr;
        }
        return c;
    }

    const Claim* conclusion(std::size_t step, const ClaimId& id) {
        const auto* c = lookup(id);
        if (!c) reject("step", fmt::format("unknown claim {}", id), step);
        return c;
    }

    bool check(std::size_t i, const BaseStabilizer& s) {
        const auto* c = conclusion(i, s.claim);
        if (!c) return false;
        std::string why;
        auto word = project_to_original(c->inflation, c->op, &why);
        if (!word) return reject("step", "base stabilizer: " + why, i);
        const auto v = expectation(graph_, *word);
        if (!v.in_group) return reject("step", fmt::format("base stabilizer: {} is not in the stabilizer group", word->str()), i);
        if (v.phase_exponent != 0) {
            return reject("step", fmt::format("base stabilizer: <{}> = w^{}, not 1", word->str(), v.phase_exponent), i);
        }
        established_.insert(s.claim);
        return true;
    }

    bool check(std::size_t i, const Fact1Transfer& s) {
        const auto* from = premise(i, s.from);
        if (!from) return false;
        const auto* to = conclusion(i, s.to);
        if (!to) return false;
        std::string why;
        if (!check_transfer(from->inflation, from->op, to->inflation, to->op, s.swap, &why)) {
            return reject("step", "fact1 transfer: " + why, i);
        }
        established_.insert(s.to);
        return true;
    }

    bool check(std::size_t i, const Fact2Combine& s) {
        const auto* p = premise(i, s.premise1);
        if (!p) return false;
        const auto* q = premise(i, s.premise2);
        if (!q) return false;
        const auto* r = conclusion(i, s.conclusion);
        if (!r) return false;
        if (!(p->inflation == q->inflation) || !(p->inflation == r->inflation)) {
            return reject("step", "fact2 combine: premises and conclusion live on different inflations", i);
        }
        if (auto c = pw_commutation_exponent(p->op, q->op); c != 0) {
            return reject("step", fmt::format("fact2 combine: premises do not commute (exponent {})", c), i);
        }
        const auto d = graph_.dim();
        if (!pw_pow(p->op, d).is_identity() || !pw_pow(q->op, d).is_identity()) {
            return reject("step", "fact2 combine: a premise raised to d is not the identity", i);
        }
        if (!(pw_mul(p->op, q->op) == r->op)) {
            return reject("step", "fact2 combine: conclusion is not the product of the premises", i);
        }
        established_.insert(s.conclusion);
        return true;
    }

    bool check(std::size_t i, const PowerLift& s) {
        const auto* b = premise(i, s.base);
        if (!b) return false;
        const auto* r = conclusion(i, s.conclusion);
        if (!r) return false;
        if (s.k == 0) return reject("step", "power lift: exponent must be positive", i);
        if (!(b->inflation == r->inflation)) return reject("step", "power lift: inflation changed", i);
        if (!(pw_pow(b->op, s.k) == r->op)) return reject("step", fmt::format("power lift: conclusion is not the {}-th power", s.k), i);
        established_.insert(s.conclusion);
        return true;
    }

    bool check_power_family(const std::vector<ClaimId>& ids, const char* name, const Inflation*& inflation,
                            PauliWord& generator) {
        const auto d = graph_.dim();
        if (ids.size() != d - 1) {
            return reject("contradiction", fmt::format("{} lists {} claims, expected {}", name, ids.size(), d - 1));
        }
        for (std::size_t k = 1; k <= ids.size(); ++k) {
            const auto* c = lookup(ids[k - 1]);
            if (!c) return reject("contradiction", fmt::format("{}[{}]: unknown claim {}", name, k, ids[k - 1]));
            if (!established_.contains(c->id)) {
                return reject("contradiction", fmt::format("{}[{}]: claim {} is never established", name, k, c->id));
            }
            if (!inflation) inflation = &c->inflation;
            if (!(c->inflation == *inflation)) {
                return reject("contradiction", fmt::format("{}[{}]: claim is on a different inflation", name, k));
            }
            if (k == 1) {
                generator = c->op;
            } else if (!(pw_pow(generator, k) == c->op)) {
                return reject("contradiction", fmt::format("{}[{}]: operator is not the {}-th power", name, k, k));
            }
        }
        if (!pw_pow(generator, d).is_identity()) {
            return reject("contradiction", fmt::format("{} raised to d is not the identity", name));
        }
        return true;
    }

    bool check_contradiction() {
        const auto& c = cert_.contradiction;
        const Inflation* inflation = nullptr;
        PauliWord a1, a2;
        if (!check_power_family(c.a1_claims, "a1_claims", inflation, a1)) return false;
        if (!check_power_family(c.a2_claims, "a2_claims", inflation, a2)) return false;
        const auto q = pw_commutation_exponent(a1, a2);
        if (q != c.comm_exponent) {
            return reject("contradiction", fmt::format("recorded commutation exponent {} but operators give {}", c.comm_exponent, q));
        }
        if (q == 0) return reject("contradiction", "A1 and A2 commute; the inequality does not apply");
        // 2d > d + sqrt(d)  <=>  d^2 > d.
        const std::uint64_t d = graph_.dim();
        if (!(d * d > d)) return reject("contradiction", "2d does not exceed d + sqrt(d)");
        return true;
    }

    bool check_proof_info() {
        const auto& p = cert_.proof;
        int expected_part = cert_.label == CaseLabel::Case3 ? 2 : cert_.label == CaseLabel::Case4 ? 3 : 1;
        if (p.part != expected_part) return reject("proof", fmt::format("part {} recorded for {}", p.part, to_string(cert_.label)));
        if (p.q_overlap != q_overlap(graph_, cert_.label)) return reject("proof", "q_overlap does not match the graph");
        const bool rule_ok = p.part == 3 ? (p.m_rule == "literal" || p.m_rule == "inverse") : p.m_rule == "none";
        if (!rule_ok) return reject("proof", fmt::format("m_rule '{}' invalid for part {}", p.m_rule, p.part));
        return true;
    }

    const Certificate& cert_;
    Multigraph graph_;
    std::unordered_map<ClaimId, const Claim*> claims_;
    std::unordered_set<ClaimId> established_;
    Verdict verdict_;
};

}  // namespace

Verdict verify_certificate(const Certificate& cert) {
    try {
        return Checker(cert).run();
    } catch (const Error& e) {
        return Verdict{false, "internal", std::nullopt, e.what()};
    }
}

}  // namespace netcert
