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

#include "netcert/certificate_io.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/core.h>

#include "netcert/errors.hpp"
#include "netcert/zmod.hpp"

namespace netcert {

namespace {

Json claim_list(const std::vector<ClaimId>& ids) {
    Json out = Json::array();
    for (const auto& id : ids) out.push_back(id);
    return out;
}

Json operator_to_json(const PauliWord& op) {
    const auto n = op.size() / 2;
    Json sites = Json::array();
    // Party-major, unprimed before primed.
    for (std::size_t i = 0; i < n; ++i) {
        for (auto copy : {Copy::Unprimed, Copy::Primed}) {
            const auto& e = op.site(inflation_site(n, {i, copy}));
            if (e.is_identity()) continue;
            sites.push_back(Json{{"party", i + 1}, {"copy", copy == Copy::Unprimed ? "u" : "p"}, {"x", e.x}, {"z", e.z}});
        }
    }
    return Json{{"phase", op.phase()}, {"sites", std::move(sites)}};
}

struct StepToJson {
    Json operator()(const BaseStabilizer& s) const { return Json{{"type", "base"}, {"claim", s.claim}}; }
    Json operator()(const Fact1Transfer& s) const {
        Json swap = Json::array();
        for (std::size_t i = 0; i < s.swap.size(); ++i) {
            if (s.swap[i]) swap.push_back(i + 1);
        }
        return Json{{"type", "fact1"}, {"from", s.from}, {"to", s.to}, {"swap", std::move(swap)}};
    }
    Json operator()(const Fact2Combine& s) const {
        return Json{{"type", "fact2"}, {"premises", Json::array({s.premise1, s.premise2})}, {"conclusion", s.conclusion}};
    }
    Json operator()(const PowerLift& s) const {
        return Json{{"type", "power"}, {"base", s.base}, {"k", s.k}, {"conclusion", s.conclusion}};
    }
};

// Strict reader that tracks the JSON pointer of the value it looks at.
class Reader {
public:
    Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

    [[noreturn]] void fail(const std::string& what) const { throw SchemaError(path_.empty() ? "/" : path_, what); }

    const std::string& path() const { return path_; }

    Reader at(std::string_view key) const {
        if (!j_.is_object()) fail("expected an object");
        auto it = j_.find(std::string(key));
        if (it == j_.end()) throw SchemaError(path_ + "/" + std::string(key), "missing field");
        return Reader(*it, path_ + "/" + std::string(key));
    }

    Reader at(std::size_t i) const { return Reader(j_.at(i), path_ + "/" + std::to_string(i)); }

    void expect_keys(std::initializer_list<std::string_view> keys) const {
        if (!j_.is_object()) fail("expected an object");
        for (const auto& [k, v] : j_.items()) {
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
                throw SchemaError(path_ + "/" + k, "unknown field");
            }
        }
    }

    std::size_t array_size() const {
        if (!j_.is_array()) fail("expected an array");
        return j_.size();
    }

    std::uint64_t uint(std::uint64_t lo, std::uint64_t hi) const {
        if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<std::int64_t>() >= 0)) {
            fail("expected a non-negative integer");
        }
        auto v = j_.get<std::uint64_t>();
        if (v < lo || v > hi) fail(fmt::format("value {} outside [{}, {}]", v, lo, hi));
        return v;
    }

    double number() const {
        if (!j_.is_number()) fail("expected a number");
        return j_.get<double>();
    }

    std::string string() const {
        if (!j_.is_string()) fail("expected a string");
        return j_.get<std::string>();
    }

    std::vector<ClaimId> ids() const {
        std::vector<ClaimId> out;
        const auto n = array_size();
        for (std::size_t i = 0; i < n; ++i) out.push_back(at(i).string());
        return out;
    }

private:
    const Json& j_;
    std::string path_;
};

PauliWord operator_from_json(const Reader& r, std::uint32_t d, std::size_t n) {
    r.expect_keys({"phase", "sites"});
    const auto phase = r.at("phase").uint(0, d - 1);
    std::vector<SiteExponent> sites(2 * n);
    std::vector<bool> seen(2 * n, false);
    const auto sr = r.at("sites");
    const auto count = sr.array_size();
    for (std::size_t k = 0; k < count; ++k) {
        const auto s = sr.at(k);
        s.expect_keys({"party", "copy", "x", "z"});
        const auto party = s.at("party").uint(1, n) - 1;
        const auto copy_text = s.at("copy").string();
        if (copy_text != "u" && copy_text != "p") s.at("copy").fail("copy must be \"u\" or \"p\"");
        const auto site = inflation_site(n, {party, copy_text == "u" ? Copy::Unprimed : Copy::Primed});
        if (seen[site]) s.fail("site listed twice");
        seen[site] = true;
        sites[site] = SiteExponent{static_cast<std::uint32_t>(s.at("x").uint(0, d - 1)),
                                   static_cast<std::uint32_t>(s.at("z").uint(0, d - 1))};
        if (sites[site].is_identity()) s.fail("identity factors are omitted, not listed");
    }
    return PauliWord(d, static_cast<std::int64_t>(phase), std::move(sites));
}

CertStep step_from_json(const Reader& r, std::size_t n) {
    const auto type = r.at("type").string();
    if (type == "base") {
        r.expect_keys({"type", "claim"});
        return BaseStabilizer{r.at("claim").string()};
    }
    if (type == "fact1") {
        r.expect_keys({"type", "from", "to", "swap"});
        std::vector<bool> swap(n, false);
        const auto sr = r.at("swap");
        const auto count = sr.array_size();
        for (std::size_t k = 0; k < count; ++k) {
            const auto p = sr.at(k).uint(1, n) - 1;
            if (swap[p]) sr.at(k).fail("party listed twice");
            swap[p] = true;
        }
        return Fact1Transfer{r.at("from").string(), r.at("to").string(), std::move(swap)};
    }
    if (type == "fact2") {
        r.expect_keys({"type", "premises", "conclusion"});
        const auto p = r.at("premises");
        if (p.array_size() != 2) p.fail("fact2 takes exactly two premises");
        return Fact2Combine{p.at(0).string(), p.at(1).string(), r.at("conclusion").string()};
    }
    if (type == "power") {
        r.expect_keys({"type", "base", "k", "conclusion"});
        return PowerLift{r.at("base").string(), r.at("k").uint(1, UINT32_MAX), r.at("conclusion").string()};
    }
    r.at("type").fail(fmt::format("unknown step type '{}'", type));
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
    const auto n = cert.graph.size();
    Json graph = Json::array();
    for (const auto& e : cert.graph.edges()) graph.push_back(Json::array({e.u + 1, e.v + 1, e.weight}));

    Json norm_steps = Json::array();
    for (const auto& s : cert.normalization.steps) {
        if (const auto* r = std::get_if<RelabelStep>(&s)) {
            Json perm = Json::array();
            for (auto p : r->perm) perm.push_back(p + 1);
            norm_steps.push_back(Json{{"type", "relabel"}, {"perm", std::move(perm)}});
        } else {
            const auto& lc = std::get<LocalComplementStep>(s);
            norm_steps.push_back(Json{{"type", "local_complement"}, {"pivot", lc.pivot + 1}, {"a", lc.a}});
        }
    }

    Json claims = Json::array();
    for (const auto& c : cert.claims) {
        Json t = Json::array();
        for (auto i : c.inflation.t_set()) t.push_back(i + 1);
        claims.push_back(Json{{"id", c.id}, {"T", std::move(t)}, {"operator", operator_to_json(c.op)}});
    }

    Json steps = Json::array();
    for (const auto& s : cert.steps) steps.push_back(std::visit(StepToJson{}, s));

    return Json{
        {"version", cert.version},
        {"d", cert.dim()},
        {"n", n},
        {"graph", std::move(graph)},
        {"normalization", Json{{"steps", std::move(norm_steps)}, {"case", std::string(to_string(cert.label))}}},
        {"claims", std::move(claims)},
        {"steps", std::move(steps)},
        {"contradiction", Json{{"a1_claims", claim_list(cert.contradiction.a1_claims)},
                               {"a2_claims", claim_list(cert.contradiction.a2_claims)},
                               {"comm_exponent", cert.contradiction.comm_exponent},
                               {"lhs", cert.lhs()},
                               {"bound", cert.bound()}}},
        {"proof", Json{{"part", cert.proof.part}, {"q_overlap", cert.proof.q_overlap}, {"m_rule", cert.proof.m_rule}}},
    };
}

Certificate certificate_from_json(const Json& j) {
    const Reader root(j, "");
    root.expect_keys({"version", "d", "n", "graph", "normalization", "claims", "steps", "contradiction", "proof"});
    Certificate cert;
    cert.version = root.at("version").string();
    if (cert.version != Certificate::kVersion) {
        root.at("version").fail(fmt::format("unsupported version '{}', expected '{}'", cert.version, Certificate::kVersion));
    }
    const auto d = static_cast<std::uint32_t>(root.at("d").uint(2, 1u << 20));
    if (!is_prime(d)) root.at("d").fail("d must be prime");
    const auto n = root.at("n").uint(1, 4096);

    Multigraph graph(d, n);
    {
        const auto gr = root.at("graph");
        const auto count = gr.array_size();
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t k = 0; k < count; ++k) {
            const auto e = gr.at(k);
            if (e.array_size() != 3) e.fail("edge must be [u, v, w]");
            const auto u = e.at(0).uint(1, n) - 1;
            const auto v = e.at(1).uint(1, n) - 1;
            const auto w = static_cast<std::uint32_t>(e.at(2).uint(1, d - 1));
            if (u == v) e.fail("self-loop");
            if (!seen.emplace(std::min(u, v), std::max(u, v)).second) e.fail("edge listed twice");
            graph.set_weight(u, v, w);
        }
    }
    cert.graph = std::move(graph);

    {
        const auto nr = root.at("normalization");
        nr.expect_keys({"steps", "case"});
        const auto label = parse_case_label(nr.at("case").string());
        if (!label) nr.at("case").fail("unknown case label");
        cert.label = *label;
        const auto sr = nr.at("steps");
        const auto count = sr.array_size();
        for (std::size_t k = 0; k < count; ++k) {
            const auto s = sr.at(k);
            const auto type = s.at("type").string();
            if (type == "relabel") {
                s.expect_keys({"type", "perm"});
                const auto pr = s.at("perm");
                if (pr.array_size() != n) pr.fail(fmt::format("permutation needs {} entries", n));
                RelabelStep step;
                for (std::size_t i = 0; i < n; ++i) step.perm.push_back(pr.at(i).uint(1, n) - 1);
                cert.normalization.steps.emplace_back(std::move(step));
            } else if (type == "local_complement") {
                s.expect_keys({"type", "pivot", "a"});
                cert.normalization.steps.emplace_back(LocalComplementStep{
                    s.at("pivot").uint(1, n) - 1, static_cast<std::uint32_t>(s.at("a").uint(0, d - 1))});
            } else {
                s.at("type").fail(fmt::format("unknown normalization step type '{}'", type));
            }
        }
    }

    {
        const auto cr = root.at("claims");
        const auto count = cr.array_size();
        for (std::size_t k = 0; k < count; ++k) {
            const auto c = cr.at(k);
            c.expect_keys({"id", "T", "operator"});
            std::vector<std::size_t> t;
            const auto tr = c.at("T");
            const auto tn = tr.array_size();
            for (std::size_t i = 0; i < tn; ++i) t.push_back(tr.at(i).uint(1, n) - 1);
            std::optional<Inflation> inf;
            try {
                inf.emplace(n, std::move(t));
            } catch (const InvalidArgument& e) {
                tr.fail(e.what());
            }
            cert.claims.push_back(Claim{c.at("id").string(), std::move(*inf), operator_from_json(c.at("operator"), d, n)});
        }
    }

    {
        const auto sr = root.at("steps");
        const auto count = sr.array_size();
        for (std::size_t k = 0; k < count; ++k) cert.steps.push_back(step_from_json(sr.at(k), n));
    }

    {
        const auto cr = root.at("contradiction");
        cr.expect_keys({"a1_claims", "a2_claims", "comm_exponent", "lhs", "bound"});
        cert.contradiction.a1_claims = cr.at("a1_claims").ids();
        cert.contradiction.a2_claims = cr.at("a2_claims").ids();
        cert.contradiction.comm_exponent = static_cast<std::uint32_t>(cr.at("comm_exponent").uint(0, d - 1));
        if (cr.at("lhs").uint(0, UINT64_MAX) != cert.lhs()) cr.at("lhs").fail(fmt::format("lhs must be 2d = {}", cert.lhs()));
        if (std::abs(cr.at("bound").number() - cert.bound()) > 1e-9) {
            cr.at("bound").fail(fmt::format("bound must be d + sqrt(d) = {}", cert.bound()));
        }
    }

    {
        const auto pr = root.at("proof");
        pr.expect_keys({"part", "q_overlap", "m_rule"});
        cert.proof.part = static_cast<int>(pr.at("part").uint(1, 3));
        cert.proof.q_overlap = pr.at("q_overlap").uint(1, n);
        cert.proof.m_rule = pr.at("m_rule").string();
    }
    return cert;
}

std::string serialize(const Certificate& cert) { return certificate_to_json(cert).dump(2) + "\n"; }

Certificate deserialize(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("", fmt::format("invalid JSON: {}", e.what()));
    }
    return certificate_from_json(j);
}

}  // namespace netcert
