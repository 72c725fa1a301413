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

#include "netcert/normalization.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "netcert/errors.hpp"
#include "netcert/zmod.hpp"

namespace netcert {

std::string_view to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::Case3: return "Case3";
        case CaseLabel::Case4: return "Case4";
        case CaseLabel::NotApplicable: return "NotApplicable";
    }
    return "NotApplicable";
}

std::optional<CaseLabel> parse_case_label(std::string_view text) {
    for (auto c : {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3, CaseLabel::Case4, CaseLabel::NotApplicable}) {
        if (to_string(c) == text) return c;
    }
    return std::nullopt;
}

Multigraph TransformLog::replay(const Multigraph& g) const {
    Multigraph cur = g;
    for (const auto& step : steps) {
        if (const auto* r = std::get_if<RelabelStep>(&step)) {
            cur = relabel(cur, r->perm);
        } else {
            const auto& lc = std::get<LocalComplementStep>(step);
            if (lc.a >= cur.dim()) throw InvalidArgument("local complementation multiplier out of range");
            cur = local_complement(cur, lc.pivot, lc.a);
        }
    }
    return cur;
}

std::size_t TransformLog::complementations() const {
    return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const TransformStep& s) {
        return std::holds_alternative<LocalComplementStep>(s);
    }));
}

bool check_preconditions(const Multigraph& g) {
    if (g.size() < 3) return false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.degree(i) >= 2) return true;
    }
    return false;
}

std::vector<std::size_t> common_neighbors(const Multigraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g.weight(kVertex1, j) != 0 && g.weight(kVertex2, j) != 0) out.push_back(j);
    }
    return out;
}

bool twin_condition(const Multigraph& g, std::size_t n) {
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (j == n || j == kVertex2) continue;
        if ((g.weight(kVertex2, j) != 0) != (g.weight(n, j) != 0)) return false;
    }
    return true;
}

std::optional<std::uint32_t> case4_multiplier(const Multigraph& g, std::size_t n) {
    const auto d = g.dim();
    const auto g2n = g.weight(kVertex2, n);
    for (std::uint32_t a = 1; a < d; ++a) {
        bool ok = true;
        for (std::size_t i = 0; i < g.size() && ok; ++i) {
            if (i == kVertex2 || i == n || g.weight(n, i) == 0) continue;
            ok = mod_add(g.weight(kVertex2, i), mod_mul(a, mod_mul(g2n, g.weight(n, i), d), d), d) == 0;
        }
        if (ok) return a;
    }
    return std::nullopt;
}

namespace {

std::size_t exclusive_count(const Multigraph& g) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g.weight(kVertex1, j) != 0 && g.weight(kVertex2, j) == 0) ++count;
    }
    return count;
}

}  // namespace

bool is_normal_form(const Multigraph& g) {
    return g.size() >= 3 && g.weight(kVertex1, kVertex2) != 0 && exclusive_count(g) >= 2;
}

CaseLabel classify(const Multigraph& g) {
    if (!is_normal_form(g)) return CaseLabel::NotApplicable;
    const auto common = common_neighbors(g);
    if (common.empty()) return CaseLabel::Case1;
    const bool any_twin = std::any_of(common.begin(), common.end(), [&](std::size_t n) { return twin_condition(g, n); });
    if (!any_twin) return CaseLabel::Case2;
    if (common.size() == 1) return CaseLabel::Case3;
    for (auto n : common) {
        if (twin_condition(g, n) && case4_multiplier(g, n)) return CaseLabel::Case4;
    }
    return CaseLabel::NotApplicable;
}

namespace {

std::vector<std::size_t> front_permutation(std::size_t n, std::size_t v1, std::size_t v2) {
    std::vector<std::size_t> perm(n);
    perm[v1] = kVertex1;
    perm[v2] = kVertex2;
    std::size_t next = 2;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != v1 && i != v2) perm[i] = next++;
    }
    return perm;
}

bool is_identity(const std::vector<std::size_t>& perm) {
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] != i) return false;
    }
    return true;
}

std::string describe(const Multigraph& g) {
    std::string out;
    for (const auto& e : g.edges()) out += fmt::format(" {}-{}:{}", e.u + 1, e.v + 1, e.weight);
    return out.empty() ? " (edgeless)" : out;
}

}  // namespace

NormalizationResult normalize(const Multigraph& g) {
    if (!check_preconditions(g)) {
        throw PreconditionFailed("graph needs N >= 3 and a vertex with at least two neighbours");
    }
    const auto n = g.size();
    const auto d = g.dim();
    std::vector<std::string> trace;

    // (i) choose vertices 1, 2 and a_1 so that gamma_12 != 0, |N1 \ N2| >= 2.
    std::optional<NormalizationResult> start;
    for (std::size_t v1 = 0; v1 < n && !start; ++v1) {
        if (g.degree(v1) < 2) continue;
        const auto nb = neighborhood(g, v1);
        for (auto v2 : nb.members) {
            const auto perm = front_permutation(n, v1, v2);
            const auto moved = relabel(g, perm);
            // a_1 = 0 first, then the values that zero gamma_{2,m} for a
            // neighbour m of vertex 1, then everything else.
            std::vector<std::uint32_t> candidates{0};
            const auto g12 = moved.weight(kVertex1, kVertex2);
            for (std::size_t m = 0; m < n; ++m) {
                const auto g1m = moved.weight(kVertex1, m);
                if (m == kVertex2 || g1m == 0) continue;
                auto a = mod_mul(mod_neg(moved.weight(kVertex2, m), d), mod_inv(mod_mul(g12, g1m, d), d), d);
                if (std::find(candidates.begin(), candidates.end(), a) == candidates.end()) candidates.push_back(a);
            }
            for (std::uint32_t a = 1; a < d; ++a) {
                if (std::find(candidates.begin(), candidates.end(), a) == candidates.end()) candidates.push_back(a);
            }
            for (auto a : candidates) {
                auto cand = local_complement(moved, kVertex1, a);
                const bool ok = is_normal_form(cand);
                trace.push_back(fmt::format("start v1={} v2={} a1={} -> {}", v1 + 1, v2 + 1, a, ok ? "ok" : "rejected"));
                if (!ok) continue;
                NormalizationResult r{cand, {}, CaseLabel::NotApplicable, 0};
                if (!is_identity(perm)) r.log.steps.emplace_back(RelabelStep{perm});
                if (a != 0) r.log.steps.emplace_back(LocalComplementStep{kVertex1, a});
                start = std::move(r);
                break;
            }
            if (start) break;
        }
    }
    auto fail = [&](const std::string& why) -> NormalizationExhausted {
        std::string msg = "normalization exhausted: " + why + "\ninput:" + describe(g);
        for (const auto& t : trace) msg += "\n  " + t;
        return NormalizationExhausted(msg);
    };
    if (!start) throw fail("no starting assignment of vertices 1 and 2");

    NormalizationResult result = std::move(*start);
    // (ii) pivot on twins n in N1 & N2 until a case matches; |N2| shrinks each pass.
    for (std::size_t iter = 0; iter <= n; ++iter) {
        result.label = classify(result.graph);
        if (result.label != CaseLabel::NotApplicable) return result;

        const auto& cur = result.graph;
        const auto common = common_neighbors(cur);
        std::optional<std::size_t> pivot;
        for (auto m : common) {
            if (twin_condition(cur, m)) {
                pivot = m;
                break;
            }
        }
        if (!pivot) throw fail("no twin pivot although no case matched");

        const auto deg2 = cur.degree(kVertex2);
        std::optional<Multigraph> next;
        std::uint32_t chosen = 0;
        for (std::uint32_t a = 1; a < d && !next; ++a) {
            auto cand = local_complement(cur, *pivot, a);
            const bool ok = cand.weight(kVertex1, kVertex2) != 0 && cand.degree(kVertex2) < deg2;
            trace.push_back(fmt::format("loop {} pivot={} a={} -> {}", iter, *pivot + 1, a, ok ? "ok" : "rejected"));
            if (ok) {
                next = std::move(cand);
                chosen = a;
            }
        }
        if (!next) throw fail(fmt::format("no multiplier for pivot {}", *pivot + 1));
        if (!is_normal_form(*next) || next->degree(kVertex2) >= deg2) {
            throw fail(fmt::format("pivot {} broke the normal form", *pivot + 1));
        }
        result.graph = std::move(*next);
        result.log.steps.emplace_back(LocalComplementStep{*pivot, chosen});
        ++result.loop_iterations;
    }
    throw fail("iteration bound exceeded");
}

}  // namespace netcert
