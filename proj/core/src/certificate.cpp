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

#include "netcert/certificate.hpp"

#include <cmath>

#include <fmt/core.h>

namespace netcert {

namespace {

// FNV-1a, 64 bit.
std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

ClaimId claim_id(const Inflation& inflation, const PauliWord& op) {
    std::string key = fmt::format("d={};n={};T=", op.dim(), inflation.parties());
    for (auto t : inflation.t_set()) key += fmt::format("{},", t);
    key += fmt::format(";phase={};", op.phase());
    const auto n = op.size() / 2;
    for (std::size_t s = 0; s < op.size(); ++s) {
        const auto& e = op.site(s);
        if (e.is_identity()) continue;
        key += fmt::format("{}{}:{},{};", s % n, s < n ? 'u' : 'p', e.x, e.z);
    }
    return fmt::format("c{:016x}", fnv1a(key));
}

double Certificate::bound() const {
    const double d = graph.dim();
    return d + std::sqrt(d);
}

const Claim* Certificate::find_claim(const ClaimId& id) const {
    for (const auto& c : claims) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

std::size_t q_overlap(const Multigraph& normalized, CaseLabel label) {
    if (label != CaseLabel::Case2) return 1;
    return common_neighbors(normalized).size() + 1;
}

std::string Verdict::describe() const {
    if (accepted) return "accepted";
    if (step) return fmt::format("rejected at step {} ({}): {}", *step, stage, reason);
    return fmt::format("rejected at {}: {}", stage, reason);
}

}  // namespace netcert
