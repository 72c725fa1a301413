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
#include <variant>
#include <vector>

#include "netcert/inflation.hpp"
#include "netcert/multigraph.hpp"
#include "netcert/normalization.hpp"
#include "netcert/pauli.hpp"

namespace netcert {

using ClaimId = std::string;

/// "<operator> has expectation 1 on the state produced by `inflation`".
struct Claim {
    ClaimId id;
    Inflation inflation;
    /// 2N-site word, see inflation_site().
    PauliWord op;

    friend bool operator==(const Claim&, const Claim&) = default;
};

/// Content address of a claim: hash of (d, N, T, operator).
ClaimId claim_id(const Inflation& inflation, const PauliWord& op);

/// Claim follows from the graph state itself: the operator's subnetwork is
/// a copy of a subnetwork of the original network and the projected word
/// stabilizes |G> with phase exactly 1.
struct BaseStabilizer {
    ClaimId claim;
    friend bool operator==(const BaseStabilizer&, const BaseStabilizer&) = default;
};

/// Equal expectation on isomorphic subnetworks; swap[i] exchanges i and i'.
struct Fact1Transfer {
    ClaimId from;
    ClaimId to;
    std::vector<bool> swap;
    friend bool operator==(const Fact1Transfer&, const Fact1Transfer&) = default;
};

/// <P> = <Q> = 1 on the same inflation, P and Q commuting with P^d = Q^d = 1,
/// gives <PQ> = 1.
struct Fact2Combine {
    ClaimId premise1;
    ClaimId premise2;
    ClaimId conclusion;
    friend bool operator==(const Fact2Combine&, const Fact2Combine&) = default;
};

/// <P> = 1 gives <P^k> = 1.
struct PowerLift {
    ClaimId base;
    std::uint64_t k = 1;
    ClaimId conclusion;
    friend bool operator==(const PowerLift&, const PowerLift&) = default;
};

using CertStep = std::variant<BaseStabilizer, Fact1Transfer, Fact2Combine, PowerLift>;

/// Final step: a1_claims[k-1] and a2_claims[k-1] hold A_1^k and A_2^k
/// (k = 1..d-1) on one inflation, with A_1 A_2 = omega^comm_exponent A_2 A_1.
/// Together with the k = 0 terms the left side of the Lemma-1 inequality is
/// 2d, above the bound d + sqrt(d).
struct Lemma1Contradiction {
    std::vector<ClaimId> a1_claims;
    std::vector<ClaimId> a2_claims;
    std::uint32_t comm_exponent = 0;
    friend bool operator==(const Lemma1Contradiction&, const Lemma1Contradiction&) = default;
};

/// Which branch of the proof produced the certificate.
struct ProofInfo {
    /// 1 (Cases 1-2), 2 (Case 3) or 3 (Case 4).
    int part = 1;
    /// |N1 & N2| + 1 for Case 2, else 1.
    std::size_t q_overlap = 1;
    /// Case 4 only: which m formula the builder kept ("literal" is
    /// -gamma_2n * gamma_1n, "inverse" is -gamma_2n * gamma_1n^{-1}).
    std::string m_rule = "none";
    friend bool operator==(const ProofInfo&, const ProofInfo&) = default;
};

struct Certificate {
    static constexpr const char* kVersion = "1";

    std::string version = kVersion;
    /// Input graph, before normalization.
    Multigraph graph{2, 1};
    TransformLog normalization;
    CaseLabel label = CaseLabel::NotApplicable;
    std::vector<Claim> claims;
    std::vector<CertStep> steps;
    Lemma1Contradiction contradiction;
    ProofInfo proof;

    std::uint32_t dim() const noexcept { return graph.dim(); }
    /// Left side of the violated inequality: 2d.
    std::uint64_t lhs() const noexcept { return 2ULL * graph.dim(); }
    /// d + sqrt(d).
    double bound() const;

    const Claim* find_claim(const ClaimId& id) const;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Theorem-2 chain parameter for a normalized graph: |N1 & N2| + 1 in Case 2,
/// 1 otherwise.
std::size_t q_overlap(const Multigraph& normalized, CaseLabel label);

/// Emits the proof for a graph already in normal form. Throws CaseMismatch
/// unless classify(normalized) == label != NotApplicable, and
/// InternalCheckFailed if any emitted step fails the checker.
Certificate build_certificate(const Multigraph& normalized, CaseLabel label);

/// Same, for the output of normalize(input); the certificate records the
/// original input and the transformation log.
Certificate build_certificate(const Multigraph& input, const NormalizationResult& norm);

/// normalize + build.
Certificate prove(const Multigraph& input);

struct Verdict {
    bool accepted = false;
    /// normalization | claims | step | contradiction | proof
    std::string stage;
    /// Index into Certificate::steps when stage == "step".
    std::optional<std::size_t> step;
    std::string reason;

    std::string describe() const;
};

/// Independent checker. Re-derives every side condition; never trusts the
/// builder.
Verdict verify_certificate(const Certificate& cert);

}  // namespace netcert
