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

#include <complex>
#include <cstdint>

namespace netcert {

/// Every numeric tolerance used by the bounds checks and self-tests.
struct Tolerances {
    /// Absolute, for unit-scale real quantities (eigenvalues, sums).
    double unit = 1e-9;
    /// Symplectic vs. dense expectation values.
    double oracle = 1e-10;
    /// Relative to (lambda1 + lambda2)^{n d} in operator_identity_check.
    double identity_relative = 1e-8;
    /// Dense Pauli products and commutators.
    double dense = 1e-12;
};

inline constexpr Tolerances kTolerances{};

/// d + sqrt(d). Throws InvalidArgument unless d is prime.
double lemma1_bound(std::uint32_t d);

/// Largest eigenvalue of sum_{k<d} (X^k + Z^{qk}) from a dense Hermitian
/// eigendecomposition.
double lemma1_numeric_max(std::uint32_t d, std::uint32_t comm_q);

/// Same quantity from the rank-2 structure d (|phi><phi| + |0><0|):
/// d (1 + |<0|phi>|), with the overlap read off tr(P_X P_Z).
double lemma1_rank2_max(std::uint32_t d, std::uint32_t comm_q);

/// sum over 0 <= i_1 <= ... <= i_k <= d - k of eta^{i_1 + ... + i_k} with
/// eta = omega^{-q}, by enumeration.
std::complex<double> vieta_sum(std::uint32_t d, std::uint32_t comm_q, std::uint32_t k);

/// max |((l1 X + l2 Z^q)^{n d} - (l1^d + l2^d)^n I)_{ab}|.
double operator_identity_check(std::uint32_t d, std::uint32_t comm_q, double lambda1, double lambda2,
                               std::uint32_t n_reps);

/// The contract bound for operator_identity_check.
double operator_identity_tolerance(std::uint32_t d, double lambda1, double lambda2, std::uint32_t n_reps,
                                   const Tolerances& tol = kTolerances);

struct FidelityBound {
    /// 0 in the analytic d -> infinity limit.
    std::uint32_t d = 0;
    std::uint64_t q_overlap = 1;
    bool analytic_limit = false;
    double beta = 0;
    double gamma = 0;
    double delta_max = 0;
    double f_min = 0;
};

/// beta = 2q - 1, gamma = (d - sqrt d)/(d - 1) (or 1 in the analytic
/// limit), delta_max = (beta^2 + 2 gamma - beta sqrt(beta^2 + 4 gamma))/8.
FidelityBound fidelity_threshold(std::uint32_t d, std::uint64_t q_overlap);
FidelityBound fidelity_threshold_limit(std::uint64_t q_overlap);

/// sqrt(2 mu) + nu. Throws InvalidArgument unless 0 <= mu <= nu.
double error_propagation(double mu, double nu);

}  // namespace netcert
