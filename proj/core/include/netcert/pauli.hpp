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
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace netcert {

/// Exponents of X^x Z^z on one tensor factor.
struct SiteExponent {
    std::uint32_t x = 0;
    std::uint32_t z = 0;

    bool is_identity() const noexcept { return x == 0 && z == 0; }
    friend bool operator==(const SiteExponent&, const SiteExponent&) = default;
    friend auto operator<=>(const SiteExponent&, const SiteExponent&) = default;
};

/// A generalized Pauli operator over prime dimension d in canonical form
///
///     omega^phase * (X^{x_0} Z^{z_0}) (x) ... (x) (X^{x_{n-1}} Z^{z_{n-1}})
///
/// with omega = exp(2 pi i / d) and every exponent reduced into [0, d).
/// Two words are equal iff all of (d, phase, site exponents) agree, which
/// coincides with equality of the dense matrices.
class PauliWord {
public:
    PauliWord() = default;

    /// Identity word on `n_sites` factors.
    PauliWord(std::uint32_t d, std::size_t n_sites);

    /// Reduces all exponents modulo d. Throws InvalidArgument if d < 2.
    PauliWord(std::uint32_t d, std::int64_t phase, std::vector<SiteExponent> sites);

    static PauliWord single(std::uint32_t d, std::size_t n_sites, std::size_t site, std::uint32_t x,
                            std::uint32_t z);

    std::uint32_t dim() const noexcept { return d_; }
    std::uint32_t phase() const noexcept { return phase_; }
    std::size_t size() const noexcept { return sites_.size(); }
    const SiteExponent& site(std::size_t i) const { return sites_.at(i); }
    std::span<const SiteExponent> sites() const noexcept { return sites_; }

    /// True when every site exponent is zero (the word is omega^phase * I).
    bool is_scalar() const noexcept;
    /// True when the word is exactly the identity matrix.
    bool is_identity() const noexcept { return phase_ == 0 && is_scalar(); }
    /// Number of sites with a non-identity factor.
    std::size_t weight() const noexcept;

    PauliWord with_phase(std::int64_t phase) const;
    PauliWord with_site(std::size_t i, std::uint32_t x, std::uint32_t z) const;

    /// Compact human-readable form, e.g. "w^1 X1 Z2^2 X3Z3".
    std::string str() const;

    friend bool operator==(const PauliWord&, const PauliWord&) = default;

private:
    std::uint32_t d_ = 2;
    std::uint32_t phase_ = 0;
    std::vector<SiteExponent> sites_;
};

/// Canonical form of P*Q. Throws DimensionMismatch on d or size disagreement.
PauliWord pw_mul(const PauliWord& p, const PauliWord& q);

/// The exponent c with P Q = omega^c Q P.
std::uint32_t pw_commutation_exponent(const PauliWord& p, const PauliWord& q);

/// Canonical form of P^k; pw_pow(P, 0) is the identity word.
PauliWord pw_pow(const PauliWord& p, std::uint64_t k);

/// P^{-1} as a canonical word.
PauliWord pw_inverse(const PauliWord& p);

/// omega^k for dimension d.
std::complex<double> omega_power(std::uint32_t d, std::int64_t k);

struct DenseConfig {
    /// Largest Hilbert-space dimension d^n that dense routines will build.
    std::size_t max_dim = 4096;
};

/// d^n, or throws SizeLimitExceeded when it exceeds `config.max_dim`.
std::size_t checked_dense_dim(std::uint32_t d, std::size_t n, const DenseConfig& config);

/// Exact dense matrix of the word. Verification oracle only.
Eigen::MatrixXcd pw_dense(const PauliWord& p, const DenseConfig& config = {});

/// out = P * in on the d^n dimensional space, without building the matrix.
/// Site 0 is the most significant digit of the basis index.
void pw_apply(const PauliWord& p, std::span<const std::complex<double>> in,
              std::span<std::complex<double>> out);

}  // namespace netcert
