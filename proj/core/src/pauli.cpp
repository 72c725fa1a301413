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

#include "netcert/pauli.hpp"

#include <numbers>

#include <fmt/core.h>

#include "netcert/errors.hpp"
#include "netcert/zmod.hpp"

namespace netcert {

PauliWord::PauliWord(std::uint32_t d, std::size_t n_sites) : d_(d), sites_(n_sites) {
    if (d < 2) throw InvalidArgument("PauliWord: dimension must be >= 2");
}

PauliWord::PauliWord(std::uint32_t d, std::int64_t phase, std::vector<SiteExponent> sites)
    : d_(d), sites_(std::move(sites)) {
    if (d < 2) throw InvalidArgument("PauliWord: dimension must be >= 2");
    phase_ = mod_reduce(phase, d);
    for (auto& s : sites_) {
        s.x %= d;
        s.z %= d;
    }
}

PauliWord PauliWord::single(std::uint32_t d, std::size_t n_sites, std::size_t site, std::uint32_t x,
                            std::uint32_t z) {
    PauliWord w(d, n_sites);
    return w.with_site(site, x, z);
}

bool PauliWord::is_scalar() const noexcept {
    for (const auto& s : sites_) {
        if (!s.is_identity()) return false;
    }
    return true;
}

std::size_t PauliWord::weight() const noexcept {
    std::size_t w = 0;
    for (const auto& s : sites_) w += s.is_identity() ? 0 : 1;
    return w;
}

PauliWord PauliWord::with_phase(std::int64_t phase) const {
    PauliWord r = *this;
    r.phase_ = mod_reduce(phase, d_);
    return r;
}

PauliWord PauliWord::with_site(std::size_t i, std::uint32_t x, std::uint32_t z) const {
    if (i >= sites_.size()) throw InvalidArgument("PauliWord::with_site: site out of range");
    PauliWord r = *this;
    r.sites_[i] = SiteExponent{x % d_, z % d_};
    return r;
}

std::string PauliWord::str() const {
    std::string out = fmt::format("w^{}", phase_);
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        const auto& s = sites_[i];
        if (s.is_identity()) continue;
        out += ' ';
        if (s.x) out += s.x == 1 ? fmt::format("X{}", i) : fmt::format("X{}^{}", i, s.x);
        if (s.z) out += s.z == 1 ? fmt::format("Z{}", i) : fmt::format("Z{}^{}", i, s.z);
    }
    return out;
}

namespace {

void require_compatible(const PauliWord& p, const PauliWord& q, const char* op) {
    if (p.dim() != q.dim()) {
        throw DimensionMismatch(fmt::format("{}: dimension mismatch ({} vs {})", op, p.dim(), q.dim()));
    }
    if (p.size() != q.size()) {
        throw DimensionMismatch(fmt::format("{}: site count mismatch ({} vs {})", op, p.size(), q.size()));
    }
}

}  // namespace

PauliWord pw_mul(const PauliWord& p, const PauliWord& q) {
    require_compatible(p, q, "pw_mul");
    const auto d = p.dim();
    // (X^a Z^b)(X^a' Z^b') = omega^{b a'} X^{a+a'} Z^{b+b'}
    std::uint64_t phase = std::uint64_t{p.phase()} + q.phase();
    std::vector<SiteExponent> sites(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& a = p.site(i);
        const auto& b = q.site(i);
        phase += mod_mul(a.z, b.x, d);
        sites[i] = SiteExponent{mod_add(a.x, b.x, d), mod_add(a.z, b.z, d)};
    }
    return PauliWord(d, static_cast<std::int64_t>(phase % d), std::move(sites));
}

std::uint32_t pw_commutation_exponent(const PauliWord& p, const PauliWord& q) {
    require_compatible(p, q, "pw_commutation_exponent");
    const auto d = p.dim();
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& a = p.site(i);
        const auto& b = q.site(i);
        c = mod_add(c, mod_sub(mod_mul(a.z, b.x, d), mod_mul(a.x, b.z, d), d), d);
    }
    return c;
}

PauliWord pw_pow(const PauliWord& p, std::uint64_t k) {
    PauliWord result(p.dim(), p.size());
    PauliWord base = p;
    while (k > 0) {
        if (k & 1) result = pw_mul(result, base);
        k >>= 1;
        if (k > 0) base = pw_mul(base, base);
    }
    return result;
}

PauliWord pw_inverse(const PauliWord& p) {
    // P^d = omega^t I  =>  P^{-1} = omega^{-t} P^{d-1}
    const auto full = pw_pow(p, p.dim());
    const auto partial = pw_pow(p, p.dim() - 1);
    return partial.with_phase(static_cast<std::int64_t>(partial.phase()) - full.phase());
}

std::complex<double> omega_power(std::uint32_t d, std::int64_t k) {
    const auto r = mod_reduce(k, d);
    if (r == 0) return {1.0, 0.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

std::size_t checked_dense_dim(std::uint32_t d, std::size_t n, const DenseConfig& config) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (dim > config.max_dim / d) {
            throw SizeLimitExceeded(
                fmt::format("dense dimension {}^{} exceeds limit {}", d, n, config.max_dim));
        }
        dim *= d;
    }
    if (dim > config.max_dim) {
        throw SizeLimitExceeded(fmt::format("dense dimension {}^{} exceeds limit {}", d, n, config.max_dim));
    }
    return dim;
}

void pw_apply(const PauliWord& p, std::span<const std::complex<double>> in,
              std::span<std::complex<double>> out) {
    const auto d = p.dim();
    const auto n = p.size();
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) dim *= d;
    if (in.size() != dim || out.size() != dim) {
        throw DimensionMismatch("pw_apply: state size does not match d^n");
    }
    std::vector<std::complex<double>> phases(d);
    for (std::uint32_t k = 0; k < d; ++k) phases[k] = omega_power(d, k);

    std::vector<std::uint32_t> digits(n, 0);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        // digits holds the base-d expansion of idx, site 0 most significant.
        std::uint64_t ph = p.phase();
        std::size_t target = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& s = p.site(i);
            ph += std::uint64_t{s.z} * digits[i];
            target = target * d + (digits[i] + s.x) % d;
        }
        out[target] = phases[ph % d] * in[idx];
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < d) break;
            digits[i] = 0;
        }
    }
}

namespace {

Eigen::MatrixXcd shift_matrix(std::uint32_t d) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
    for (std::uint32_t i = 0; i < d; ++i) x((i + 1) % d, i) = 1.0;
    return x;
}

Eigen::MatrixXcd clock_matrix(std::uint32_t d) {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
    for (std::uint32_t i = 0; i < d; ++i) z(i, i) = omega_power(d, i);
    return z;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd pw_dense(const PauliWord& p, const DenseConfig& config) {
    checked_dense_dim(p.dim(), p.size(), config);
    const auto d = p.dim();
    const Eigen::MatrixXcd x = shift_matrix(d);
    const Eigen::MatrixXcd z = clock_matrix(d);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1) * omega_power(d, p.phase());
    for (const auto& s : p.sites()) {
        Eigen::MatrixXcd local = Eigen::MatrixXcd::Identity(d, d);
        for (std::uint32_t k = 0; k < s.x; ++k) local = local * x;
        for (std::uint32_t k = 0; k < s.z; ++k) local = local * z;
        m = kron(m, local);
    }
    return m;
}

}  // namespace netcert
