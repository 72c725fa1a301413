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

#include "netcert/bounds.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <fmt/core.h>

#include "netcert/errors.hpp"
#include "netcert/zmod.hpp"

namespace netcert {

namespace {

using Matrix = Eigen::MatrixXcd;

void require_prime(std::uint32_t d) {
    if (!is_prime(d)) throw InvalidArgument(fmt::format("d = {} is not prime", d));
}

void require_coprime(std::uint32_t d, std::uint32_t q) {
    require_prime(d);
    if (q % d == 0) throw InvalidArgument(fmt::format("q = {} is not coprime to d = {}", q, d));
}

std::complex<double> omega(std::uint32_t d, std::int64_t k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_reduce(k, d)) / d;
    return {std::cos(angle), std::sin(angle)};
}

// X|k> = |k+1>, Z|k> = omega^k |k>.
Matrix shift(std::uint32_t d) {
    Matrix m = Matrix::Zero(d, d);
    for (std::uint32_t k = 0; k < d; ++k) m((k + 1) % d, k) = 1.0;
    return m;
}

Matrix clock_power(std::uint32_t d, std::uint32_t q) {
    Matrix m = Matrix::Zero(d, d);
    for (std::uint32_t k = 0; k < d; ++k) m(k, k) = omega(d, static_cast<std::int64_t>(k) * q);
    return m;
}

// sum_{k<d} A^k.
Matrix power_sum(const Matrix& a) {
    Matrix acc = Matrix::Zero(a.rows(), a.cols());
    Matrix p = Matrix::Identity(a.rows(), a.cols());
    for (Eigen::Index k = 0; k < a.rows(); ++k) {
        acc += p;
        p = p * a;
    }
    return acc;
}

void vieta_rec(std::uint32_t d, std::uint32_t k, std::uint32_t lo, std::uint32_t depth, std::uint64_t sum,
               std::uint32_t q, std::complex<double>& acc) {
    if (depth == k) {
        acc += omega(d, -static_cast<std::int64_t>((sum * q) % d));
        return;
    }
    for (std::uint32_t i = lo; i <= d - k; ++i) vieta_rec(d, k, i, depth + 1, sum + i, q, acc);
}

FidelityBound make_bound(std::uint32_t d, std::uint64_t q, bool limit, double gamma) {
    if (q < 1) throw InvalidArgument("q_overlap must be at least 1");
    FidelityBound b;
    b.d = d;
    b.q_overlap = q;
    b.analytic_limit = limit;
    b.beta = 2.0 * static_cast<double>(q) - 1.0;
    b.gamma = gamma;
    const double beta2 = b.beta * b.beta;
    b.delta_max = (beta2 + 2.0 * gamma - b.beta * std::sqrt(beta2 + 4.0 * gamma)) / 8.0;
    b.f_min = 1.0 - b.delta_max;
    return b;
}

}  // namespace

double lemma1_bound(std::uint32_t d) {
    require_prime(d);
    return d + std::sqrt(static_cast<double>(d));
}

double lemma1_numeric_max(std::uint32_t d, std::uint32_t comm_q) {
    require_coprime(d, comm_q);
    const Matrix m = power_sum(shift(d)) + power_sum(clock_power(d, comm_q));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw InternalCheckFailed("eigen solver did not converge");
    return solver.eigenvalues().maxCoeff();
}

double lemma1_rank2_max(std::uint32_t d, std::uint32_t comm_q) {
    require_coprime(d, comm_q);
    const Matrix px = power_sum(shift(d)) / static_cast<double>(d);
    const Matrix pz = power_sum(clock_power(d, comm_q)) / static_cast<double>(d);
    const double overlap2 = (px * pz).trace().real();
    return d * (1.0 + std::sqrt(overlap2));
}

std::complex<double> vieta_sum(std::uint32_t d, std::uint32_t comm_q, std::uint32_t k) {
    require_coprime(d, comm_q);
    if (k < 1 || k >= d) throw InvalidArgument(fmt::format("k = {} outside [1, {}]", k, d - 1));
    std::complex<double> acc = 0;
    vieta_rec(d, k, 0, 0, 0, comm_q % d, acc);
    return acc;
}

double operator_identity_check(std::uint32_t d, std::uint32_t comm_q, double lambda1, double lambda2,
                               std::uint32_t n_reps) {
    require_coprime(d, comm_q);
    if (!(lambda1 > 0) || !(lambda2 > 0)) throw InvalidArgument("lambda1 and lambda2 must be positive");
    if (n_reps < 1) throw InvalidArgument("n_reps must be at least 1");
    const Matrix a = lambda1 * shift(d) + lambda2 * clock_power(d, comm_q);
    Matrix p = Matrix::Identity(d, d);
    for (std::uint64_t i = 0; i < std::uint64_t{n_reps} * d; ++i) p = p * a;
    const double scale = std::pow(std::pow(lambda1, d) + std::pow(lambda2, d), n_reps);
    const Matrix expected = scale * Matrix::Identity(d, d);
    return (p - expected).cwiseAbs().maxCoeff();
}

double operator_identity_tolerance(std::uint32_t d, double lambda1, double lambda2, std::uint32_t n_reps,
                                   const Tolerances& tol) {
    return tol.identity_relative * std::pow(lambda1 + lambda2, static_cast<double>(n_reps) * d);
}

FidelityBound fidelity_threshold(std::uint32_t d, std::uint64_t q_overlap) {
    require_prime(d);
    const double sd = std::sqrt(static_cast<double>(d));
    return make_bound(d, q_overlap, false, (d - sd) / (d - 1.0));
}

FidelityBound fidelity_threshold_limit(std::uint64_t q_overlap) { return make_bound(0, q_overlap, true, 1.0); }

double error_propagation(double mu, double nu) {
    if (!(mu >= 0) || !(nu >= mu)) throw InvalidArgument(fmt::format("need 0 <= mu <= nu, got mu={} nu={}", mu, nu));
    return std::sqrt(2.0 * mu) + nu;
}

}  // namespace netcert
