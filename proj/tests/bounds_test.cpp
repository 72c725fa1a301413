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

#include <cmath>
#include <random>

#include "netcert/bounds.hpp"
#include "netcert/errors.hpp"
#include "netcert/zmod.hpp"
#include "oracles.hpp"

using namespace netcert;

namespace {

std::vector<std::uint32_t> primes_upto(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= n; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

// Largest eigenvalue of sum_k X^k + Z^{qk}, built from entrywise matrices.
double oracle_lemma1(std::uint32_t d, std::uint32_t q) {
    oracle::Matrix m = oracle::Matrix::Zero(d, d);
    for (std::uint32_t k = 0; k < d; ++k) {
        m += oracle::dense(PauliWord::single(d, 1, 0, k, 0));
        m += oracle::dense(PauliWord::single(d, 1, 0, 0, (q * k) % d));
    }
    Eigen::SelfAdjointEigenSolver<oracle::Matrix> es(m);
    return es.eigenvalues().maxCoeff();
}

}  // namespace

TEST(Lemma1, Examples) {
    EXPECT_NEAR(lemma1_bound(3), 4.7320508075688772, 1e-12);
    EXPECT_DOUBLE_EQ(lemma1_bound(2), 2 + std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(lemma1_bound(5), 5 + std::sqrt(5.0));
    EXPECT_NEAR(lemma1_numeric_max(3, 1), 4.7320508, 1e-7);
    EXPECT_NEAR(lemma1_numeric_max(2, 1), 2 + std::sqrt(2.0), 1e-9);
    EXPECT_THROW(lemma1_bound(4), InvalidArgument);
    EXPECT_THROW(lemma1_numeric_max(3, 0), InvalidArgument);
    EXPECT_THROW(lemma1_numeric_max(3, 3), InvalidArgument);
}

TEST(Lemma1, AllPrimesUpTo13) {
    for (auto d : primes_upto(13)) {
        for (std::uint32_t q = 1; q < d; ++q) {
            EXPECT_NEAR(lemma1_numeric_max(d, q), lemma1_bound(d), 1e-9) << d << " " << q;
            EXPECT_NEAR(lemma1_rank2_max(d, q), lemma1_bound(d), 1e-9) << d << " " << q;
            EXPECT_NEAR(oracle_lemma1(d, q), lemma1_bound(d), 1e-9) << d << " " << q;
        }
    }
}

TEST(Lemma1, TraceIsTwoD) {
    for (auto d : primes_upto(7)) {
        oracle::Matrix m = oracle::Matrix::Zero(d, d);
        for (std::uint32_t k = 0; k < d; ++k) {
            m += oracle::dense(PauliWord::single(d, 1, 0, k, 0)) + oracle::dense(PauliWord::single(d, 1, 0, 0, k));
        }
        EXPECT_NEAR(m.trace().real(), 2.0 * d, 1e-12);
    }
}

TEST(Lemma1, ContradictionArithmetic) {
    for (std::uint64_t d = 2; d < 10000; ++d) {
        ASSERT_GT(d * d, d);
        ASSERT_GT(2.0 * d, d + std::sqrt(static_cast<double>(d)));
    }
}

TEST(Vieta, Examples) {
    EXPECT_NEAR(std::abs(vieta_sum(2, 1, 1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(vieta_sum(3, 1, 1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(vieta_sum(5, 2, 3)), 0, 1e-9);
    EXPECT_THROW(vieta_sum(5, 0, 1), InvalidArgument);
    EXPECT_THROW(vieta_sum(5, 1, 5), InvalidArgument);
}

TEST(Vieta, ExhaustiveUpTo11) {
    for (auto d : primes_upto(11)) {
        for (std::uint32_t q = 1; q < d; ++q) {
            for (std::uint32_t k = 1; k < d; ++k) {
                EXPECT_LE(std::abs(vieta_sum(d, q, k)), 1e-9) << d << " " << q << " " << k;
            }
        }
    }
}

TEST(Vieta, MatchesDirectEnumeration) {
    // Count nondecreasing tuples by brute force over all k-tuples.
    const std::uint32_t d = 5, q = 2, k = 2;
    std::complex<double> s = 0;
    for (std::uint32_t a = 0; a <= d - k; ++a) {
        for (std::uint32_t b = a; b <= d - k; ++b) s += oracle::omega(d, -static_cast<std::int64_t>(q) * (a + b));
    }
    EXPECT_NEAR(std::abs(s - vieta_sum(d, q, k)), 0, 1e-12);
}

TEST(OperatorIdentity, Examples) {
    EXPECT_NEAR(operator_identity_check(2, 1, 1, 1, 1), 0, 1e-12);
    EXPECT_LE(operator_identity_check(3, 1, 1, 2, 1), 1e-8 * 27);
    EXPECT_LE(operator_identity_check(5, 3, 1, 1, 2), operator_identity_tolerance(5, 1, 1, 2));
    EXPECT_THROW(operator_identity_check(3, 1, 0, 1, 1), InvalidArgument);
    EXPECT_THROW(operator_identity_check(3, 1, 1, 1, 0), InvalidArgument);
}

TEST(OperatorIdentity, PrimesUpTo7) {
    for (auto d : primes_upto(7)) {
        for (std::uint32_t q = 1; q < d; ++q) {
            for (double l1 : {0.5, 1.0, 2.0}) {
                for (double l2 : {0.5, 1.0, 2.0}) {
                    for (std::uint32_t n = 1; n <= 2; ++n) {
                        EXPECT_LE(operator_identity_check(d, q, l1, l2, n), operator_identity_tolerance(d, l1, l2, n));
                    }
                }
            }
        }
    }
}

TEST(Fidelity, PaperNumbers) {
    const auto b = fidelity_threshold(3, 1);
    EXPECT_GE(b.f_min, 0.9515);
    EXPECT_LE(b.f_min, 0.9520);
    EXPECT_NEAR(b.f_min, 0.952, 0.0005);
    EXPECT_GE(b.delta_max, 0.0484);
    EXPECT_LE(b.delta_max, 0.0485);
    EXPECT_DOUBLE_EQ(b.beta, 1.0);
    EXPECT_NEAR(b.gamma, (3 - std::sqrt(3.0)) / 2, 1e-15);

    const auto lim = fidelity_threshold_limit(1);
    EXPECT_TRUE(lim.analytic_limit);
    EXPECT_NEAR(lim.delta_max, (3 - std::sqrt(5.0)) / 8, 1e-12);
    EXPECT_NEAR(lim.delta_max, 0.0955, 5e-5);
    EXPECT_GE(lim.f_min, 0.9044);
    EXPECT_LE(lim.f_min, 0.9050);
}

TEST(Fidelity, LargePrimeApproachesLimit) {
    const auto b = fidelity_threshold(1000000007, 1);
    EXPECT_NEAR(b.delta_max, fidelity_threshold_limit(1).delta_max, 1e-4);
}

TEST(Fidelity, DeltaSolvesTheQuadratic) {
    // beta sqrt(delta) + 2 delta = gamma / 2 at the threshold.
    for (auto d : primes_upto(31)) {
        for (std::uint64_t q = 1; q <= 8; ++q) {
            const auto b = fidelity_threshold(d, q);
            EXPECT_NEAR(b.beta * std::sqrt(b.delta_max) + 2 * b.delta_max, b.gamma / 2, 1e-12);
            EXPECT_GT(b.delta_max, 0);
            EXPECT_GT(b.f_min, 0);
            EXPECT_LT(b.f_min, 1);
            EXPECT_NEAR(b.f_min, 1 - b.delta_max, 1e-15);
        }
    }
}

TEST(Fidelity, MonotoneInOverlap) {
    for (auto d : primes_upto(31)) {
        for (std::uint64_t q = 1; q < 20; ++q) {
            EXPECT_LE(fidelity_threshold(d, q + 1).delta_max, fidelity_threshold(d, q).delta_max);
        }
    }
    EXPECT_LT(fidelity_threshold(3, 2).delta_max, 0.0484);
}

TEST(Fidelity, InvalidArguments) {
    EXPECT_THROW(fidelity_threshold(4, 1), InvalidArgument);
    EXPECT_THROW(fidelity_threshold(3, 0), InvalidArgument);
    EXPECT_THROW(fidelity_threshold_limit(0), InvalidArgument);
}

TEST(ErrorPropagation, Examples) {
    EXPECT_DOUBLE_EQ(error_propagation(0, 0), 0);
    EXPECT_NEAR(error_propagation(0.02, 0.02), 0.22, 1e-12);
    EXPECT_THROW(error_propagation(0.3, 0.2), InvalidArgument);
    EXPECT_THROW(error_propagation(-0.1, 0.2), InvalidArgument);
}

TEST(ErrorPropagation, RandomUnitaries) {
    // s1, s2 = U diag(roots of unity) U^dagger with s^d = 1, random states.
    std::mt19937_64 rng(99);
    std::normal_distribution<double> gauss;
    const std::uint32_t d = 3;
    auto random_unitary = [&] {
        oracle::Matrix a(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) a(i, j) = {gauss(rng), gauss(rng)};
        }
        return oracle::Matrix(Eigen::HouseholderQR<oracle::Matrix>(a).householderQ());
    };
    auto random_order_d = [&] {
        const auto u = random_unitary();
        oracle::Matrix diag = oracle::Matrix::Zero(4, 4);
        // Mostly +1 eigenvalues so that the deviations stay small.
        for (int i = 0; i < 4; ++i) diag(i, i) = rng() % 4 == 0 ? oracle::omega(d, 1 + rng() % (d - 1)) : 1.0;
        return oracle::Matrix(u * diag * u.adjoint());
    };
    for (int rep = 0; rep < 500; ++rep) {
        const auto s1 = random_order_d(), s2 = random_order_d();
        oracle::Vector psi(4);
        for (int i = 0; i < 4; ++i) psi(i) = {gauss(rng), gauss(rng)};
        psi.normalize();
        const auto id = oracle::Matrix::Identity(4, 4);
        const double mu = std::abs(psi.dot((id - s1) * psi));
        const double nu = std::abs(psi.dot((id - s2) * psi));
        const double lhs = std::abs(psi.dot((id - s1 * s2) * psi));
        EXPECT_LE(lhs, error_propagation(std::min(mu, nu), std::max(mu, nu)) + 1e-9);
    }
}
