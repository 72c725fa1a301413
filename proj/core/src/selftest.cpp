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

#include "netcert/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Dense>
#include <fmt/core.h>

#include "netcert/bounds.hpp"
#include "netcert/certificate.hpp"
#include "netcert/errors.hpp"
#include "netcert/graph_state.hpp"
#include "netcert/zmod.hpp"

namespace netcert {

bool SelftestReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.passed; });
}

namespace {

std::vector<std::uint32_t> primes_up_to(std::uint32_t max_d) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= max_d; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

// Runs `body`, which calls fail() on the first mismatch and bumps cases.
SelftestCheck timed(std::string name, const std::function<void(SelftestCheck&)>& body) {
    SelftestCheck c{std::move(name), true, 0, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = fmt::format("exception: {}", e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

void fail(SelftestCheck& c, std::string detail) {
    if (c.passed) c.detail = std::move(detail);
    c.passed = false;
}

Multigraph random_graph(std::mt19937_64& rng, std::uint32_t d, std::size_t n, double density) {
    Multigraph g(d, n);
    std::bernoulli_distribution edge(density);
    std::uniform_int_distribution<std::uint32_t> w(1, d - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edge(rng)) g.set_weight(i, j, w(rng));
        }
    }
    return g;
}

PauliWord random_word(std::mt19937_64& rng, std::uint32_t d, std::size_t n) {
    std::uniform_int_distribution<std::uint32_t> e(0, d - 1);
    std::vector<SiteExponent> sites(n);
    for (auto& s : sites) s = {e(rng), e(rng)};
    return PauliWord(d, 0, std::move(sites));
}

Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& opt) {
    const auto tol = kTolerances;
    const double fault = opt.inject_fault ? 1e-3 : 0.0;
    const auto primes = primes_up_to(std::max<std::uint32_t>(opt.max_d, 2));
    std::mt19937_64 rng(opt.seed);
    SelftestReport report;

    report.checks.push_back(timed("lemma1_eigenvalue", [&](SelftestCheck& c) {
        for (auto d : primes) {
            for (std::uint32_t q = 1; q < d; ++q) {
                const double want = lemma1_bound(d);
                const double dense = lemma1_numeric_max(d, q) + fault;
                const double rank2 = lemma1_rank2_max(d, q);
                ++c.cases;
                if (std::abs(dense - want) > tol.unit || std::abs(rank2 - want) > tol.unit) {
                    fail(c, fmt::format("d={} q={}: dense {} rank-2 {} bound {}", d, q, dense, rank2, want));
                }
            }
        }
    }));

    report.checks.push_back(timed("vieta_sum", [&](SelftestCheck& c) {
        for (auto d : primes) {
            for (std::uint32_t q = 1; q < d; ++q) {
                for (std::uint32_t k = 1; k < d; ++k) {
                    const double v = std::abs(vieta_sum(d, q, k)) + fault;
                    ++c.cases;
                    if (v > tol.unit) fail(c, fmt::format("d={} q={} k={}: |sum| = {}", d, q, k, v));
                }
            }
        }
    }));

    report.checks.push_back(timed("operator_identity", [&](SelftestCheck& c) {
        const double lambdas[] = {0.5, 1.0, 2.0};
        for (auto d : primes) {
            if (d > 7) break;
            for (std::uint32_t q = 1; q < d; ++q) {
                for (double l1 : lambdas) {
                    for (double l2 : lambdas) {
                        for (std::uint32_t n = 1; n <= 2; ++n) {
                            const double limit = operator_identity_tolerance(d, l1, l2, n, tol);
                            const double dev = operator_identity_check(d, q, l1, l2, n) + fault * limit * 2e3;
                            ++c.cases;
                            if (dev > limit) {
                                fail(c, fmt::format("d={} q={} l=({},{}) n={}: deviation {} > {}", d, q, l1, l2, n, dev, limit));
                            }
                        }
                    }
                }
            }
        }
    }));

    report.checks.push_back(timed("fidelity_threshold", [&](SelftestCheck& c) {
        for (auto d : primes) {
            double prev = 1.0;
            for (std::uint64_t q = 1; q <= 8; ++q) {
                const auto b = fidelity_threshold(d, q);
                ++c.cases;
                const double delta = b.delta_max + fault;
                // At delta_max the condition beta sqrt(delta) + 2 delta < gamma / 2 is tight.
                const double lhs = b.beta * std::sqrt(delta) + 2.0 * delta;
                if (!(delta > 0) || !(b.f_min > 0 && b.f_min < 1) || delta > prev + tol.unit ||
                    std::abs(lhs - b.gamma / 2.0) > tol.unit) {
                    fail(c, fmt::format("d={} q={}: delta_max {} f_min {} tightness {}", d, q, delta, b.f_min,
                                        lhs - b.gamma / 2.0));
                }
                prev = delta;
            }
        }
    }));

    report.checks.push_back(timed("error_propagation", [&](SelftestCheck& c) {
        std::uniform_int_distribution<std::uint32_t> pick_d(2, 3);
        std::normal_distribution<double> gauss;
        for (int trial = 0; trial < 500; ++trial) {
            const std::uint32_t d = pick_d(rng);
            auto unitary_root = [&] {
                std::uniform_int_distribution<std::uint32_t> e(0, d - 1);
                Eigen::VectorXcd diag(4);
                for (int i = 0; i < 4; ++i) {
                    const double a = 2.0 * M_PI * e(rng) / d;
                    diag(i) = {std::cos(a), std::sin(a)};
                }
                const auto u = random_unitary(rng, 4);
                return Eigen::MatrixXcd(u * diag.asDiagonal() * u.adjoint());
            };
            const auto s1 = unitary_root();
            const auto s2 = unitary_root();
            Eigen::VectorXcd psi(4);
            for (int i = 0; i < 4; ++i) psi(i) = {gauss(rng), gauss(rng)};
            psi.normalize();
            const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
            const double mu = std::abs(psi.dot((id - s1) * psi));
            const double nu = std::abs(psi.dot((id - s2) * psi));
            const double measured = std::abs(psi.dot((id - s1 * s2) * psi)) + fault * 1e4;
            ++c.cases;
            const double bound = error_propagation(mu, std::max(mu, nu));
            if (measured > bound + tol.unit) {
                fail(c, fmt::format("trial {}: |<1 - s1 s2>| = {} > {}", trial, measured, bound));
            }
        }
    }));

    report.checks.push_back(timed("oracle_equivalence", [&](SelftestCheck& c) {
        for (std::uint32_t d : {2u, 3u, 5u}) {
            for (std::size_t n = 1; n <= 3; ++n) {
                for (int rep = 0; rep < 10; ++rep) {
                    const auto g = random_graph(rng, d, n, 0.6);
                    const auto state = dense_state(g);
                    for (int w = 0; w < 50; ++w) {
                        // Half the words are stabilizer elements, so both outcomes are exercised.
                        PauliWord p = random_word(rng, d, n);
                        if (w % 2 == 0) {
                            std::uniform_int_distribution<std::uint32_t> e(0, d - 1);
                            std::vector<std::uint32_t> ex(n);
                            for (auto& x : ex) x = e(rng);
                            p = stabilizer_element(g, ex).with_phase(e(rng));
                        }
                        const auto sym = expectation(g, p).value;
                        std::vector<std::complex<double>> out(state.size());
                        pw_apply(p, state, out);
                        std::complex<double> dense = 0;
                        for (std::size_t k = 0; k < state.size(); ++k) dense += std::conj(state[k]) * out[k];
                        dense += fault;
                        ++c.cases;
                        if (std::abs(sym - dense) > tol.oracle) {
                            fail(c, fmt::format("d={} {}: symplectic ({},{}) dense ({},{})", d, p.str(), sym.real(),
                                                sym.imag(), dense.real(), dense.imag()));
                        }
                    }
                }
            }
        }
    }));

    report.checks.push_back(timed("certificate_round_trip", [&](SelftestCheck& c) {
        for (std::uint32_t d : {2u, 3u, 5u}) {
            std::uniform_int_distribution<std::size_t> size(3, 6);
            for (int rep = 0; rep < 20; ++rep) {
                const auto g = random_graph(rng, d, size(rng), 0.5);
                if (!check_preconditions(g)) continue;
                auto cert = prove(g);
                if (opt.inject_fault) cert.contradiction.comm_exponent = mod_add(cert.contradiction.comm_exponent, 1, d);
                ++c.cases;
                if (auto v = verify_certificate(cert); !v.accepted) {
                    fail(c, fmt::format("d={} graph{}: {}", d, format_graph(g), v.describe()));
                }
            }
        }
    }));

    return report;
}

}  // namespace netcert
