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

#include "netcert/graph_state.hpp"

#include <cmath>

#include <fmt/core.h>

#include "netcert/errors.hpp"
#include "netcert/zmod.hpp"

namespace netcert {

PauliWord generator(const Multigraph& g, std::size_t i) {
    if (i >= g.size()) throw InvalidArgument(fmt::format("generator index {} out of range", i));
    std::vector<SiteExponent> sites(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) sites[j].z = g.weight(i, j);
    sites[i].x = 1;
    return PauliWord(g.dim(), 0, std::move(sites));
}

GeneratorSet generators(const Multigraph& g) {
    GeneratorSet out{{}, g};
    out.generators.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out.generators.push_back(generator(g, i));
    return out;
}

PauliWord stabilizer_element(const Multigraph& g, const std::vector<std::uint32_t>& exponents) {
    if (exponents.size() != g.size()) throw DimensionMismatch("stabilizer_element: wrong exponent count");
    PauliWord acc(g.dim(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (exponents[i] % g.dim() == 0) continue;
        acc = pw_mul(acc, pw_pow(generator(g, i), exponents[i]));
    }
    return acc;
}

StabilizerVerdict expectation(const Multigraph& g, const PauliWord& p) {
    if (p.dim() != g.dim()) throw DimensionMismatch("expectation: word dimension differs from graph");
    if (p.size() != g.size()) throw DimensionMismatch("expectation: word site count differs from graph");
    const auto n = g.size();
    const auto d = g.dim();

    // X-block of the generator tableau: column i holds the X exponents of g_i.
    std::vector<std::vector<std::uint32_t>> xblock(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) xblock[i][i] = 1;
    std::vector<std::uint32_t> rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = p.site(j).x;

    StabilizerVerdict verdict{{0.0, 0.0}, false, 0, {}};
    auto sol = solve_mod(std::move(xblock), std::move(rhs), d);
    if (!sol) return verdict;

    const auto element = stabilizer_element(g, *sol);
    for (std::size_t j = 0; j < n; ++j) {
        if (element.site(j) != p.site(j)) return verdict;
    }
    verdict.in_group = true;
    verdict.phase_exponent = mod_sub(p.phase(), element.phase(), d);
    verdict.value = omega_power(d, verdict.phase_exponent);
    verdict.exponents = std::move(*sol);
    return verdict;
}

std::vector<std::complex<double>> dense_state(const Multigraph& g, const DenseConfig& config) {
    const auto d = g.dim();
    const auto n = g.size();
    const auto dim = checked_dense_dim(d, n, config);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    const auto edges = g.edges();

    std::vector<std::complex<double>> psi(dim);
    std::vector<std::uint32_t> digits(n, 0);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::uint64_t ph = 0;
        for (const auto& e : edges) ph += std::uint64_t{e.weight} * digits[e.u] % d * digits[e.v];
        psi[idx] = amp * omega_power(d, static_cast<std::int64_t>(ph % d));
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < d) break;
            digits[i] = 0;
        }
    }

    std::vector<std::complex<double>> image(dim);
    for (std::size_t i = 0; i < n; ++i) {
        pw_apply(generator(g, i), psi, image);
        for (std::size_t k = 0; k < dim; ++k) {
            if (std::abs(image[k] - psi[k]) > 1e-9) {
                throw InternalCheckFailed(fmt::format("dense_state: generator {} does not stabilize the state", i + 1));
            }
        }
    }
    return psi;
}

std::complex<double> dense_expectation(const Multigraph& g, const PauliWord& p, const DenseConfig& config) {
    if (p.dim() != g.dim() || p.size() != g.size()) {
        throw DimensionMismatch("dense_expectation: word does not match graph register");
    }
    const auto psi = dense_state(g, config);
    std::vector<std::complex<double>> image(psi.size());
    pw_apply(p, psi, image);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < psi.size(); ++k) acc += std::conj(psi[k]) * image[k];
    return acc;
}

}  // namespace netcert
