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
#include <vector>

#include "netcert/multigraph.hpp"
#include "netcert/pauli.hpp"

namespace netcert {

/// g_i = X_i prod_j Z_j^{gamma[i][j]}, one per vertex, phase 0.
struct GeneratorSet {
    std::vector<PauliWord> generators;
    Multigraph graph;
};

PauliWord generator(const Multigraph& g, std::size_t i);
GeneratorSet generators(const Multigraph& g);

/// Exact expectation of a Pauli word on the graph state.
struct StabilizerVerdict {
    /// 0 or omega^phase_exponent.
    std::complex<double> value;
    bool in_group = false;
    /// Meaningful only when in_group.
    std::uint32_t phase_exponent = 0;
    /// c with omega^{-phase_exponent} P = prod_i g_i^{c_i} (ascending i).
    std::vector<std::uint32_t> exponents;

    /// True when <P> == 1 exactly.
    bool is_one() const noexcept { return in_group && phase_exponent == 0; }
};

/// Symplectic membership test. Throws DimensionMismatch if P does not live on
/// the graph's register.
StabilizerVerdict expectation(const Multigraph& g, const PauliWord& p);

/// prod_i g_i^{c_i} multiplied in ascending vertex order.
PauliWord stabilizer_element(const Multigraph& g, const std::vector<std::uint32_t>& exponents);

/// Dense |G> = prod_{i<j} CZ_ij^{gamma_ij} |+>^N. Checks g_i|G> = |G> for
/// every generator before returning (InternalCheckFailed otherwise).
std::vector<std::complex<double>> dense_state(const Multigraph& g, const DenseConfig& config = {});

/// <G|P|G> by applying the word to the dense state vector.
std::complex<double> dense_expectation(const Multigraph& g, const PauliWord& p, const DenseConfig& config = {});

}  // namespace netcert
