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

#include <cstdint>
#include <string>
#include <vector>

namespace netcert {

struct SelftestOptions {
    /// Largest prime d for the bounds suites.
    std::uint32_t max_d = 7;
    std::uint64_t seed = 20240611;
    /// Test hook: corrupts one value in every suite so the run must fail.
    bool inject_fault = false;
};

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    /// First failure, if any.
    std::string detail;
    double seconds = 0;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    bool passed() const;
};

/// Lemma 1 eigenvalues, Vieta sums, the operator identity, fidelity
/// bound properties, error propagation sampling, symplectic vs. dense
/// expectation values and certificate round trips on random graphs.
/// Deterministic for a fixed seed.
SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace netcert
