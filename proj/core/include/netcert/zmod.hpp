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
#include <optional>
#include <vector>

namespace netcert {

// Arithmetic in Z_d. Values are kept in [0, d).

bool is_prime(std::uint64_t n);

inline std::uint32_t mod_reduce(std::int64_t v, std::uint32_t d) {
    auto r = v % static_cast<std::int64_t>(d);
    return static_cast<std::uint32_t>(r < 0 ? r + d : r);
}

inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t d) {
    return static_cast<std::uint32_t>((std::uint64_t{a} + b) % d);
}

inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t d) {
    return static_cast<std::uint32_t>((std::uint64_t{a} + d - b % d) % d);
}

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t d) {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % d);
}

inline std::uint32_t mod_neg(std::uint32_t a, std::uint32_t d) {
    return a == 0 ? 0 : d - a;
}

/// Multiplicative inverse of a nonzero a modulo prime d.
/// Throws InvalidArgument when a == 0 mod d.
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t d);

std::uint32_t mod_pow(std::uint32_t base, std::uint64_t exp, std::uint32_t d);

/// Solves A c = b over Z_d (d prime) by Gaussian elimination. `a` is row-major
/// with rows.size() equations. Returns one solution (free variables set to 0)
/// or nullopt when the system is inconsistent.
std::optional<std::vector<std::uint32_t>> solve_mod(std::vector<std::vector<std::uint32_t>> a,
                                                    std::vector<std::uint32_t> b, std::uint32_t d);

}  // namespace netcert
