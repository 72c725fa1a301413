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

#include "netcert/zmod.hpp"

#include "netcert/errors.hpp"

namespace netcert {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

std::uint32_t mod_pow(std::uint32_t base, std::uint64_t exp, std::uint32_t d) {
    std::uint64_t result = 1 % d;
    std::uint64_t b = base % d;
    while (exp > 0) {
        if (exp & 1) result = result * b % d;
        b = b * b % d;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t d) {
    // Extended Euclid; d prime so gcd is 1 whenever a != 0.
    std::int64_t old_r = a % d, r = d;
    std::int64_t old_s = 1, s = 0;
    if (old_r == 0) throw InvalidArgument("mod_inv: 0 has no inverse mod " + std::to_string(d));
    while (r != 0) {
        auto q = old_r / r;
        auto tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw InvalidArgument("mod_inv: modulus is not prime");
    return mod_reduce(old_s, d);
}

std::optional<std::vector<std::uint32_t>> solve_mod(std::vector<std::vector<std::uint32_t>> a,
                                                    std::vector<std::uint32_t> b, std::uint32_t d) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows) throw InvalidArgument("solve_mod: rhs size mismatch");
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] % d == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        std::swap(b[sel], b[r]);
        const auto inv = mod_inv(a[r][c] % d, d);
        for (auto& v : a[r]) v = mod_mul(v % d, inv, d);
        b[r] = mod_mul(b[r] % d, inv, d);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const auto f = a[i][c] % d;
            if (f == 0) continue;
            for (std::size_t k = 0; k < cols; ++k) a[i][k] = mod_sub(a[i][k] % d, mod_mul(f, a[r][k], d), d);
            b[i] = mod_sub(b[i] % d, mod_mul(f, b[r], d), d);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (b[i] % d != 0) return std::nullopt;
    }
    std::vector<std::uint32_t> x(cols, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace netcert
