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

#include <benchmark/benchmark.h>

#include <random>

#include "netcert/graph_state.hpp"
#include "netcert/pauli.hpp"

namespace {

using namespace netcert;

PauliWord random_word(std::mt19937_64& rng, std::uint32_t d, std::size_t n) {
    std::vector<SiteExponent> s(n);
    for (auto& e : s) e = {static_cast<std::uint32_t>(rng() % d), static_cast<std::uint32_t>(rng() % d)};
    return PauliWord(d, 0, s);
}

Multigraph random_graph(std::mt19937_64& rng, std::uint32_t d, std::size_t n) {
    Multigraph g(d, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.set_weight(i, j, static_cast<std::uint32_t>(rng() % d));
    }
    return g;
}

void BM_Multiply(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_word(rng, 5, n), b = random_word(rng, 5, n);
    for (auto _ : state) benchmark::DoNotOptimize(pw_mul(a, b));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(4, 256);

void BM_Power(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto a = random_word(rng, 7, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pw_pow(a, 6));
}
BENCHMARK(BM_Power)->RangeMultiplier(4)->Range(4, 256);

void BM_Expectation(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = random_graph(rng, 3, n);
    std::vector<std::uint32_t> ex(n);
    for (auto& e : ex) e = rng() % 3;
    const auto p = stabilizer_element(g, ex);
    for (auto _ : state) benchmark::DoNotOptimize(expectation(g, p));
}
BENCHMARK(BM_Expectation)->RangeMultiplier(2)->Range(4, 64);

void BM_DenseExpectation(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = random_graph(rng, 3, n);
    const auto p = random_word(rng, 3, n);
    for (auto _ : state) benchmark::DoNotOptimize(dense_expectation(g, p));
}
BENCHMARK(BM_DenseExpectation)->DenseRange(2, 6);

}  // namespace
