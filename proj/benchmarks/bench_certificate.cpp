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

#include "netcert/certificate.hpp"
#include "netcert/certificate_io.hpp"
#include "netcert/normalization.hpp"

namespace {

using namespace netcert;

// Fixed pool of covered graphs so each iteration sees the same inputs.
std::vector<Multigraph> pool(std::uint32_t d, std::size_t n) {
    std::mt19937_64 rng(d * 100 + n);
    std::vector<Multigraph> out;
    while (out.size() < 64) {
        Multigraph g(d, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (rng() % 2) g.set_weight(i, j, 1 + static_cast<std::uint32_t>(rng() % (d - 1)));
            }
        }
        if (check_preconditions(g)) out.push_back(std::move(g));
    }
    return out;
}

void BM_Normalize(benchmark::State& state) {
    const auto graphs = pool(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(normalize(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_Normalize)->Args({3, 5})->Args({5, 5})->Args({5, 8})->Args({7, 12});

void BM_Prove(benchmark::State& state) {
    const auto graphs = pool(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(prove(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_Prove)->Args({3, 5})->Args({5, 5})->Args({5, 8})->Args({7, 12});

void BM_Verify(benchmark::State& state) {
    std::vector<Certificate> certs;
    for (const auto& g : pool(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)))) {
        certs.push_back(prove(g));
    }
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(certs[i++ % certs.size()]));
}
BENCHMARK(BM_Verify)->Args({3, 5})->Args({5, 5})->Args({5, 8})->Args({7, 12});

void BM_SerializeRoundTrip(benchmark::State& state) {
    const auto cert = prove(pool(5, 8).front());
    for (auto _ : state) benchmark::DoNotOptimize(deserialize(serialize(cert)));
}
BENCHMARK(BM_SerializeRoundTrip);

}  // namespace
