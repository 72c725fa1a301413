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

#include <map>
#include <random>

#include "mutations.hpp"
#include "netcert/certificate_io.hpp"
#include "oracles.hpp"

using namespace netcert;

namespace {

struct RoundTripStats {
    std::size_t graphs = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

void round_trip(const Multigraph& g, RoundTripStats& st) {
    if (!check_preconditions(g)) return;
    ++st.graphs;
    std::string why;
    try {
        const auto cert = prove(g);
        const auto v = verify_certificate(cert);
        if (!v.accepted) why = v.describe();
    } catch (const std::exception& e) {
        why = e.what();
    }
    if (!why.empty() && st.failures++ == 0) st.first_failure = format_graph(g) + why;
}

}  // namespace

TEST(CertificateProperties, RoundTripExhaustiveSmall) {
    for (std::uint32_t d : {2u, 3u}) {
        for (std::size_t n = 3; n <= 5; ++n) {
            RoundTripStats st;
            oracle::for_each_graph(d, n, [&](const Multigraph& g) { round_trip(g, st); });
            EXPECT_EQ(st.failures, 0u) << st.first_failure;
            EXPECT_GT(st.graphs, 0u);
        }
    }
    RoundTripStats st;
    oracle::for_each_graph(5, 4, [&](const Multigraph& g) { round_trip(g, st); });
    EXPECT_EQ(st.failures, 0u) << st.first_failure;
}

TEST(CertificateProperties, RoundTripRandomD5N5) {
    std::mt19937_64 rng(5);
    RoundTripStats st;
    for (int rep = 0; rep < 3000; ++rep) round_trip(oracle::random_graph(rng, 5, 5, 0.3 + 0.1 * (rep % 6)), st);
    EXPECT_EQ(st.failures, 0u) << st.first_failure;
}

TEST(CertificateProperties, SerializationIsIdentity) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 300; ++rep) {
        const std::uint32_t d = std::vector<std::uint32_t>{2, 3, 5}[rep % 3];
        const auto g = oracle::random_graph(rng, d, 3 + rep % 3, 0.6);
        if (!check_preconditions(g)) continue;
        const auto cert = prove(g);
        const auto text = serialize(cert);
        ASSERT_EQ(deserialize(text), cert);
        ASSERT_EQ(serialize(deserialize(text)), text);
    }
}

TEST(CertificateProperties, MutationCampaign) {
    std::mt19937_64 rng(2024);
    std::map<std::string, std::size_t> kinds;
    std::size_t certs = 0;
    for (int rep = 0; rep < 60; ++rep) {
        const std::uint32_t d = std::vector<std::uint32_t>{2, 3, 5}[rep % 3];
        const auto g = oracle::random_graph(rng, d, 3 + rep % 3, 0.6);
        if (!check_preconditions(g)) continue;
        const auto cert = prove(g);
        ++certs;
        for (int m = 0; m < 100; ++m) {
            std::string kind;
            const auto bad = mutation::mutate(cert, rng, &kind);
            ++kinds[kind];
            ASSERT_FALSE(verify_certificate(bad).accepted) << kind << " on\n" << format_graph(g);
        }
    }
    EXPECT_GT(certs, 30u);
    EXPECT_GE(kinds.size(), 8u);
}

TEST(CertificateProperties, Determinism) {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        const auto g = oracle::random_graph(rng, 3, 5, 0.5);
        if (!check_preconditions(g)) continue;
        EXPECT_EQ(serialize(prove(g)), serialize(prove(g)));
    }
}
