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

#include <random>

#include "netcert/certificate_io.hpp"
#include "netcert/errors.hpp"
#include "oracles.hpp"

using namespace netcert;

namespace {

Certificate triangle_cert() { return prove(parse_graph(oracle::read_data("triangle.graph"))); }

std::string schema_path(const Json& j) {
    try {
        certificate_from_json(j);
    } catch (const SchemaError& e) {
        return e.path();
    }
    return "<accepted>";
}

}  // namespace

TEST(CertificateIo, RoundTripExamples) {
    for (const char* name : {"triangle.graph", "fig2.graph", "star.graph", "star_center3.graph", "case3.graph"}) {
        const auto cert = prove(parse_graph(oracle::read_data(name)));
        const auto text = serialize(cert);
        const auto back = deserialize(text);
        EXPECT_EQ(back, cert) << name;
        EXPECT_EQ(serialize(back), text) << name;
        EXPECT_TRUE(verify_certificate(back).accepted) << name;
    }
}

TEST(CertificateIo, RoundTripRandom) {
    std::mt19937_64 rng(7);
    for (std::uint32_t d : {2u, 3u, 5u, 7u}) {
        for (int rep = 0; rep < 40; ++rep) {
            const auto g = oracle::random_graph(rng, d, 3 + rng() % 4, 0.6);
            if (!check_preconditions(g)) continue;
            const auto cert = prove(g);
            ASSERT_EQ(deserialize(serialize(cert)), cert) << format_graph(g);
        }
    }
}

TEST(CertificateIo, Layout) {
    const auto j = certificate_to_json(triangle_cert());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"version", "d", "n", "graph", "normalization", "claims", "steps",
                                              "contradiction", "proof"}));
    EXPECT_EQ(j["version"], "1");
    EXPECT_EQ(j["d"], 3);
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["graph"], Json::parse("[[1,2,2],[1,3,1]]"));
    EXPECT_EQ(j["normalization"]["case"], "Case1");
    EXPECT_EQ(j["contradiction"]["lhs"], 6);
    EXPECT_NEAR(j["contradiction"]["bound"].get<double>(), 3 + std::sqrt(3.0), 1e-12);
    for (const auto& c : j["claims"]) {
        for (const auto& s : c["operator"]["sites"]) {
            EXPECT_TRUE(s["copy"] == "u" || s["copy"] == "p");
            EXPECT_FALSE(s["x"] == 0 && s["z"] == 0);
        }
    }
}

TEST(CertificateIo, UnknownStepType) {
    auto j = certificate_to_json(triangle_cert());
    j["steps"][1]["type"] = "fact3";
    EXPECT_EQ(schema_path(j), "/steps/1/type");
    try {
        certificate_from_json(j);
    } catch (const SchemaError& e) {
        EXPECT_NE(std::string(e.what()).find("fact3"), std::string::npos);
    }
}

TEST(CertificateIo, VersionMismatch) {
    auto j = certificate_to_json(triangle_cert());
    j["version"] = "2";
    EXPECT_EQ(schema_path(j), "/version");
    j["version"] = 1;
    EXPECT_EQ(schema_path(j), "/version");
}

TEST(CertificateIo, SchemaPaths) {
    const auto base = certificate_to_json(triangle_cert());
    auto j = base;
    j["extra"] = 1;
    EXPECT_EQ(schema_path(j), "/extra");
    j = base;
    j.erase("claims");
    EXPECT_EQ(schema_path(j), "/claims");
    j = base;
    j["d"] = 4;
    EXPECT_EQ(schema_path(j), "/d");
    j = base;
    j["claims"][0]["operator"]["sites"][0]["copy"] = "q";
    EXPECT_EQ(schema_path(j), "/claims/0/operator/sites/0/copy");
    j = base;
    j["claims"][0]["operator"]["sites"][0]["x"] = 3;
    EXPECT_EQ(schema_path(j), "/claims/0/operator/sites/0/x");
    j = base;
    j["claims"][0]["T"] = Json::array({2});
    EXPECT_EQ(schema_path(j), "/claims/0/T");
    j = base;
    j["claims"][0]["operator"]["phase"] = -1;
    EXPECT_EQ(schema_path(j), "/claims/0/operator/phase");
    j = base;
    j["graph"][0] = Json::array({1, 1, 1});
    EXPECT_EQ(schema_path(j), "/graph/0");
    j = base;
    j["contradiction"]["lhs"] = 7;
    EXPECT_EQ(schema_path(j), "/contradiction/lhs");
    j = base;
    j["contradiction"]["bound"] = 4.7;
    EXPECT_EQ(schema_path(j), "/contradiction/bound");
    j = base;
    j["normalization"]["case"] = "Case9";
    EXPECT_EQ(schema_path(j), "/normalization/case");
    j = base;
    j["steps"][0]["claim"] = 3;
    EXPECT_EQ(schema_path(j), "/steps/0/claim");
}

TEST(CertificateIo, InvalidJson) {
    EXPECT_THROW(deserialize("{\"version\": "), SchemaError);
    EXPECT_THROW(deserialize("[]"), SchemaError);
    auto text = serialize(triangle_cert());
    text[text.size() / 2] = '#';
    EXPECT_THROW(deserialize(text), SchemaError);
}
