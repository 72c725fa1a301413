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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "cli.hpp"
#include "netcert/certificate_io.hpp"
#include "oracles.hpp"

using namespace netcert;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "netcert");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NETCERT_TEST_DATA_DIR) + "/" + name; }

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("netcert_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

}  // namespace

TEST(CliAnalyze, TriangleText) {
    const auto r = run({"analyze", data("triangle.graph")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("case: Case1"), std::string::npos);
    EXPECT_NE(r.out.find("contradiction: 6 > 4.7320508076"), std::string::npos);
    EXPECT_NE(r.out.find("f_min: 0.95155"), std::string::npos);
    EXPECT_NE(r.out.find("certificate: accepted"), std::string::npos);
}

TEST(CliAnalyze, Fig2Json) {
    const auto r = run({"analyze", data("fig2.graph"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["verdict"], "accepted");
    EXPECT_EQ(j["contradiction"]["lhs"], 6);
    EXPECT_EQ(j["fidelity"]["q_overlap"], 1);
    EXPECT_NEAR(j["fidelity"]["f_min"].get<double>(), 0.952, 0.0005);
    // The embedded certificate is a valid certificate document.
    const auto cert = certificate_from_json(j["certificate"]);
    EXPECT_TRUE(verify_certificate(cert).accepted);
}

TEST(CliAnalyze, StarReportsDelta) {
    const auto r = run({"analyze", data("star.graph"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto delta = Json::parse(r.out)["fidelity"]["delta_max"].get<double>();
    EXPECT_GE(delta, 0.0484);
    EXPECT_LE(delta, 0.0485);
}

TEST(CliAnalyze, TextContainsCaseAndFmin) {
    for (const char* name : {"triangle.graph", "fig2.graph", "star.graph", "star_center3.graph", "case3.graph"}) {
        const auto g = parse_graph(oracle::read_data(name));
        const auto report = cli::analyze(g);
        const auto text = cli::report_to_text(report);
        EXPECT_NE(text.find(std::string(to_string(report.certificate.label))), std::string::npos) << name;
        EXPECT_NE(text.find(fmt::format("f_min: {:.10f}", report.fidelity.f_min)), std::string::npos) << name;
        EXPECT_EQ(certificate_from_json(cli::report_to_json(report)["certificate"]), report.certificate);
    }
}

TEST(CliAnalyze, ExitCodes) {
    auto r = run({"analyze", data("two_vertex.graph")});
    EXPECT_EQ(r.code, cli::kNotCovered);
    EXPECT_NE(r.err.find("not covered by Theorem 1"), std::string::npos);
    r = run({"analyze", data("matching.graph")});
    EXPECT_EQ(r.code, cli::kNotCovered);
    r = run({"analyze", data("bad_vertex.graph")});
    EXPECT_EQ(r.code, cli::kParseError);
    EXPECT_NE(r.err.find("line 4"), std::string::npos);
    r = run({"analyze", data("missing.graph")});
    EXPECT_EQ(r.code, cli::kParseError);
    r = run({"analyze", data("triangle.graph"), "--format", "yaml"});
    EXPECT_EQ(r.code, cli::kParseError);
    r = run({});
    EXPECT_EQ(r.code, cli::kParseError);
}

TEST(CliAnalyze, DeterministicJson) {
    TempDir tmp;
    const auto a = run({"analyze", data("star.graph"), "--format", "json", "--out", tmp.file("a.json")});
    const auto b = run({"analyze", data("star.graph"), "--format", "json", "--out", tmp.file("b.json")});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(slurp(tmp.file("a.json")), slurp(tmp.file("b.json")));
}

TEST(CliVerify, RoundTripAndRejections) {
    TempDir tmp;
    const auto cert = tmp.file("cert.json");
    ASSERT_EQ(run({"analyze", data("triangle.graph"), "--out", cert}).code, 0);
    auto r = run({"verify", cert, data("triangle.graph")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("accepted"), std::string::npos);

    // Different graph.
    r = run({"verify", cert, data("fig2.graph")});
    EXPECT_EQ(r.code, cli::kRejected);
    EXPECT_NE(r.err.find("different graph"), std::string::npos);

    // Byte corruption.
    auto text = slurp(cert);
    const auto corrupt = tmp.file("corrupt.json");
    auto broken = text;
    broken[broken.size() / 3] = '@';
    write(corrupt, broken);
    EXPECT_EQ(run({"verify", corrupt, data("triangle.graph")}).code, cli::kRejected);

    // Well-formed but wrong: one comm_exponent flipped.
    auto j = Json::parse(text);
    j["contradiction"]["comm_exponent"] = (j["contradiction"]["comm_exponent"].get<int>() % 2) + 1;
    write(corrupt, j.dump(2));
    r = run({"verify", corrupt, data("triangle.graph")});
    EXPECT_EQ(r.code, cli::kRejected);
    EXPECT_NE(r.err.find("contradiction"), std::string::npos);

    // A tampered base claim names its step.
    j = Json::parse(text);
    for (auto& c : j["claims"]) {
        if (c["operator"]["phase"] == 0) {
            c["operator"]["phase"] = 1;
            break;
        }
    }
    write(corrupt, j.dump(2));
    EXPECT_EQ(run({"verify", corrupt, data("triangle.graph")}).code, cli::kRejected);

    EXPECT_EQ(run({"verify", tmp.file("none.json"), data("triangle.graph")}).code, cli::kParseError);
}

TEST(CliBounds, Outputs) {
    auto r = run({"bounds", "--d", "3", "--q-overlap", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("f_min: 0.95155"), std::string::npos);
    r = run({"bounds", "--analytic-limit", "--q-overlap", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_NEAR(j["delta_max"].get<double>(), (3 - std::sqrt(5.0)) / 8, 1e-12);
    EXPECT_NEAR(j["f_min"].get<double>(), 0.905, 0.0005);
    r = run({"bounds", "--d", "3", "--q-overlap", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    j = Json::parse(r.out);
    EXPECT_LT(j["delta_max"].get<double>(), 0.0484);
    EXPECT_NEAR(j["delta_max"].get<double>(), fidelity_threshold(3, 2).delta_max, 1e-15);
    EXPECT_EQ(run({"bounds", "--d", "4"}).code, cli::kParseError);
    EXPECT_EQ(run({"bounds", "--d", "3", "--q-overlap", "0"}).code, cli::kParseError);
    EXPECT_EQ(run({"bounds"}).code, cli::kParseError);
}

TEST(CliSelftest, PassesAndDetectsFaults) {
    auto r = run({"selftest", "--max-d", "5", "--seed", "7"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("selftest passed"), std::string::npos);
    const auto again = run({"selftest", "--max-d", "5", "--seed", "7"});
    // Timings differ between runs; the verdict lines do not.
    auto strip = [](const std::string& s) {
        std::string out;
        std::istringstream in(s);
        for (std::string line; std::getline(in, line);) out += line.substr(0, line.find(" cases")) + "\n";
        return out;
    };
    EXPECT_EQ(strip(r.out), strip(again.out));
    r = run({"selftest", "--max-d", "5", "--inject-fault"});
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}
