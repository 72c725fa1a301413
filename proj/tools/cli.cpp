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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#ifdef NETCERT_SYSTEM_CLI11
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <fmt/core.h>
#include <fmt/ostream.h>

#include "netcert/errors.hpp"
#include "netcert/selftest.hpp"

namespace netcert::cli {

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json fidelity_to_json(const FidelityBound& b) {
    Json j;
    if (b.analytic_limit) {
        j["d"] = "limit";
    } else {
        j["d"] = b.d;
    }
    j["q_overlap"] = b.q_overlap;
    j["beta"] = b.beta;
    j["gamma"] = b.gamma;
    j["delta_max"] = b.delta_max;
    j["f_min"] = b.f_min;
    return j;
}

std::string fidelity_to_text(const FidelityBound& b) {
    std::string out;
    out += b.analytic_limit ? "d: limit (gamma = 1)\n" : fmt::format("d: {}\n", b.d);
    out += fmt::format("q_overlap: {}\n", b.q_overlap);
    out += fmt::format("beta: {}\n", b.beta);
    out += fmt::format("gamma: {:.10f}\n", b.gamma);
    out += fmt::format("delta_max: {:.10f}\n", b.delta_max);
    out += fmt::format("f_min: {:.10f}\n", b.f_min);
    return out;
}

struct Graphs {
    std::optional<Multigraph> graph;
    int code = kOk;
};

Graphs load_graph(const std::string& path, std::ostream& err) {
    auto text = read_file(path);
    if (!text) {
        fmt::print(err, "error: cannot read graph file '{}'\n", path);
        return {std::nullopt, kParseError};
    }
    try {
        return {parse_graph(*text), kOk};
    } catch (const ParseError& e) {
        fmt::print(err, "error: {}: {}\n", path, e.what());
    } catch (const InvalidArgument& e) {
        fmt::print(err, "error: {}: {}\n", path, e.what());
    }
    return {std::nullopt, kParseError};
}

int cmd_analyze(const std::string& graph_path, const std::string& out_path, const std::string& format,
                std::ostream& out, std::ostream& err) {
    auto loaded = load_graph(graph_path, err);
    if (!loaded.graph) return loaded.code;
    AnalysisReport report;
    try {
        report = analyze(*loaded.graph);
    } catch (const PreconditionFailed& e) {
        fmt::print(err, "not covered by Theorem 1: {}\n", e.what());
        return kNotCovered;
    } catch (const Error& e) {
        fmt::print(err, "internal error: {}\n", e.what());
        return kInternalError;
    }
    if (!report.verdict.accepted) {
        fmt::print(err, "internal error: certificate {}\n", report.verdict.describe());
        return kInternalError;
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        f << serialize(report.certificate);
        if (!f) {
            fmt::print(err, "error: cannot write '{}'\n", out_path);
            return kInternalError;
        }
    }
    if (format == "json") {
        out << report_to_json(report).dump(2) << "\n";
    } else {
        out << report_to_text(report);
    }
    return kOk;
}

int cmd_verify(const std::string& cert_path, const std::string& graph_path, std::ostream& out, std::ostream& err) {
    auto loaded = load_graph(graph_path, err);
    if (!loaded.graph) return loaded.code;
    auto text = read_file(cert_path);
    if (!text) {
        fmt::print(err, "error: cannot read certificate '{}'\n", cert_path);
        return kParseError;
    }
    Certificate cert;
    try {
        cert = deserialize(*text);
    } catch (const SchemaError& e) {
        fmt::print(err, "rejected: malformed certificate at {}\n", e.what());
        return kRejected;
    } catch (const Error& e) {
        fmt::print(err, "rejected: malformed certificate: {}\n", e.what());
        return kRejected;
    }
    if (!(cert.graph == *loaded.graph)) {
        fmt::print(err, "rejected: certificate was issued for a different graph\n");
        return kRejected;
    }
    const auto verdict = verify_certificate(cert);
    if (!verdict.accepted) {
        fmt::print(err, "{}\n", verdict.describe());
        return kRejected;
    }
    fmt::print(out, "accepted: {} ({} claims, {} steps), {} > {:.10f}\n", to_string(cert.label), cert.claims.size(),
               cert.steps.size(), cert.lhs(), cert.bound());
    return kOk;
}

int cmd_bounds(std::uint32_t d, std::uint64_t q, bool limit, const std::string& format, std::ostream& out,
               std::ostream& err) {
    FidelityBound b;
    try {
        if (limit) {
            b = fidelity_threshold_limit(q);
        } else {
            if (d == 0) {
                fmt::print(err, "error: --d is required unless --analytic-limit is given\n");
                return kParseError;
            }
            b = fidelity_threshold(d, q);
        }
    } catch (const InvalidArgument& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kParseError;
    }
    if (format == "json") {
        out << fidelity_to_json(b).dump(2) << "\n";
    } else {
        out << fidelity_to_text(b);
    }
    return kOk;
}

int cmd_selftest(const SelftestOptions& opt, std::ostream& out) {
    const auto report = run_selftest(opt);
    for (const auto& c : report.checks) {
        fmt::print(out, "{} {} ({} cases, {:.2f}s){}\n", c.passed ? "PASS" : "FAIL", c.name, c.cases, c.seconds,
                   c.detail.empty() ? "" : ": " + c.detail);
    }
    fmt::print(out, "selftest {} (seed {}, max d {})\n", report.passed() ? "passed" : "FAILED", opt.seed, opt.max_d);
    return report.passed() ? kOk : kInternalError;
}

}  // namespace

AnalysisReport analyze(const Multigraph& graph) {
    if (!check_preconditions(graph)) {
        throw PreconditionFailed(graph.size() < 3 ? "the graph has fewer than three vertices"
                                                  : "no vertex has two or more neighbours");
    }
    AnalysisReport r;
    r.graph = graph;
    r.certificate = prove(graph);
    r.verdict = verify_certificate(r.certificate);
    r.fidelity = fidelity_threshold(graph.dim(), r.certificate.proof.q_overlap);
    return r;
}

Json report_to_json(const AnalysisReport& r) {
    const auto& c = r.certificate;
    return Json{
        {"input", Json{{"d", r.graph.dim()}, {"n", r.graph.size()}, {"edges", r.graph.edges().size()}}},
        {"preconditions", true},
        {"case", std::string(to_string(c.label))},
        {"normalization_steps", c.normalization.steps.size()},
        {"verdict", r.verdict.accepted ? "accepted" : r.verdict.describe()},
        {"contradiction", Json{{"lhs", c.lhs()}, {"bound", c.bound()}, {"comm_exponent", c.contradiction.comm_exponent}}},
        {"fidelity", fidelity_to_json(r.fidelity)},
        {"certificate", certificate_to_json(c)},
    };
}

std::string report_to_text(const AnalysisReport& r) {
    const auto& c = r.certificate;
    std::string out;
    out += fmt::format("graph: d={} N={} edges={}\n", r.graph.dim(), r.graph.size(), r.graph.edges().size());
    out += fmt::format("case: {}\n", to_string(c.label));
    out += fmt::format("normalization: {} steps ({} local complementations)\n", c.normalization.steps.size(),
                       c.normalization.complementations());
    out += fmt::format("certificate: {} ({} claims, {} steps, proof part {})\n",
                       r.verdict.accepted ? "accepted" : r.verdict.describe(), c.claims.size(), c.steps.size(),
                       c.proof.part);
    out += fmt::format("contradiction: {} > {:.10f} (comm_exponent {})\n", c.lhs(), c.bound(), c.contradiction.comm_exponent);
    out += fidelity_to_text(r.fidelity);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-preparability certificates for graph states in bipartite quantum networks", "netcert"};
    app.require_subcommand(1);

    std::string graph_path, cert_path, out_path, format = "text";
    auto* analyze_cmd = app.add_subcommand("analyze", "Normalize a graph, build and check its certificate");
    analyze_cmd->add_option("graph", graph_path, "Graph file")->required();
    analyze_cmd->add_option("--out", out_path, "Write the certificate JSON here");
    analyze_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
    verify_cmd->add_option("cert", cert_path, "Certificate JSON")->required();
    verify_cmd->add_option("graph", graph_path, "Graph file")->required();

    std::uint32_t d = 0;
    std::uint64_t q = 1;
    bool limit = false;
    std::string bounds_format = "text";
    auto* bounds_cmd = app.add_subcommand("bounds", "Fidelity threshold for a dimension and overlap");
    bounds_cmd->add_option("--d", d, "Prime local dimension");
    bounds_cmd->add_option("--q-overlap", q, "|N1 & N2| + 1 in Case 2, else 1")->check(CLI::PositiveNumber);
    bounds_cmd->add_flag("--analytic-limit", limit, "Use the d -> infinity limit (gamma = 1)");
    bounds_cmd->add_option("--format", bounds_format, "Output format")->check(CLI::IsMember({"json", "text"}));

    SelftestOptions st;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the numeric self-test suite");
    selftest_cmd->add_option("--max-d", st.max_d, "Largest prime d for the bounds suites")->check(CLI::Range(2u, 97u));
    selftest_cmd->add_option("--seed", st.seed, "Seed for randomized suites");
    selftest_cmd->add_flag("--inject-fault", st.inject_fault, "Corrupt results (tests the harness)")->group("");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    if (*analyze_cmd) return cmd_analyze(graph_path, out_path, format, out, err);
    if (*verify_cmd) return cmd_verify(cert_path, graph_path, out, err);
    if (*bounds_cmd) return cmd_bounds(d, q, limit, bounds_format, out, err);
    return cmd_selftest(st, out);
}

}  // namespace netcert::cli
