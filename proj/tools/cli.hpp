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

#include <iosfwd>
#include <string>
#include <vector>

#include "netcert/bounds.hpp"
#include "netcert/certificate.hpp"
#include "netcert/certificate_io.hpp"

namespace netcert::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kNotCovered = 2,
    kInternalError = 3,
    kRejected = 4,
};

/// Everything `analyze` learns about one graph.
struct AnalysisReport {
    Multigraph graph{2, 1};
    Certificate certificate;
    Verdict verdict;
    FidelityBound fidelity;
};

/// Full pipeline: preconditions, normalize, build, verify, fidelity bound.
/// Throws PreconditionFailed, NormalizationExhausted or InternalCheckFailed.
AnalysisReport analyze(const Multigraph& graph);

Json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

/// Entry point of the netcert binary; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netcert::cli
