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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "netcert/multigraph.hpp"

namespace netcert {

// Vertex "1" and "2" of the case analysis are indices 0 and 1.
inline constexpr std::size_t kVertex1 = 0;
inline constexpr std::size_t kVertex2 = 1;

/// Which of the four condition sets a normalized graph satisfies.
///
///   Case1: N1 & N2 empty.
///   Case2: N1 & N2 nonempty and every n in it has N2\{n} != Nn\{2}.
///   Case3: |N1 & N2| == 1 and its n has N2\{n} == Nn\{2}.
///   Case4: |N1 & N2| >= 2, some n has N2\{n} == Nn\{2} and a multiplier
///          a_n zeroing gamma[2][i] + a_n gamma[2][n] gamma[n][i] on Nn\{2}.
enum class CaseLabel { Case1, Case2, Case3, Case4, NotApplicable };

std::string_view to_string(CaseLabel label);
std::optional<CaseLabel> parse_case_label(std::string_view text);

struct RelabelStep {
    /// Vertex i moves to perm[i] (0-based).
    std::vector<std::size_t> perm;
    friend bool operator==(const RelabelStep&, const RelabelStep&) = default;
};

struct LocalComplementStep {
    std::size_t pivot = 0;
    std::uint32_t a = 0;
    friend bool operator==(const LocalComplementStep&, const LocalComplementStep&) = default;
};

using TransformStep = std::variant<RelabelStep, LocalComplementStep>;

struct TransformLog {
    std::vector<TransformStep> steps;

    /// Applies every step in order. Throws InvalidArgument on malformed steps.
    Multigraph replay(const Multigraph& g) const;
    std::size_t complementations() const;

    friend bool operator==(const TransformLog&, const TransformLog&) = default;
};

/// N >= 3 and some vertex has at least two neighbours.
bool check_preconditions(const Multigraph& g);

/// Sorted N1 & N2 (vertices 0 and 1).
std::vector<std::size_t> common_neighbors(const Multigraph& g);

/// N2 \ {n} == Nn \ {2}.
bool twin_condition(const Multigraph& g, std::size_t n);

/// Smallest a in [1, d) with gamma[2][i] + a gamma[2][n] gamma[n][i] == 0 for
/// every i in Nn \ {2}, if any.
std::optional<std::uint32_t> case4_multiplier(const Multigraph& g, std::size_t n);

/// gamma[1][2] != 0 and |N1 \ N2| >= 2 (N1 \ N2 contains vertex 2 itself).
bool is_normal_form(const Multigraph& g);

/// Lowest-index matching case; NotApplicable if the graph is not in normal
/// form or matches none.
CaseLabel classify(const Multigraph& g);

struct NormalizationResult {
    Multigraph graph;
    TransformLog log;
    CaseLabel label = CaseLabel::NotApplicable;
    /// Number of passes through the n-pivot reduction loop.
    std::size_t loop_iterations = 0;
};

/// Relabels and locally complements `g` until it is in normal form and
/// matches one of the four cases. Throws PreconditionFailed when
/// check_preconditions is false, NormalizationExhausted (with the search
/// trace) if the search ever runs dry.
NormalizationResult normalize(const Multigraph& g);

}  // namespace netcert
