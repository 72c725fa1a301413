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
#include <stdexcept>
#include <string>

namespace netcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller passed arguments that violate an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Operands of a binary Pauli operation disagree on d or site count.
class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A dense realization would exceed the configured dimension cap.
class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Graph text could not be parsed. Carries the 1-based line number (0 when
/// the problem is not tied to a single line).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Graph does not satisfy N >= 3 with some vertex of degree >= 2.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// Lemma-3 style normalization consumed its search space. Should never fire;
/// the message carries the full search trace.
class NormalizationExhausted : public Error {
public:
    using Error::Error;
};

/// build_certificate was called with a case label that does not match the graph.
class CaseMismatch : public Error {
public:
    using Error::Error;
};

/// A self-check inside the library failed. Indicates a bug.
class InternalCheckFailed : public Error {
public:
    using Error::Error;
};

/// Certificate JSON violates the schema. `path()` is a JSON-pointer.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace netcert
