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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "netcert/certificate.hpp"

namespace netcert {

using Json = nlohmann::ordered_json;

/// Certificate JSON, schema version "1". Vertices and parties are 1-based.
Json certificate_to_json(const Certificate& cert);

/// Strict inverse of certificate_to_json. Throws SchemaError whose path()
/// is a JSON pointer to the offending value.
Certificate certificate_from_json(const Json& j);

/// Pretty-printed JSON with a trailing newline. Deterministic.
std::string serialize(const Certificate& cert);

/// Throws SchemaError (path "") on malformed JSON.
Certificate deserialize(std::string_view text);

}  // namespace netcert
