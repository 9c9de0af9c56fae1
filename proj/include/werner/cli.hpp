// Copyright 2026 The Werner Diagrams Authors
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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "werner/linalg.hpp"
#include "werner/states.hpp"

namespace werner::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kExitOk = 0,
    kExitBadInput = 1,
    kExitNumerical = 2,
};

/// A state loaded from or written to the state JSON schema.
struct LoadedState {
    std::string kind;  // "pure", "matrix", "pauli" or "zero"
    size_t n = 0;
    std::string label;
    std::optional<PureState> pure;
    CMatrix density;
};

nlohmann::json state_to_json(const LoadedState &s, const std::string &format);
LoadedState state_from_json(const nlohmann::json &j);

/// Runs one command. args excludes the program name. Reports go to out,
/// diagnostics to err. Returns an ExitCode.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace werner::cli
