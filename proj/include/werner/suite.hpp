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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "werner/analysis.hpp"

namespace werner {

struct SuiteOptions {
    uint64_t seed = kDefaultSeed;
    size_t twirl_samples = 100000;
};

/// Outcome of one self-check. `passed` reflects tool health only: conjecture
/// outcomes are recorded in `findings` and never fail a check.
struct CheckResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    std::vector<std::string> findings;
    double seconds = 0;
};

/// Runs every structural self-check and conjecture experiment in order.
std::vector<CheckResult> run_suite(const SuiteOptions &options = {});

void to_json(nlohmann::json &j, const CheckResult &r);

}  // namespace werner
