// Copyright 2026 The QAQC Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qaqc {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    /// Worst observed deviation or a short failure note.
    std::string detail;
    double seconds = 0.0;
};

/// Runs the oracle-equivalence and property suites on a seeded random corpus.
std::vector<VerifyCheck> verify_suite(std::uint64_t seed = 2026);

/// Fixed-width table, one line per check, plus a summary line.
std::string format_verify_table(const std::vector<VerifyCheck> &checks);

} // namespace qaqc
