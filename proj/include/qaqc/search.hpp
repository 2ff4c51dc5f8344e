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

#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qaqc/rng.hpp"

namespace qaqc {

using Objective = std::function<double(std::span<const double>)>;

struct SearchOptions {
    /// Hard cap on objective calls, including the starting point.
    int max_evaluations = 50;
    /// Stop as soon as a value at or below this is seen.
    double target = -std::numeric_limits<double>::infinity();
    /// Edge length of the initial simplex.
    double initial_step = 1.5707963267948966;
};

struct SearchResult {
    std::vector<double> x;
    double value = std::numeric_limits<double>::infinity();
    int evaluations = 0;
};

/// Pluggable derivative-free minimizer.
class DerivativeFreeSearch {
  public:
    virtual ~DerivativeFreeSearch() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    virtual SearchResult minimize(const Objective &f, std::span<const double> x0,
                                  const SearchOptions &options, Rng &rng) const = 0;
};

/**
 * Nelder-Mead simplex. When the simplex collapses before the budget is spent it
 * is rebuilt around the best point with a randomly jittered, shrunken step.
 */
class NelderMead final : public DerivativeFreeSearch {
  public:
    [[nodiscard]] std::string name() const override { return "nelder-mead"; }
    SearchResult minimize(const Objective &f, std::span<const double> x0,
                          const SearchOptions &options, Rng &rng) const override;
};

/// "nelder-mead" is the only built-in; throws ArgumentError otherwise.
std::unique_ptr<DerivativeFreeSearch> make_search(const std::string &name);

} // namespace qaqc
