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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qaqc {

/// Requested register or matrix does not fit the simulator's memory bound.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Qubit, pair, or parameter index outside its valid range.
class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Wrong arity, invalid probability, inconsistent sizes and similar caller mistakes.
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A gate kind has no rule for the requested transform, alphabet or export format.
class UnsupportedGateError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed circuit or experiment document. Line and column are 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace qaqc
