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
#include <functional>

namespace qaqc {

/**
 * Worker count used by parallel_for. Defaults to QAQC_THREADS when set and
 * valid, else 1. Results never depend on this value: every task derives its
 * own seed and writes only its own slot.
 */
int num_threads();
/// Values below 1 reset to the default.
void set_num_threads(int threads);

/// Runs fn(0..count-1), rethrowing the first exception after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn);

} // namespace qaqc
