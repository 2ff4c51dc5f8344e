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
#include <span>
#include <string>
#include <vector>

#include "qaqc/sequence.hpp"

namespace qaqc {

/// I, T, X, H, CNOT, CZ, CH, SWAP, QFT2, Example1, Example2.
const std::vector<std::string> &preset_names();

/**
 * Target circuit of a preset. `n` and `seed` are used by Example1 and
 * Example2 only (n >= 1, resp. n >= 2); the fixed gates ignore them. CNOT and
 * CH take qubit 0 as control.
 */
GateSequence preset_target(const std::string &name, int n = 0, std::uint64_t seed = 0);

/// Whether the preset defines a trainable structure of its own form.
bool preset_has_ansatz(const std::string &name);

/// Trainable structure of Example1 / Example2 with random starting angles.
GateSequence preset_ansatz(const std::string &name, int n, std::uint64_t seed);

/// Tensor product of Rz(angles[j]) on qubit j.
GateSequence example1_circuit(std::span<const double> angles);

/**
 * Rz(first) layer, CNOT(0,1) CNOT(2,3) ..., CNOT(1,2) CNOT(3,4) ..., Rz(second)
 * layer, in time order. The second CNOT layer is the first shifted by one qubit.
 */
GateSequence example2_circuit(std::span<const double> first, std::span<const double> second);

} // namespace qaqc
