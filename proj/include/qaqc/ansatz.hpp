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
#include <utility>
#include <vector>

#include "qaqc/sequence.hpp"

namespace qaqc {

inline constexpr std::size_t kUniversal1qAngles = 3;
inline constexpr std::size_t kUniversal2qAngles = 15;

/// Rz(angles[0]), Ry(angles[1]), Rz(angles[2]) in time order on `qubit`.
GateSequence ansatz_universal_1q(std::span<const double> angles, int qubit = 0,
                                 int num_qubits = 1);

/**
 * Three-CNOT, fifteen-angle two-qubit template. Time order:
 * U(a0..a2) on q0, U(a3..a5) on q1, CNOT(q1 -> q0), Rz(a6) on q0, Ry(a7) on q1,
 * CNOT(q0 -> q1), Ry(a8) on q1, CNOT(q1 -> q0), U(a9..a11) on q0, U(a12..a14) on q1,
 * where U is the one-qubit template above.
 */
GateSequence ansatz_universal_2q(std::span<const double> angles, int q0 = 0, int q1 = 1,
                                 int num_qubits = 2);

/// Brick-pattern pairs of one layer: (0,1),(2,3),... then (1,2),(3,4),... and (n-1,0) for even n > 2.
std::vector<std::pair<int, int>> layered_pairs(int n);

/// `layers` brick layers of universal two-qubit blocks with uniformly random angles.
GateSequence ansatz_layered(int n, int layers, std::uint64_t rng_seed);

} // namespace qaqc
