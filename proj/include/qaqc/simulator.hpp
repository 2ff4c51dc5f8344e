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

#include "qaqc/sequence.hpp"
#include "qaqc/state_vector.hpp"

namespace qaqc {

/// Applies one gate in place. Throws IndexError for qubits outside the register.
void apply_gate(StateVector &state, const Gate &gate);

/// Applies every gate of `seq` in order, then its global phase.
void apply_sequence(StateVector &state, const GateSequence &seq);

/// Fresh |0...0> (or basis `input`) evolved by `seq`.
StateVector simulate(const GateSequence &seq, std::uint64_t input = 0);

} // namespace qaqc
