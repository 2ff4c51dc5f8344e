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
#include "qaqc/simulator.hpp"

#include <cmath>
#include <numbers>

#include "qaqc/errors.hpp"

namespace qaqc {

void apply_gate(StateVector &state, const Gate &gate) {
    using std::numbers::pi;
    const int q = gate.qubit(0);
    switch (gate.kind()) {
    case GateKind::Rz: {
        const double half = gate.theta() / 2.0;
        state.apply_diagonal(std::polar(1.0, -half), std::polar(1.0, half), q);
        return;
    }
    case GateKind::X:
        state.apply_x(q);
        return;
    case GateKind::Z:
        state.apply_diagonal(1.0, -1.0, q);
        return;
    case GateKind::S:
        state.apply_diagonal(1.0, Complex{0.0, 1.0}, q);
        return;
    case GateKind::Sdg:
        state.apply_diagonal(1.0, Complex{0.0, -1.0}, q);
        return;
    case GateKind::T:
        state.apply_diagonal(1.0, std::polar(1.0, pi / 4.0), q);
        return;
    case GateKind::Tdg:
        state.apply_diagonal(1.0, std::polar(1.0, -pi / 4.0), q);
        return;
    case GateKind::CNOT:
        state.apply_cnot(q, gate.qubit(1));
        return;
    case GateKind::CZ:
        state.apply_cz(q, gate.qubit(1));
        return;
    case GateKind::FixedTwoQubit:
        state.apply_matrix(gate.matrix4(), q, gate.qubit(1));
        return;
    default:
        state.apply_matrix(gate.matrix2(), q);
        return;
    }
}

void apply_sequence(StateVector &state, const GateSequence &seq) {
    if (seq.num_qubits() > state.num_qubits()) {
        throw IndexError("sequence is wider than the state");
    }
    for (const auto &g : seq.gates()) {
        apply_gate(state, g);
    }
    if (seq.global_phase() != 0.0) {
        const Complex phase = std::polar(1.0, seq.global_phase());
        for (auto &a : state.amplitudes()) {
            a *= phase;
        }
    }
}

StateVector simulate(const GateSequence &seq, std::uint64_t input) {
    StateVector state = StateVector::basis(seq.num_qubits(), input);
    apply_sequence(state, seq);
    return state;
}

} // namespace qaqc
