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
/**
 * @file
 * Sequence rewrites. Every rewrite is exact: where a rule holds only up to a
 * phase, the phase is added to GateSequence::global_phase, so the matrix of the
 * result (including that phase) equals the requested transform of the input.
 */
#pragma once

#include "qaqc/sequence.hpp"

namespace qaqc {

/// Entrywise complex conjugate, expressed in `alphabet`. Throws UnsupportedGateError.
GateSequence conjugate_sequence(const GateSequence &seq, const Alphabet &alphabet);
/// Conjugate using any gate kind.
GateSequence conjugate_sequence(const GateSequence &seq);

GateSequence transpose_sequence(const GateSequence &seq);
GateSequence inverse_sequence(const GateSequence &seq);

/**
 * |c><c| (x) V + |1-c><1-c| (x) I with c = 1 (controlled) or c = 0
 * (anticontrolled). The result lives on max(n, control + 1) qubits and uses
 * CNOT, CZ, Rz, Ry, H, S, Sdg, T, Tdg and X. FixedTwoQubit gates have no rule.
 */
GateSequence controlled_sequence(const GateSequence &seq, int control, bool anticontrol = false);

/// e^{i alpha} Rz(beta) Ry(gamma) Rz(delta) factors of a 2x2 unitary.
struct ZyzAngles {
    double alpha;
    double beta;
    double gamma;
    double delta;
};
ZyzAngles zyz_decompose(const Matrix2 &u);

/// 4 + max(depth(U), depth(V*)) for the Hilbert-Schmidt test circuit.
int hst_depth(const GateSequence &u, const GateSequence &v);
/// 4 + max(depth of controlled U, depth of anticontrolled V^T).
int potq_depth(const GateSequence &u, const GateSequence &v);

} // namespace qaqc
