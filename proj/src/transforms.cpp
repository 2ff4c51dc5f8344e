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
#include "qaqc/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qaqc/errors.hpp"

namespace qaqc {

namespace {

using std::numbers::pi;

Matrix2 conj2(const Matrix2 &m) {
    return {std::conj(m[0]), std::conj(m[1]), std::conj(m[2]), std::conj(m[3])};
}

Matrix2 transpose2(const Matrix2 &m) { return {m[0], m[2], m[1], m[3]}; }

Matrix4 conj4(const Matrix4 &m) {
    Matrix4 out;
    std::transform(m.begin(), m.end(), out.begin(), [](Complex z) { return std::conj(z); });
    return out;
}

Matrix4 transpose4(const Matrix4 &m) {
    Matrix4 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out[4 * r + c] = m[4 * c + r];
        }
    }
    return out;
}

/// Appends the conjugate of a diagonal phase gate diag(1, e^{i phi}) as `exact` or Rz.
void conj_phase_gate(GateSequence &out, const Alphabet &alphabet, GateKind exact, int q,
                     double phi) {
    if (alphabet.allows(exact)) {
        out.append(Gate(exact, q));
        return;
    }
    // diag(1, e^{-i phi}) = e^{-i phi / 2} Rz(-phi)
    out.append_rotation(GateKind::Rz, q, -phi);
    out.add_global_phase(-phi / 2.0);
}

void append_crz(GateSequence &out, int c, int t, double theta) {
    out.append_rotation(GateKind::Rz, t, theta / 2.0);
    out.append(Gate::cnot(c, t));
    out.append_rotation(GateKind::Rz, t, -theta / 2.0);
    out.append(Gate::cnot(c, t));
}

void append_cry(GateSequence &out, int c, int t, double theta) {
    out.append_rotation(GateKind::Ry, t, theta / 2.0);
    out.append(Gate::cnot(c, t));
    out.append_rotation(GateKind::Ry, t, -theta / 2.0);
    out.append(Gate::cnot(c, t));
}

void append_crx(GateSequence &out, int c, int t, double theta) {
    out.append(Gate(GateKind::H, t));
    append_crz(out, c, t, theta);
    out.append(Gate(GateKind::H, t));
}

/// Controlled diag(1, e^{i phi}) on t: C-Rz(phi) plus a relative phase on the control.
void append_cphase(GateSequence &out, int c, int t, double phi) {
    append_crz(out, c, t, phi);
    out.append_rotation(GateKind::Rz, c, phi / 2.0);
    out.add_global_phase(phi / 4.0);
}

void append_cu(GateSequence &out, int c, int t, const Matrix2 &u) {
    const ZyzAngles a = zyz_decompose(u);
    append_crz(out, c, t, a.delta);
    append_cry(out, c, t, a.gamma);
    append_crz(out, c, t, a.beta);
    out.append_rotation(GateKind::Rz, c, a.alpha);
    out.add_global_phase(a.alpha / 2.0);
}

/// Doubly-controlled X, Nielsen & Chuang Fig. 4.9. Exact, no phase.
void append_toffoli(GateSequence &out, int x, int y, int t) {
    out.append(Gate(GateKind::H, t));
    out.append(Gate::cnot(y, t));
    out.append(Gate(GateKind::Tdg, t));
    out.append(Gate::cnot(x, t));
    out.append(Gate(GateKind::T, t));
    out.append(Gate::cnot(y, t));
    out.append(Gate(GateKind::Tdg, t));
    out.append(Gate::cnot(x, t));
    out.append(Gate(GateKind::T, y));
    out.append(Gate(GateKind::T, t));
    out.append(Gate(GateKind::H, t));
    out.append(Gate::cnot(x, y));
    out.append(Gate(GateKind::T, x));
    out.append(Gate(GateKind::Tdg, y));
    out.append(Gate::cnot(x, y));
}

} // namespace

GateSequence conjugate_sequence(const GateSequence &seq, const Alphabet &alphabet) {
    GateSequence out(seq.num_qubits(), {}, -seq.global_phase());
    for (const auto &g : seq.gates()) {
        const int q = g.qubit(0);
        switch (g.kind()) {
        case GateKind::Rz:
        case GateKind::Rx:
            out.append_rotation(g.kind(), g.qubit(0), -g.theta());
            break;
        case GateKind::RxPlusHalfPi:
        case GateKind::RxMinusHalfPi: {
            const GateKind flipped = g.kind() == GateKind::RxPlusHalfPi ? GateKind::RxMinusHalfPi
                                                                         : GateKind::RxPlusHalfPi;
            if (alphabet.allows(flipped)) {
                out.append(Gate(flipped, q));
            } else {
                // Rz(pi) Rx(a) Rz(pi) = -Rx(-a)
                out.append_rotation(GateKind::Rz, q, pi);
                out.append(Gate(g.kind(), q));
                out.append_rotation(GateKind::Rz, q, pi);
                out.add_global_phase(pi);
            }
            break;
        }
        case GateKind::Y:
            out.append(g);
            out.add_global_phase(pi);
            break;
        case GateKind::S:
            conj_phase_gate(out, alphabet, GateKind::Sdg, q, pi / 2.0);
            break;
        case GateKind::Sdg:
            conj_phase_gate(out, alphabet, GateKind::S, q, -pi / 2.0);
            break;
        case GateKind::T:
            conj_phase_gate(out, alphabet, GateKind::Tdg, q, pi / 4.0);
            break;
        case GateKind::Tdg:
            conj_phase_gate(out, alphabet, GateKind::T, q, -pi / 4.0);
            break;
        case GateKind::FixedOneQubit:
            out.append(Gate::fixed(conj2(g.matrix2()), q));
            break;
        case GateKind::FixedTwoQubit:
            out.append(Gate::fixed(conj4(g.matrix4()), q, g.qubit(1)));
            break;
        default:
            // Ry, H, X, Z, CNOT and CZ have real matrices.
            out.append(g);
            break;
        }
    }
    for (const auto &g : out.gates()) {
        if (!alphabet.allows(g.kind())) {
            throw UnsupportedGateError("no conjugation rule for " + std::string(kind_name(g.kind())) +
                                       " within alphabet '" + alphabet.name() + "'");
        }
    }
    return out;
}

GateSequence conjugate_sequence(const GateSequence &seq) {
    return conjugate_sequence(seq, Alphabet::full());
}

GateSequence transpose_sequence(const GateSequence &seq) {
    GateSequence out(seq.num_qubits(), {}, seq.global_phase());
    for (auto it = seq.gates().rbegin(); it != seq.gates().rend(); ++it) {
        const Gate &g = *it;
        switch (g.kind()) {
        case GateKind::Ry:
            out.append_rotation(g.kind(), g.qubit(0), -g.theta());
            break;
        case GateKind::Y:
            out.append(g);
            out.add_global_phase(pi);
            break;
        case GateKind::FixedOneQubit:
            out.append(Gate::fixed(transpose2(g.matrix2()), g.qubit(0)));
            break;
        case GateKind::FixedTwoQubit:
            out.append(Gate::fixed(transpose4(g.matrix4()), g.qubit(0), g.qubit(1)));
            break;
        default:
            // Every other kind has a symmetric matrix.
            out.append(g);
            break;
        }
    }
    return out;
}

GateSequence inverse_sequence(const GateSequence &seq) {
    GateSequence out(seq.num_qubits(), {}, -seq.global_phase());
    for (auto it = seq.gates().rbegin(); it != seq.gates().rend(); ++it) {
        const Gate &g = *it;
        const int q = g.qubit(0);
        switch (g.kind()) {
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
            out.append_rotation(g.kind(), g.qubit(0), -g.theta());
            break;
        case GateKind::RxPlusHalfPi:
            out.append(Gate(GateKind::RxMinusHalfPi, q));
            break;
        case GateKind::RxMinusHalfPi:
            out.append(Gate(GateKind::RxPlusHalfPi, q));
            break;
        case GateKind::S:
            out.append(Gate(GateKind::Sdg, q));
            break;
        case GateKind::Sdg:
            out.append(Gate(GateKind::S, q));
            break;
        case GateKind::T:
            out.append(Gate(GateKind::Tdg, q));
            break;
        case GateKind::Tdg:
            out.append(Gate(GateKind::T, q));
            break;
        case GateKind::FixedOneQubit:
            out.append(Gate::fixed(conj2(transpose2(g.matrix2())), q));
            break;
        case GateKind::FixedTwoQubit:
            out.append(Gate::fixed(conj4(transpose4(g.matrix4())), q, g.qubit(1)));
            break;
        default:
            out.append(g);
            break;
        }
    }
    return out;
}

ZyzAngles zyz_decompose(const Matrix2 &u) {
    const Complex det = u[0] * u[3] - u[1] * u[2];
    const double alpha = std::arg(det) / 2.0;
    const Complex unphase = std::polar(1.0, -alpha);
    const Complex a = u[0] * unphase;
    const Complex b = u[2] * unphase;
    const double gamma = 2.0 * std::atan2(std::abs(b), std::abs(a));
    double sum = 0.0;  // beta + delta
    double diff = 0.0; // beta - delta
    constexpr double eps = 1e-12;
    if (std::abs(a) > eps) {
        sum = -2.0 * std::arg(a);
    }
    if (std::abs(b) > eps) {
        diff = 2.0 * std::arg(b);
    }
    return {alpha, (sum + diff) / 2.0, gamma, (sum - diff) / 2.0};
}

GateSequence controlled_sequence(const GateSequence &seq, int control, bool anticontrol) {
    if (control < 0) {
        throw IndexError("negative control qubit");
    }
    for (const auto &g : seq.gates()) {
        if (g.acts_on(control)) {
            throw ArgumentError("control qubit " + std::to_string(control) +
                                " is used by the controlled sequence");
        }
    }
    const int width = std::max(seq.num_qubits(), control + 1);
    GateSequence out(width);
    const int c = control;
    if (anticontrol) {
        out.append(Gate(GateKind::X, c));
    }
    for (const auto &g : seq.gates()) {
        const int t = g.qubit(0);
        switch (g.kind()) {
        case GateKind::Rz:
            append_crz(out, c, t, g.theta());
            break;
        case GateKind::Ry:
            append_cry(out, c, t, g.theta());
            break;
        case GateKind::Rx:
            append_crx(out, c, t, g.theta());
            break;
        case GateKind::RxPlusHalfPi:
            append_crx(out, c, t, pi / 2.0);
            break;
        case GateKind::RxMinusHalfPi:
            append_crx(out, c, t, -pi / 2.0);
            break;
        case GateKind::X:
            out.append(Gate::cnot(c, t));
            break;
        case GateKind::Z:
            out.append(Gate::cz(c, t));
            break;
        case GateKind::Y:
            out.append(Gate(GateKind::Sdg, t));
            out.append(Gate::cnot(c, t));
            out.append(Gate(GateKind::S, t));
            break;
        case GateKind::S:
            append_cphase(out, c, t, pi / 2.0);
            break;
        case GateKind::Sdg:
            append_cphase(out, c, t, -pi / 2.0);
            break;
        case GateKind::T:
            append_cphase(out, c, t, pi / 4.0);
            break;
        case GateKind::Tdg:
            append_cphase(out, c, t, -pi / 4.0);
            break;
        case GateKind::H:
        case GateKind::FixedOneQubit:
            append_cu(out, c, t, g.matrix2());
            break;
        case GateKind::CNOT:
            append_toffoli(out, c, t, g.qubit(1));
            break;
        case GateKind::CZ:
            out.append(Gate(GateKind::H, g.qubit(1)));
            append_toffoli(out, c, t, g.qubit(1));
            out.append(Gate(GateKind::H, g.qubit(1)));
            break;
        case GateKind::FixedTwoQubit:
            throw UnsupportedGateError("no controlled decomposition for FixedTwoQubit");
        }
    }
    if (seq.global_phase() != 0.0) {
        // diag(1, e^{i phi}) on the control = e^{i phi / 2} Rz(phi)
        out.append_rotation(GateKind::Rz, c, seq.global_phase());
        out.add_global_phase(seq.global_phase() / 2.0);
    }
    if (anticontrol) {
        out.append(Gate(GateKind::X, c));
    }
    return out;
}

int hst_depth(const GateSequence &u, const GateSequence &v) {
    return 4 + std::max(depth(u), depth(conjugate_sequence(v)));
}

int potq_depth(const GateSequence &u, const GateSequence &v) {
    const int n = u.num_qubits();
    const GateSequence cu = controlled_sequence(u, n);
    const GateSequence cv = controlled_sequence(transpose_sequence(v), n, true);
    return 4 + std::max(depth(cu), depth(cv));
}

} // namespace qaqc
