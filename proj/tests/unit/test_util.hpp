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

// Reference matrices built from first principles for the unit tests. Nothing
// here calls into the library's matrix code (sequence_to_matrix, embed_*,
// oracles.cpp), so agreement with it is an independent check.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qaqc/sequence.hpp"

namespace qaqc::ref {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;

inline Mat pauli(char p) {
    Mat m(2, 2);
    switch (p) {
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, C(0, -1), C(0, 1), 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        m = Mat::Identity(2, 2);
    }
    return m;
}

/// exp(-i theta P / 2) = cos(theta/2) I - i sin(theta/2) P.
inline Mat rotation(char p, double theta) {
    return std::cos(theta / 2) * Mat::Identity(2, 2) - C(0, std::sin(theta / 2)) * pauli(p);
}

inline Mat local_1q(const Gate &g) {
    Mat m(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (g.kind()) {
    case GateKind::RxPlusHalfPi:
        return rotation('X', kPi / 2);
    case GateKind::RxMinusHalfPi:
        return rotation('X', -kPi / 2);
    case GateKind::Rx:
        return rotation('X', g.theta());
    case GateKind::Ry:
        return rotation('Y', g.theta());
    case GateKind::Rz:
        return rotation('Z', g.theta());
    case GateKind::H:
        m << r, r, r, -r;
        return m;
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
        return pauli("XYZ"[static_cast<int>(g.kind()) - static_cast<int>(GateKind::X)]);
    case GateKind::S:
        m << 1, 0, 0, C(0, 1);
        return m;
    case GateKind::Sdg:
        m << 1, 0, 0, C(0, -1);
        return m;
    case GateKind::T:
        m << 1, 0, 0, std::polar(1.0, kPi / 4);
        return m;
    case GateKind::Tdg:
        m << 1, 0, 0, std::polar(1.0, -kPi / 4);
        return m;
    case GateKind::FixedOneQubit:
        for (int i = 0; i < 4; ++i) {
            m(i / 2, i % 2) = g.fixed_matrix()[static_cast<std::size_t>(i)];
        }
        return m;
    default:
        throw std::logic_error("not a one-qubit gate");
    }
}

/// Full 2^n matrix of one gate, built column by column from basis states.
inline Mat gate_oracle(const Gate &g, int n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    Mat out = Mat::Zero(d, d);
    for (Eigen::Index col = 0; col < d; ++col) {
        if (g.arity() == 1) {
            const Mat m = local_1q(g);
            const int q = g.qubit(0);
            const int b = static_cast<int>((col >> q) & 1);
            for (int r = 0; r < 2; ++r) {
                const Eigen::Index row = (col & ~(Eigen::Index{1} << q)) | (Eigen::Index{r} << q);
                out(row, col) += m(r, b);
            }
            continue;
        }
        const int a = g.qubit(0);
        const int t = g.qubit(1);
        const bool ba = (col >> a) & 1;
        const bool bt = (col >> t) & 1;
        switch (g.kind()) {
        case GateKind::CNOT:
            out(ba ? col ^ (Eigen::Index{1} << t) : col, col) = 1.0;
            break;
        case GateKind::CZ:
            out(col, col) = (ba && bt) ? -1.0 : 1.0;
            break;
        case GateKind::FixedTwoQubit: {
            const int local_in = static_cast<int>(ba) + 2 * static_cast<int>(bt);
            const Eigen::Index clear = col & ~((Eigen::Index{1} << a) | (Eigen::Index{1} << t));
            for (int r = 0; r < 4; ++r) {
                const Eigen::Index row = clear | (Eigen::Index{r & 1} << a) |
                                         (Eigen::Index{(r >> 1) & 1} << t);
                out(row, col) += g.fixed_matrix()[static_cast<std::size_t>(4 * r + local_in)];
            }
            break;
        }
        default:
            throw std::logic_error("not a two-qubit gate");
        }
    }
    return out;
}

inline Mat sequence_oracle(const GateSequence &seq) {
    const int n = seq.num_qubits();
    Mat u = Mat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (const auto &g : seq.gates()) {
        u = gate_oracle(g, n) * u;
    }
    return std::polar(1.0, seq.global_phase()) * u;
}

inline double hst_oracle(const Mat &u, const Mat &v) {
    const double d = static_cast<double>(u.rows());
    return 1.0 - std::norm((v.adjoint() * u).trace()) / (d * d);
}

/// Reduced single-qubit density matrix of `rho` on `qubit` by explicit partial trace.
inline Mat partial_trace_keep(const Mat &rho, int qubit) {
    Mat out = Mat::Zero(2, 2);
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            const Eigen::Index mask = ~(Eigen::Index{1} << qubit);
            if ((i & mask) == (j & mask)) {
                out((i >> qubit) & 1, (j >> qubit) & 1) += rho(i, j);
            }
        }
    }
    return out;
}

/**
 * Entanglement fidelity of E_j(rho) = Tr_rest[W (rho (x) I/d_rest) W^dagger]
 * from its Choi state: apply the channel to half of |Phi+> on a reference
 * qubit and take the overlap with |Phi+>. Density matrices, n <= 3.
 */
inline double local_fidelity_channel(const Mat &w, int qubit) {
    const int n = static_cast<int>(std::log2(static_cast<double>(w.rows())));
    const Eigen::Index d = w.rows();
    // Register: n system qubits plus reference qubit n.
    const Eigen::Index dd = 2 * d;
    Mat rho = Mat::Zero(dd, dd);
    // rho_in = |Phi+><Phi+|_{qubit, ref} (x) I/2^{n-1} on the other system qubits.
    const double weight = 0.5 / static_cast<double>(d / 2);
    for (Eigen::Index rest = 0; rest < d; ++rest) {
        if ((rest >> qubit) & 1) {
            continue;
        }
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const Eigen::Index i = rest | (Eigen::Index{a} << qubit) | (Eigen::Index{a} << n);
                const Eigen::Index j = rest | (Eigen::Index{b} << qubit) | (Eigen::Index{b} << n);
                rho(i, j) = weight;
            }
        }
    }
    Mat big = Mat::Zero(dd, dd);
    big.topLeftCorner(d, d) = w;
    big.bottomRightCorner(d, d) = w;
    const Mat out = big * rho * big.adjoint();
    // Overlap of the (qubit, ref) marginal with |Phi+>.
    double f = 0.0;
    for (Eigen::Index i = 0; i < dd; ++i) {
        for (Eigen::Index j = 0; j < dd; ++j) {
            const Eigen::Index mask = ~((Eigen::Index{1} << qubit) | (Eigen::Index{1} << n));
            if ((i & mask) != (j & mask)) {
                continue;
            }
            const int ai = static_cast<int>((i >> qubit) & 1);
            const int ri = static_cast<int>((i >> n) & 1);
            const int aj = static_cast<int>((j >> qubit) & 1);
            const int rj = static_cast<int>((j >> n) & 1);
            if (ai == ri && aj == rj) {
                f += 0.5 * out(i, j).real();
            }
        }
    }
    return f;
}

inline double lhst_oracle(const Mat &u, const Mat &v) {
    const int n = static_cast<int>(std::log2(static_cast<double>(u.rows())));
    const Mat w = u * v.adjoint();
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        total += local_fidelity_channel(w, j);
    }
    return 1.0 - total / n;
}

/// min over phi of max-entry |A - e^{i phi} B|, phi = arg Tr(B^dagger A).
inline double phase_distance(const Mat &a, const Mat &b) {
    const C tr = (b.adjoint() * a).trace();
    const C phase = std::abs(tr) > 0 ? tr / std::abs(tr) : C(1.0);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

/// Random gate drawn from every kind (Fixed kinds excluded) on an n-qubit register.
inline Gate random_gate(int n, std::mt19937_64 &gen) {
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    std::vector<GateKind> kinds;
    for (int k = 0; k < kNumGateKinds; ++k) {
        const auto kind = static_cast<GateKind>(k);
        if (kind == GateKind::FixedOneQubit || kind == GateKind::FixedTwoQubit) {
            continue;
        }
        if (kind_arity(kind) == 2 && n < 2) {
            continue;
        }
        kinds.push_back(kind);
    }
    const auto kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(gen)];
    const int q0 = qubit(gen);
    if (kind_arity(kind) == 2) {
        int q1 = qubit(gen);
        while (q1 == q0) {
            q1 = qubit(gen);
        }
        return {kind, q0, q1};
    }
    if (kind_is_parameterized(kind)) {
        return {kind, q0, angle(gen)};
    }
    return {kind, q0};
}

inline GateSequence random_sequence(int n, int length, std::mt19937_64 &gen) {
    GateSequence seq(n);
    for (int i = 0; i < length; ++i) {
        seq.append(random_gate(n, gen));
    }
    return seq;
}

/// Random sequence whose every parameterized gate is a rotation (for gradient tests).
inline GateSequence random_rotation_sequence(int n, int length, std::mt19937_64 &gen) {
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    std::uniform_int_distribution<int> pick(0, 3);
    GateSequence seq(n);
    for (int i = 0; i < length; ++i) {
        const int q = qubit(gen);
        const int k = pick(gen);
        if (k == 3 && n > 1) {
            seq.append(Gate::cnot(q, (q + 1) % n));
        } else {
            const GateKind kinds[] = {GateKind::Rx, GateKind::Ry, GateKind::Rz, GateKind::Rz};
            seq.append(Gate(kinds[k], q, angle(gen)));
        }
    }
    return seq;
}

/// Circular distance between two angles.
inline double angle_distance(double a, double b) {
    const double d = std::fmod(std::abs(a - b), 2 * kPi);
    return std::min(d, 2 * kPi - d);
}

} // namespace qaqc::ref
