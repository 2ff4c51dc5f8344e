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
#include "qaqc/gate.hpp"

#include <cmath>
#include <numbers>

#include "qaqc/errors.hpp"

namespace qaqc {

namespace {

constexpr std::array<std::string_view, kNumGateKinds> kKindNames = {
    "RxPlusHalfPi", "RxMinusHalfPi", "Rx", "Ry", "Rz", "CNOT", "CZ", "H", "X",
    "Y",            "Z",             "S",  "Sdg", "T", "Tdg", "FixedOneQubit", "FixedTwoQubit",
};

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_unitary(const Complex *m, int dim) {
    double worst = 0.0;
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            Complex acc = 0.0;
            for (int k = 0; k < dim; ++k) {
                acc += std::conj(m[k * dim + r]) * m[k * dim + c];
            }
            worst = std::max(worst, std::abs(acc - (r == c ? 1.0 : 0.0)));
        }
    }
    if (worst > 1e-9) {
        throw ArgumentError("fixed gate matrix is not unitary");
    }
}

} // namespace

std::string_view kind_name(GateKind kind) {
    return kKindNames.at(static_cast<std::size_t>(kind));
}

GateKind kind_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) {
            return static_cast<GateKind>(i);
        }
    }
    throw ArgumentError("unknown gate kind '" + std::string(name) + "'");
}

int kind_arity(GateKind kind) {
    switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::FixedTwoQubit:
        return 2;
    default:
        return 1;
    }
}

bool kind_is_parameterized(GateKind kind) {
    return kind == GateKind::Rx || kind == GateKind::Ry || kind == GateKind::Rz;
}

double normalize_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(theta, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    // fmod of a value just below a multiple of 2pi can round up to 2pi itself.
    if (r >= two_pi) {
        r = 0.0;
    }
    return r;
}

Gate::Gate(GateKind kind, int q0) : kind_(kind), arity_(kind_arity(kind)), qubits_{q0, -1} {
    if (arity_ != 1) {
        throw ArgumentError(std::string(kind_name(kind)) + " needs two qubits");
    }
    if (kind == GateKind::FixedOneQubit) {
        throw ArgumentError("use Gate::fixed for fixed-matrix gates");
    }
    if (kind_is_parameterized(kind)) {
        throw ArgumentError(std::string(kind_name(kind)) + " requires an angle");
    }
    if (q0 < 0) {
        throw IndexError("negative qubit index");
    }
}

Gate::Gate(GateKind kind, int q0, double theta)
    : kind_(kind), arity_(1), qubits_{q0, -1}, theta_(normalize_angle(theta)) {
    if (!kind_is_parameterized(kind)) {
        throw ArgumentError(std::string(kind_name(kind)) + " takes no angle");
    }
    if (q0 < 0) {
        throw IndexError("negative qubit index");
    }
}

Gate::Gate(GateKind kind, int q0, int q1)
    : kind_(kind), arity_(kind_arity(kind)), qubits_{q0, q1} {
    if (arity_ != 2) {
        throw ArgumentError(std::string(kind_name(kind)) + " acts on one qubit");
    }
    if (kind == GateKind::FixedTwoQubit) {
        throw ArgumentError("use Gate::fixed for fixed-matrix gates");
    }
    if (q0 < 0 || q1 < 0) {
        throw IndexError("negative qubit index");
    }
    if (q0 == q1) {
        throw ArgumentError("two-qubit gate needs distinct qubits");
    }
}

Gate Gate::fixed(const Matrix2 &m, int q) {
    check_unitary(m.data(), 2);
    Gate g(GateKind::H, q);
    g.kind_ = GateKind::FixedOneQubit;
    g.fixed_.assign(m.begin(), m.end());
    return g;
}

Gate Gate::fixed(const Matrix4 &m, int q0, int q1) {
    check_unitary(m.data(), 4);
    Gate g(GateKind::CZ, q0, q1);
    g.kind_ = GateKind::FixedTwoQubit;
    g.fixed_.assign(m.begin(), m.end());
    return g;
}

Gate Gate::with_theta(double theta) const {
    if (!is_parameterized()) {
        throw ArgumentError(std::string(kind_name(kind_)) + " takes no angle");
    }
    Gate g = *this;
    g.theta_ = normalize_angle(theta);
    return g;
}

Gate Gate::with_qubits(int q0, int q1) const {
    if (q0 < 0 || (arity_ == 2 && (q1 < 0 || q1 == q0))) {
        throw IndexError("invalid qubit relabelling");
    }
    Gate g = *this;
    g.qubits_ = {q0, arity_ == 2 ? q1 : -1};
    return g;
}

Matrix2 rx_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {Complex{c, 0.0}, Complex{0.0, -s}, Complex{0.0, -s}, Complex{c, 0.0}};
}

Matrix2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {Complex{c, 0.0}, Complex{-s, 0.0}, Complex{s, 0.0}, Complex{c, 0.0}};
}

Matrix2 rz_matrix(double theta) {
    return {std::polar(1.0, -theta / 2.0), Complex{0.0, 0.0}, Complex{0.0, 0.0},
            std::polar(1.0, theta / 2.0)};
}

Matrix2 Gate::matrix2() const {
    using std::numbers::pi;
    const Complex zero{0.0, 0.0};
    const Complex one{1.0, 0.0};
    const Complex i{0.0, 1.0};
    switch (kind_) {
    case GateKind::RxPlusHalfPi:
        return rx_matrix(pi / 2.0);
    case GateKind::RxMinusHalfPi:
        return rx_matrix(-pi / 2.0);
    case GateKind::Rx:
        return rx_matrix(theta_);
    case GateKind::Ry:
        return ry_matrix(theta_);
    case GateKind::Rz:
        return rz_matrix(theta_);
    case GateKind::H:
        return {Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0},
                Complex{-kInvSqrt2, 0.0}};
    case GateKind::X:
        return {zero, one, one, zero};
    case GateKind::Y:
        return {zero, -i, i, zero};
    case GateKind::Z:
        return {one, zero, zero, -one};
    case GateKind::S:
        return {one, zero, zero, i};
    case GateKind::Sdg:
        return {one, zero, zero, -i};
    case GateKind::T:
        return {one, zero, zero, std::polar(1.0, pi / 4.0)};
    case GateKind::Tdg:
        return {one, zero, zero, std::polar(1.0, -pi / 4.0)};
    case GateKind::FixedOneQubit:
        return {fixed_[0], fixed_[1], fixed_[2], fixed_[3]};
    default:
        throw ArgumentError(std::string(kind_name(kind_)) + " is not a one-qubit gate");
    }
}

Matrix4 Gate::matrix4() const {
    Matrix4 m{};
    switch (kind_) {
    case GateKind::CNOT:
        // control = qubits_[0] is local bit 0, target = qubits_[1] is local bit 1.
        m[0] = 1.0;
        m[4 * 3 + 1] = 1.0;
        m[4 * 2 + 2] = 1.0;
        m[4 * 1 + 3] = 1.0;
        return m;
    case GateKind::CZ:
        m[0] = 1.0;
        m[5] = 1.0;
        m[10] = 1.0;
        m[15] = -1.0;
        return m;
    case GateKind::FixedTwoQubit:
        std::copy(fixed_.begin(), fixed_.end(), m.begin());
        return m;
    default:
        throw ArgumentError(std::string(kind_name(kind_)) + " is not a two-qubit gate");
    }
}

} // namespace qaqc
