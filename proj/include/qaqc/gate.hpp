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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaqc/state_vector.hpp"

namespace qaqc {

/**
 * Native and auxiliary gate kinds.
 *
 * The two device alphabets only use RxPlusHalfPi, RxMinusHalfPi, Rz, CNOT and
 * CZ. The remaining kinds appear in targets, ansatz templates and the
 * decompositions produced by the controlled-sequence transform.
 */
enum class GateKind : int {
    RxPlusHalfPi,
    RxMinusHalfPi,
    Rx,
    Ry,
    Rz,
    CNOT,
    CZ,
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    FixedOneQubit,
    FixedTwoQubit,
};

inline constexpr int kNumGateKinds = 17;

[[nodiscard]] std::string_view kind_name(GateKind kind);
/// Inverse of kind_name; throws ArgumentError on unknown names.
[[nodiscard]] GateKind kind_from_name(std::string_view name);
[[nodiscard]] int kind_arity(GateKind kind);
/// Rx, Ry and Rz carry a free angle.
[[nodiscard]] bool kind_is_parameterized(GateKind kind);

/// Wraps an angle into [0, 2pi).
[[nodiscard]] double normalize_angle(double theta);

class Gate {
  public:
    /// Unparameterized one-qubit gate.
    Gate(GateKind kind, int q0);
    /// Rotation; the angle is normalized to [0, 2pi).
    Gate(GateKind kind, int q0, double theta);
    Gate(GateKind kind, int q0, int q1);

    static Gate rx(int q, double theta) { return {GateKind::Rx, q, theta}; }
    static Gate ry(int q, double theta) { return {GateKind::Ry, q, theta}; }
    static Gate rz(int q, double theta) { return {GateKind::Rz, q, theta}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target}; }
    static Gate cz(int q0, int q1) { return {GateKind::CZ, q0, q1}; }
    static Gate fixed(const Matrix2 &m, int q);
    static Gate fixed(const Matrix4 &m, int q0, int q1);

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] int arity() const noexcept { return arity_; }
    [[nodiscard]] int qubit(int i) const { return qubits_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] const std::array<int, 2> &qubits() const noexcept { return qubits_; }
    [[nodiscard]] bool is_parameterized() const noexcept { return kind_is_parameterized(kind_); }
    /// Normalized angle; 0 for unparameterized kinds.
    [[nodiscard]] double theta() const noexcept { return theta_; }
    [[nodiscard]] bool acts_on(int q) const noexcept {
        return qubits_[0] == q || (arity_ == 2 && qubits_[1] == q);
    }

    /// Copy with a new angle (normalized). Only valid for parameterized kinds.
    [[nodiscard]] Gate with_theta(double theta) const;
    /// Copy with qubit indices replaced.
    [[nodiscard]] Gate with_qubits(int q0, int q1 = -1) const;

    [[nodiscard]] Matrix2 matrix2() const;
    [[nodiscard]] Matrix4 matrix4() const;
    [[nodiscard]] const std::vector<Complex> &fixed_matrix() const noexcept { return fixed_; }

    friend bool operator==(const Gate &, const Gate &) = default;

  private:
    GateKind kind_;
    int arity_;
    std::array<int, 2> qubits_;
    double theta_ = 0.0;
    std::vector<Complex> fixed_;
};

/// R_P(theta) = exp(-i theta P / 2) matrices and the fixed one-qubit gates.
Matrix2 rx_matrix(double theta);
Matrix2 ry_matrix(double theta);
Matrix2 rz_matrix(double theta);

} // namespace qaqc
