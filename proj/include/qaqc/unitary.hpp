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
 * Dense unitary matrices. These are brute-force references for tests and small
 * targets, never the simulation path.
 */
#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "qaqc/state_vector.hpp"

namespace qaqc {

using MatrixXc = Eigen::MatrixXcd;

/// Matrices up to 2^12 x 2^12 are built; larger requests raise CapacityError.
inline constexpr int kMaxMatrixQubits = 12;

class UnitaryMatrix {
  public:
    /// Identity on `num_qubits` qubits.
    explicit UnitaryMatrix(int num_qubits);
    /// Wraps `m`; throws ArgumentError unless square, power-of-two and unitary within `tol`.
    explicit UnitaryMatrix(MatrixXc m, double tol = 1e-9);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return m_.rows(); }
    [[nodiscard]] const MatrixXc &matrix() const noexcept { return m_; }
    [[nodiscard]] Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

    /// Max-entry deviation of U^dagger U from the identity.
    [[nodiscard]] double unitarity_error() const;

  private:
    int num_qubits_;
    MatrixXc m_;
};

UnitaryMatrix haar_random_unitary(int num_qubits, std::uint64_t rng_seed);

/// min over phi of the max-entry distance |A - e^{i phi} B|, with phi = arg Tr(B^dagger A).
double phase_aligned_distance(const MatrixXc &a, const MatrixXc &b);

/// Embeds a 2x2 matrix on `qubit` of an n-qubit register (little-endian).
MatrixXc embed_1q(const Matrix2 &m, int qubit, int num_qubits);
/// Embeds a 4x4 matrix on (q0, q1); local index = bit(q0) + 2 * bit(q1).
MatrixXc embed_2q(const Matrix4 &m, int q0, int q1, int num_qubits);

} // namespace qaqc
