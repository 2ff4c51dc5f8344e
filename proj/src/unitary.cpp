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
#include "qaqc/unitary.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qaqc/errors.hpp"
#include "qaqc/rng.hpp"

namespace qaqc {

namespace {

void check_matrix_width(int num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxMatrixQubits) {
        throw CapacityError("matrix width " + std::to_string(num_qubits) + " outside [0, " +
                            std::to_string(kMaxMatrixQubits) + "]");
    }
}

} // namespace

UnitaryMatrix::UnitaryMatrix(int num_qubits) : num_qubits_(num_qubits) {
    check_matrix_width(num_qubits);
    const Eigen::Index d = Eigen::Index{1} << num_qubits;
    m_ = MatrixXc::Identity(d, d);
}

UnitaryMatrix::UnitaryMatrix(MatrixXc m, double tol) : num_qubits_(0), m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1 ||
        !std::has_single_bit(static_cast<std::uint64_t>(m_.rows()))) {
        throw ArgumentError("unitary must be square with power-of-two dimension");
    }
    num_qubits_ = std::countr_zero(static_cast<std::uint64_t>(m_.rows()));
    check_matrix_width(num_qubits_);
    if (unitarity_error() > tol) {
        throw ArgumentError("matrix is not unitary within tolerance");
    }
}

double UnitaryMatrix::unitarity_error() const {
    const MatrixXc gram = m_.adjoint() * m_;
    return (gram - MatrixXc::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
}

UnitaryMatrix haar_random_unitary(int num_qubits, std::uint64_t rng_seed) {
    check_matrix_width(num_qubits);
    const Eigen::Index d = Eigen::Index{1} << num_qubits;
    Rng rng(rng_seed);
    MatrixXc z(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) {
            z(r, c) = rng.complex_normal();
        }
    }
    // QR of a Ginibre matrix with the R-diagonal phases divided out is Haar (Mezzadri 2007).
    Eigen::HouseholderQR<MatrixXc> qr(z);
    MatrixXc q = qr.householderQ() * MatrixXc::Identity(d, d);
    const MatrixXc r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < d; ++c) {
        const Complex diag = r(c, c);
        const double mag = std::abs(diag);
        q.col(c) *= mag > 0.0 ? diag / mag : Complex{1.0, 0.0};
    }
    return UnitaryMatrix(std::move(q));
}

double phase_aligned_distance(const MatrixXc &a, const MatrixXc &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ArgumentError("matrix shapes differ");
    }
    const Complex overlap = (b.adjoint() * a).trace();
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
    return (a - phase * b).cwiseAbs().maxCoeff();
}

MatrixXc embed_1q(const Matrix2 &m, int qubit, int num_qubits) {
    check_matrix_width(num_qubits);
    if (qubit < 0 || qubit >= num_qubits) {
        throw IndexError("qubit index out of range");
    }
    const Eigen::Index d = Eigen::Index{1} << num_qubits;
    const Eigen::Index bit = Eigen::Index{1} << qubit;
    MatrixXc out = MatrixXc::Zero(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        const int cb = (c & bit) ? 1 : 0;
        for (int rb = 0; rb < 2; ++rb) {
            const Eigen::Index r = rb ? (c | bit) : (c & ~bit);
            out(r, c) = m[2 * rb + cb];
        }
    }
    return out;
}

MatrixXc embed_2q(const Matrix4 &m, int q0, int q1, int num_qubits) {
    check_matrix_width(num_qubits);
    if (q0 < 0 || q0 >= num_qubits || q1 < 0 || q1 >= num_qubits || q0 == q1) {
        throw IndexError("qubit pair out of range");
    }
    const Eigen::Index d = Eigen::Index{1} << num_qubits;
    const Eigen::Index b0 = Eigen::Index{1} << q0;
    const Eigen::Index b1 = Eigen::Index{1} << q1;
    MatrixXc out = MatrixXc::Zero(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        const int local_c = ((c & b0) ? 1 : 0) + ((c & b1) ? 2 : 0);
        const Eigen::Index rest = c & ~(b0 | b1);
        for (int local_r = 0; local_r < 4; ++local_r) {
            const Eigen::Index r = rest | ((local_r & 1) ? b0 : 0) | ((local_r & 2) ? b1 : 0);
            out(r, c) = m[4 * local_r + local_c];
        }
    }
    return out;
}

} // namespace qaqc
