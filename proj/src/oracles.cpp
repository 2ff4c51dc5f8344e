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
#include "qaqc/oracles.hpp"

#include <cmath>
#include <numbers>

#include "qaqc/errors.hpp"
#include "qaqc/rng.hpp"

namespace qaqc {

namespace {

int qubits_of(const MatrixXc &m) {
    const auto d = static_cast<std::uint64_t>(m.rows());
    if (m.rows() != m.cols() || d < 2 || (d & (d - 1)) != 0) {
        throw ArgumentError("expected a square power-of-two matrix");
    }
    int n = 0;
    while ((std::uint64_t{1} << n) < d) {
        ++n;
    }
    return n;
}

void check_pair(const MatrixXc &u, const MatrixXc &v) {
    qubits_of(u);
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw ArgumentError("matrix dimensions differ");
    }
}

} // namespace

std::complex<double> overlap_oracle(const MatrixXc &u, const MatrixXc &v) {
    check_pair(u, v);
    return (v.adjoint() * u).trace() / static_cast<double>(u.rows());
}

double hst_cost_oracle(const MatrixXc &u, const MatrixXc &v) {
    return 1.0 - std::norm(overlap_oracle(u, v));
}

double local_fidelity_oracle(const MatrixXc &w, int qubit) {
    const int n = qubits_of(w);
    if (qubit < 0 || qubit >= n) {
        throw IndexError("qubit out of range");
    }
    const Eigen::Index d = w.rows();
    const Eigen::Index bit = Eigen::Index{1} << qubit;
    const Eigen::Index d_rest = d / 2;
    // Full index from a rest index r and a bit value b for `qubit`.
    auto full = [&](Eigen::Index r, Eigen::Index b) {
        const Eigen::Index low = r & (bit - 1);
        return ((r - low) << 1) | (b * bit) | low;
    };
    double total = 0.0;
    for (Eigen::Index r = 0; r < d_rest; ++r) {
        for (Eigen::Index rp = 0; rp < d_rest; ++rp) {
            const std::complex<double> tr = w(full(r, 0), full(rp, 0)) + w(full(r, 1), full(rp, 1));
            total += std::norm(tr);
        }
    }
    return total / (4.0 * static_cast<double>(d_rest));
}

double lhst_cost_oracle(const MatrixXc &u, const MatrixXc &v) {
    check_pair(u, v);
    const int n = qubits_of(u);
    const MatrixXc w = u * v.adjoint();
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        sum += local_fidelity_oracle(w, j);
    }
    return 1.0 - sum / n;
}

double avg_fidelity_oracle(const MatrixXc &u, const MatrixXc &v) {
    const double d = static_cast<double>(u.rows());
    return (d * std::norm(overlap_oracle(u, v)) + 1.0) / (d + 1.0);
}

MonteCarloEstimate avg_fidelity_monte_carlo(const MatrixXc &u, const MatrixXc &v,
                                            std::uint64_t samples, std::uint64_t rng_seed) {
    check_pair(u, v);
    if (samples < 2) {
        throw ArgumentError("need at least two samples");
    }
    const MatrixXc w = v.adjoint() * u;
    const Eigen::Index d = u.rows();
    Rng rng(rng_seed);
    Eigen::VectorXcd psi(d);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (Eigen::Index i = 0; i < d; ++i) {
            psi(i) = rng.complex_normal();
        }
        psi.normalize();
        const double f = std::norm(psi.dot(w * psi));
        sum += f;
        sum_sq += f * f;
    }
    const double m = static_cast<double>(samples);
    const double mean = sum / m;
    const double var = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1.0));
    return {mean, std::sqrt(var / m)};
}

std::vector<double> finite_difference_gradient(
    const std::function<double(std::span<const double>)> &f, std::span<const double> x,
    double h) {
    std::vector<double> point(x.begin(), x.end());
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        point[i] = x[i] + h;
        const double fp = f(point);
        point[i] = x[i] - h;
        const double fm = f(point);
        point[i] = x[i];
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

MatrixXc textbook_matrix(const std::string &name) {
    using C = std::complex<double>;
    const double r = 1.0 / std::sqrt(2.0);
    if (name == "I") {
        return MatrixXc::Identity(2, 2);
    }
    if (name == "T") {
        MatrixXc m = MatrixXc::Identity(2, 2);
        m(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
        return m;
    }
    if (name == "X") {
        MatrixXc m(2, 2);
        m << 0.0, 1.0, 1.0, 0.0;
        return m;
    }
    if (name == "H") {
        MatrixXc m(2, 2);
        m << r, r, r, -r;
        return m;
    }
    MatrixXc m = MatrixXc::Zero(4, 4);
    if (name == "CNOT") {
        // Control is qubit 0 (index bit 0): |1,t> -> |1,1-t>.
        m(0, 0) = m(2, 2) = 1.0;
        m(3, 1) = m(1, 3) = 1.0;
        return m;
    }
    if (name == "CZ") {
        m.diagonal() << 1.0, 1.0, 1.0, -1.0;
        return m;
    }
    if (name == "CH") {
        m(0, 0) = m(2, 2) = 1.0;
        m(1, 1) = r;
        m(1, 3) = r;
        m(3, 1) = r;
        m(3, 3) = -r;
        return m;
    }
    if (name == "SWAP") {
        m(0, 0) = m(3, 3) = 1.0;
        m(1, 2) = m(2, 1) = 1.0;
        return m;
    }
    if (name == "QFT2") {
        const C powers[4] = {1.0, C{0.0, 1.0}, -1.0, C{0.0, -1.0}};
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                m(j, k) = 0.5 * powers[(j * k) % 4];
            }
        }
        return m;
    }
    throw ArgumentError("no textbook matrix for '" + name + "'");
}

} // namespace qaqc
