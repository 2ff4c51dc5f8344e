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
 * Dense-matrix reference values for the circuit-based estimators. Nothing in
 * here touches the statevector simulator, so agreement between the two is a
 * meaningful check.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qaqc/unitary.hpp"

namespace qaqc {

/// Tr(V^dagger U) / d.
std::complex<double> overlap_oracle(const MatrixXc &u, const MatrixXc &v);
/// 1 - |Tr(V^dagger U)|^2 / d^2.
double hst_cost_oracle(const MatrixXc &u, const MatrixXc &v);
/**
 * Entanglement fidelity of the single-qubit channel rho -> Tr_rest[W (rho (x)
 * I/d_rest) W^dagger] on `qubit`, from its Kraus operators <r|W|r'>.
 */
double local_fidelity_oracle(const MatrixXc &w, int qubit);
/// 1 - (1/n) sum_j local_fidelity_oracle(U V^dagger, j).
double lhst_cost_oracle(const MatrixXc &u, const MatrixXc &v);
/// Haar-average state fidelity (d |Tr W / d|^2 + 1) / (d + 1) with W = V^dagger U.
double avg_fidelity_oracle(const MatrixXc &u, const MatrixXc &v);

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Mean of |<psi|V^dagger U|psi>|^2 over `samples` Haar-random states.
MonteCarloEstimate avg_fidelity_monte_carlo(const MatrixXc &u, const MatrixXc &v,
                                            std::uint64_t samples, std::uint64_t rng_seed);

/// Central differences with step h.
std::vector<double> finite_difference_gradient(
    const std::function<double(std::span<const double>)> &f, std::span<const double> x,
    double h = 1e-5);

/**
 * Textbook matrices (little-endian, qubit 0 is the control where one exists):
 * I, T, X, H, CNOT, CZ, CH, SWAP, QFT2 with QFT2[j][k] = i^(jk) / 2.
 */
MatrixXc textbook_matrix(const std::string &name);

} // namespace qaqc
