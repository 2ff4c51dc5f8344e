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
 * Dense statevector storage and the in-place stride kernels that act on it.
 *
 * Amplitude ordering is little-endian: qubit 0 is the least-significant bit of
 * the basis index. Every index computation in the project follows this rule.
 */
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qaqc/noise_model.hpp"

namespace qaqc {

using Complex = std::complex<double>;
/// Row-major 2x2 matrix.
using Matrix2 = std::array<Complex, 4>;
/// Row-major 4x4 matrix; local index = bit(q0) + 2 * bit(q1).
using Matrix4 = std::array<Complex, 16>;

/// Largest register the statevector will allocate (2^24 amplitudes, 256 MiB).
inline constexpr int kMaxStateQubits = 24;

class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(int num_qubits);

    static StateVector basis(int num_qubits, std::uint64_t index);
    /// Takes ownership of `amplitudes`; the length must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amplitudes_; }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amplitudes_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;
    void normalize();

    void apply_matrix(const Matrix2 &m, int qubit);
    void apply_matrix(const Matrix4 &m, int q0, int q1);
    void apply_diagonal(Complex d0, Complex d1, int qubit);
    void apply_x(int qubit);
    void apply_cnot(int control, int target);
    void apply_cz(int q0, int q1);

    /// Probability that `qubit` reads 1.
    [[nodiscard]] double probability_one(int qubit) const;

    void check_qubit(int qubit) const;

  private:
    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// One measured outcome; `bits[i]` is the value of the i-th requested qubit.
struct MeasurementSample {
    std::vector<std::uint8_t> bits;
    std::uint64_t count = 0;
};

/// |Φ+> on 2n qubits ordered A_1..A_n B_1..B_n (A_j = qubit j-1, B_j = qubit n+j-1).
StateVector prepare_bell(int n);

/// Marginal probability that every listed qubit reads 0.
double prob_all_zero(const StateVector &state, std::span<const int> qubits);

/// Marginal distribution over the listed qubits; outcome bit i is qubits[i].
std::vector<double> marginal_distribution(const StateVector &state, std::span<const int> qubits);

/**
 * Draws `shots` outcomes of the listed qubits. Readout flips from `readout`
 * are applied independently per bit after the ideal draw. Returns counts
 * indexed by outcome (bit i = qubits[i]).
 */
std::vector<std::uint64_t> sample_counts(const StateVector &state, std::span<const int> qubits,
                                         std::uint64_t shots, std::uint64_t rng_seed,
                                         const std::optional<NoiseModel> &readout = std::nullopt);

/// Same draw as `sample_counts`, reported as the non-empty bitstrings in outcome order.
std::vector<MeasurementSample>
sample_bitstrings(const StateVector &state, std::span<const int> qubits, std::uint64_t shots,
                  std::uint64_t rng_seed, const std::optional<NoiseModel> &readout = std::nullopt);

/// Uniformly random unit vector on 2^m amplitudes.
StateVector haar_random_state(int num_qubits, std::uint64_t rng_seed);

void validate_qubit_list(std::span<const int> qubits, int num_qubits);

} // namespace qaqc
