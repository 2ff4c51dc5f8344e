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
#include "qaqc/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "qaqc/errors.hpp"
#include "qaqc/rng.hpp"

namespace qaqc {

namespace {

void check_width(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxStateQubits) {
        throw CapacityError("statevector width " + std::to_string(num_qubits) +
                            " outside [1, " + std::to_string(kMaxStateQubits) + "]");
    }
}

/// Inserts a zero bit at position `bit` of `k`.
inline std::size_t insert_zero(std::size_t k, int bit) {
    const std::size_t low = k & ((std::size_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

} // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    StateVector state(num_qubits);
    if (index >= state.size()) {
        throw IndexError("basis index out of range");
    }
    state.amplitudes_[0] = 0.0;
    state.amplitudes_[index] = 1.0;
    return state;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t len = amplitudes.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw ArgumentError("amplitude count must be a power of two >= 2");
    }
    StateVector state(std::countr_zero(len));
    state.amplitudes_ = std::move(amplitudes);
    return state;
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) {
        throw ArgumentError("cannot normalize the zero vector");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto &a : amplitudes_) {
        a *= scale;
    }
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw IndexError("qubit index " + std::to_string(qubit) + " out of range for " +
                         std::to_string(num_qubits_) + " qubits");
    }
}

void StateVector::apply_matrix(const Matrix2 &m, int qubit) {
    check_qubit(qubit);
    const std::size_t half = amplitudes_.size() / 2;
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero(k, qubit);
        const std::size_t i1 = i0 | stride;
        const Complex a0 = amplitudes_[i0];
        const Complex a1 = amplitudes_[i1];
        amplitudes_[i0] = m[0] * a0 + m[1] * a1;
        amplitudes_[i1] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply_matrix(const Matrix4 &m, int q0, int q1) {
    check_qubit(q0);
    check_qubit(q1);
    if (q0 == q1) {
        throw ArgumentError("two-qubit gate needs distinct qubits");
    }
    const int lo = std::min(q0, q1);
    const int hi = std::max(q0, q1);
    const std::size_t s0 = std::size_t{1} << q0;
    const std::size_t s1 = std::size_t{1} << q1;
    const std::size_t quarter = amplitudes_.size() / 4;
    for (std::size_t k = 0; k < quarter; ++k) {
        const std::size_t base = insert_zero(insert_zero(k, lo), hi);
        const std::size_t idx[4] = {base, base | s0, base | s1, base | s0 | s1};
        const Complex v[4] = {amplitudes_[idx[0]], amplitudes_[idx[1]], amplitudes_[idx[2]],
                              amplitudes_[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            amplitudes_[idx[r]] = m[4 * r] * v[0] + m[4 * r + 1] * v[1] + m[4 * r + 2] * v[2] +
                                  m[4 * r + 3] * v[3];
        }
    }
}

void StateVector::apply_diagonal(Complex d0, Complex d1, int qubit) {
    check_qubit(qubit);
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        amplitudes_[i] *= (i & stride) ? d1 : d0;
    }
}

void StateVector::apply_x(int qubit) {
    check_qubit(qubit);
    const std::size_t half = amplitudes_.size() / 2;
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero(k, qubit);
        std::swap(amplitudes_[i0], amplitudes_[i0 | stride]);
    }
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ArgumentError("CNOT needs distinct control and target");
    }
    const int lo = std::min(control, target);
    const int hi = std::max(control, target);
    const std::size_t sc = std::size_t{1} << control;
    const std::size_t st = std::size_t{1} << target;
    const std::size_t quarter = amplitudes_.size() / 4;
    for (std::size_t k = 0; k < quarter; ++k) {
        const std::size_t base = insert_zero(insert_zero(k, lo), hi) | sc;
        std::swap(amplitudes_[base], amplitudes_[base | st]);
    }
}

void StateVector::apply_cz(int q0, int q1) {
    check_qubit(q0);
    check_qubit(q1);
    if (q0 == q1) {
        throw ArgumentError("CZ needs distinct qubits");
    }
    const std::size_t mask = (std::size_t{1} << q0) | (std::size_t{1} << q1);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & mask) == mask) {
            amplitudes_[i] = -amplitudes_[i];
        }
    }
}

double StateVector::probability_one(int qubit) const {
    check_qubit(qubit);
    const std::size_t stride = std::size_t{1} << qubit;
    double total = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (i & stride) {
            total += std::norm(amplitudes_[i]);
        }
    }
    return total;
}

void validate_qubit_list(std::span<const int> qubits, int num_qubits) {
    std::vector<bool> seen(static_cast<std::size_t>(std::max(num_qubits, 0)), false);
    for (const int q : qubits) {
        if (q < 0 || q >= num_qubits) {
            throw IndexError("qubit index " + std::to_string(q) + " out of range");
        }
        if (seen[static_cast<std::size_t>(q)]) {
            throw ArgumentError("qubit list contains duplicates");
        }
        seen[static_cast<std::size_t>(q)] = true;
    }
}

StateVector prepare_bell(int n) {
    if (n < 1 || 2 * n > kMaxStateQubits) {
        throw CapacityError("Bell preparation needs 1 <= n <= " +
                            std::to_string(kMaxStateQubits / 2));
    }
    StateVector state(2 * n);
    auto amps = state.amplitudes();
    const std::size_t d = std::size_t{1} << n;
    const double value = 1.0 / std::sqrt(static_cast<double>(d));
    amps[0] = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
        amps[a | (a << n)] = value;
    }
    return state;
}

double prob_all_zero(const StateVector &state, std::span<const int> qubits) {
    validate_qubit_list(qubits, state.num_qubits());
    std::size_t mask = 0;
    for (const int q : qubits) {
        mask |= std::size_t{1} << q;
    }
    const auto amps = state.amplitudes();
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == 0) {
            total += std::norm(amps[i]);
        }
    }
    return total;
}

std::vector<double> marginal_distribution(const StateVector &state, std::span<const int> qubits) {
    validate_qubit_list(qubits, state.num_qubits());
    if (qubits.size() > 30) {
        throw CapacityError("too many measured qubits for a dense marginal");
    }
    std::vector<double> dist(std::size_t{1} << qubits.size(), 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p == 0.0) {
            continue;
        }
        std::size_t outcome = 0;
        for (std::size_t b = 0; b < qubits.size(); ++b) {
            outcome |= ((i >> qubits[b]) & 1U) << b;
        }
        dist[outcome] += p;
    }
    return dist;
}

std::vector<std::uint64_t> sample_counts(const StateVector &state, std::span<const int> qubits,
                                         std::uint64_t shots, std::uint64_t rng_seed,
                                         const std::optional<NoiseModel> &readout) {
    if (shots == 0) {
        throw ArgumentError("shots must be positive");
    }
    if (readout) {
        readout->validate();
    }
    const auto dist = marginal_distribution(state, qubits);
    std::vector<double> cdf(dist.size());
    std::partial_sum(dist.begin(), dist.end(), cdf.begin());
    const double total = cdf.back();

    const bool flips = readout && readout->has_readout_noise();
    std::vector<std::uint64_t> counts(dist.size(), 0);
    Rng rng(rng_seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t outcome =
            std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
        // Never land on an outcome of zero probability through rounding at the top end.
        while (dist[outcome] == 0.0 && outcome > 0) {
            --outcome;
        }
        if (flips) {
            for (std::size_t b = 0; b < qubits.size(); ++b) {
                const bool one = (outcome >> b) & 1U;
                const double p = one ? readout->readout_flip1 : readout->readout_flip0;
                if (rng.uniform() < p) {
                    outcome ^= std::size_t{1} << b;
                }
            }
        }
        ++counts[outcome];
    }
    return counts;
}

std::vector<MeasurementSample> sample_bitstrings(const StateVector &state,
                                                 std::span<const int> qubits, std::uint64_t shots,
                                                 std::uint64_t rng_seed,
                                                 const std::optional<NoiseModel> &readout) {
    const auto counts = sample_counts(state, qubits, shots, rng_seed, readout);
    std::vector<MeasurementSample> samples;
    for (std::size_t outcome = 0; outcome < counts.size(); ++outcome) {
        if (counts[outcome] == 0) {
            continue;
        }
        MeasurementSample sample;
        sample.count = counts[outcome];
        sample.bits.resize(qubits.size());
        for (std::size_t b = 0; b < qubits.size(); ++b) {
            sample.bits[b] = static_cast<std::uint8_t>((outcome >> b) & 1U);
        }
        samples.push_back(std::move(sample));
    }
    return samples;
}

StateVector haar_random_state(int num_qubits, std::uint64_t rng_seed) {
    StateVector state(num_qubits);
    Rng rng(rng_seed);
    for (auto &a : state.amplitudes()) {
        a = rng.complex_normal();
    }
    state.normalize();
    return state;
}

} // namespace qaqc
