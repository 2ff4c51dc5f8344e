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
#include "qaqc/noise.hpp"

#include <cmath>
#include <string>

#include "qaqc/errors.hpp"
#include "qaqc/simulator.hpp"

namespace qaqc {

namespace {

void pauli_kick(StateVector &state, int q, Rng &rng) {
    switch (rng.uniform_int(3)) {
    case 0:
        state.apply_x(q);
        break;
    case 1:
        // Y = i X Z
        state.apply_diagonal(1.0, -1.0, q);
        state.apply_x(q);
        state.apply_diagonal(Complex{0.0, 1.0}, Complex{0.0, 1.0}, q);
        break;
    default:
        state.apply_diagonal(1.0, -1.0, q);
        break;
    }
}

void damp(StateVector &state, int q, double gamma, Rng &rng) {
    const double p1 = state.probability_one(q);
    if (rng.uniform() < gamma * p1) {
        // Jump: sigma^- moves |1> amplitudes onto |0>.
        state.apply_matrix(Matrix2{Complex{0.0}, Complex{1.0}, Complex{0.0}, Complex{0.0}}, q);
    } else {
        state.apply_diagonal(1.0, std::sqrt(1.0 - gamma), q);
    }
    state.normalize();
}

} // namespace

void NoiseModel::validate() const {
    const auto check = [](double p, const char *name) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ArgumentError(std::string("noise parameter ") + name + " must lie in [0, 1]");
        }
    };
    check(p1, "p1");
    check(p2, "p2");
    check(gamma, "gamma");
    check(readout_flip0, "readout_flip0");
    check(readout_flip1, "readout_flip1");
}

void noisy_apply(StateVector &state, const Gate &gate, const NoiseModel &model, Rng &rng) {
    apply_gate(state, gate);
    const double p = gate.arity() == 2 ? model.p2 : model.p1;
    for (int i = 0; i < gate.arity(); ++i) {
        const int q = gate.qubit(i);
        if (p > 0.0 && rng.uniform() < p) {
            pauli_kick(state, q, rng);
        }
        if (model.gamma > 0.0) {
            damp(state, q, model.gamma, rng);
        }
    }
}

StateVector simulate_noisy(const GateSequence &seq, const NoiseModel &model, Rng &rng,
                           std::uint64_t input) {
    StateVector state = StateVector::basis(seq.num_qubits(), input);
    for (const auto &g : seq.gates()) {
        noisy_apply(state, g, model, rng);
    }
    return state;
}

std::vector<std::uint64_t> sample_circuit(const GateSequence &circuit,
                                          std::span<const int> measured, std::uint64_t shots,
                                          std::uint64_t rng_seed,
                                          const std::optional<NoiseModel> &model,
                                          std::uint64_t input) {
    if (shots == 0) {
        throw ArgumentError("shots must be positive");
    }
    if (model) {
        model->validate();
    }
    if (!model || !model->has_gate_noise()) {
        const StateVector state = simulate(circuit, input);
        return sample_counts(state, measured, shots, rng_seed, model);
    }
    validate_qubit_list(measured, circuit.num_qubits());
    std::vector<std::uint64_t> counts(std::size_t{1} << measured.size(), 0);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        Rng rng(derive_seed(rng_seed, {shot}));
        const StateVector state = simulate_noisy(circuit, *model, rng, input);
        const auto one = sample_counts(state, measured, 1, rng.next_u64(), model);
        for (std::size_t k = 0; k < one.size(); ++k) {
            counts[k] += one[k];
        }
    }
    return counts;
}

} // namespace qaqc
