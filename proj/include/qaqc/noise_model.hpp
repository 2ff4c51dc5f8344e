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

namespace qaqc {

/**
 * @brief Parameterised stochastic noise for sampled runs.
 *
 * Gate errors are Pauli kicks and amplitude damping applied per touched qubit
 * after each gate; readout errors flip measured bits independently. The
 * defaults are realistic-magnitude stand-ins, not calibrated device values.
 */
struct NoiseModel {
    double p1 = 0.0;            ///< Pauli-error probability per qubit of a one-qubit gate.
    double p2 = 0.0;            ///< Pauli-error probability per qubit of a two-qubit gate.
    double gamma = 0.0;         ///< Amplitude-damping probability per gate per touched qubit.
    double readout_flip0 = 0.0; ///< P(read 1 | state 0).
    double readout_flip1 = 0.0; ///< P(read 0 | state 1).

    static NoiseModel noiseless() { return {}; }
    static NoiseModel defaults() { return {0.001, 0.01, 0.001, 0.02, 0.02}; }

    [[nodiscard]] bool has_gate_noise() const { return p1 > 0.0 || p2 > 0.0 || gamma > 0.0; }
    [[nodiscard]] bool has_readout_noise() const {
        return readout_flip0 > 0.0 || readout_flip1 > 0.0;
    }
    [[nodiscard]] bool is_noiseless() const { return !has_gate_noise() && !has_readout_noise(); }

    /// Throws ArgumentError unless every probability lies in [0, 1].
    void validate() const;

    friend bool operator==(const NoiseModel &, const NoiseModel &) = default;
};

} // namespace qaqc
