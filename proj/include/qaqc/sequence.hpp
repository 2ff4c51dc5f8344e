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

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qaqc/gate.hpp"
#include "qaqc/unitary.hpp"

namespace qaqc {

/**
 * @brief Ordered gate list on a fixed register; gates[0] acts first.
 *
 * The structure is the list of (kind, qubits) pairs, the parameters are the
 * angles of the Rx/Ry/Rz gates in order. `global_phase` is a scalar factor
 * e^{i phase} carried so that rewrites which are exact only up to phase can
 * still be composed into controlled circuits without error.
 */
class GateSequence {
  public:
    GateSequence() = default;
    explicit GateSequence(int num_qubits, std::vector<Gate> gates = {}, double global_phase = 0.0);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
    [[nodiscard]] const Gate &operator[](std::size_t i) const { return gates_[i]; }
    [[nodiscard]] double global_phase() const noexcept { return global_phase_; }

    void append(const Gate &gate);
    void append(const GateSequence &other);
    /**
     * Appends R_P(theta) exactly. The stored angle is normalized to [0, 2pi)
     * and R_P(theta + 2pi) = -R_P(theta), so each odd wrap adds pi to the
     * global phase.
     */
    void append_rotation(GateKind kind, int qubit, double theta);
    void set_global_phase(double phase) { global_phase_ = phase; }
    void add_global_phase(double phase) { global_phase_ += phase; }
    void replace(std::size_t index, const Gate &gate);
    void insert(std::size_t index, const Gate &gate);
    void erase(std::size_t index);

    [[nodiscard]] std::size_t num_parameters() const;
    [[nodiscard]] std::vector<double> parameters() const;
    /// Gate index of each parameter, in parameter order.
    [[nodiscard]] std::vector<std::size_t> parameter_gates() const;
    /// Copy with new angles; wraps out of [0, 2pi) are folded into the global phase.
    [[nodiscard]] GateSequence with_parameters(std::span<const double> angles) const;

    /// Hash of the structure only (kinds and qubits, not angles or phase).
    [[nodiscard]] std::uint64_t structure_hash() const;
    [[nodiscard]] std::size_t count(GateKind kind) const;
    [[nodiscard]] std::size_t two_qubit_count() const;

    /// Copy on a wider register with qubit q moved to mapping[q].
    [[nodiscard]] GateSequence relabeled(std::span<const int> mapping, int num_qubits) const;
    /// Copy with every qubit index shifted by `offset` on a register of `num_qubits`.
    [[nodiscard]] GateSequence shifted(int offset, int num_qubits) const;

    friend bool operator==(const GateSequence &, const GateSequence &) = default;

  private:
    void check_gate(const Gate &gate) const;

    int num_qubits_ = 0;
    std::vector<Gate> gates_;
    double global_phase_ = 0.0;
};

/**
 * @brief Device gate set: allowed kinds plus an undirected coupling graph.
 *
 * An empty edge set means all-to-all connectivity.
 */
class Alphabet {
  public:
    Alphabet(std::string name, std::vector<GateKind> kinds,
             std::set<std::pair<int, int>> edges = {});

    /// {Rx(pi/2), Rz, CNOT}.
    static Alphabet ibm();
    /// {Rx(+pi/2), Rx(-pi/2), Rz, CZ}.
    static Alphabet rigetti();
    /// Every kind, all-to-all. Intended for tests and targets.
    static Alphabet full();
    /// Resolves "ibm", "rigetti" or "full".
    static Alphabet by_name(const std::string &name);

    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<GateKind> &kinds() const noexcept { return kinds_; }
    [[nodiscard]] const std::set<std::pair<int, int>> &edges() const noexcept { return edges_; }
    [[nodiscard]] bool allows(GateKind kind) const;
    [[nodiscard]] bool connected(int q0, int q1) const;
    [[nodiscard]] bool admits(const Gate &gate) const;
    /// Throws UnsupportedGateError or ArgumentError (connectivity) on the first violation.
    void validate(const GateSequence &seq) const;

    [[nodiscard]] Alphabet with_edges(std::set<std::pair<int, int>> edges) const;

  private:
    std::string name_;
    std::vector<GateKind> kinds_;
    std::set<std::pair<int, int>> edges_;
};

/// Brute-force product G_L ... G_1 times e^{i global_phase}; n <= kMaxMatrixQubits.
UnitaryMatrix sequence_to_matrix(const GateSequence &seq);

/// Layers under the greedy as-soon-as-possible schedule.
int depth(const GateSequence &seq);
/// Same, after checking the sequence against the alphabet.
int depth(const GateSequence &seq, const Alphabet &alphabet);

} // namespace qaqc
