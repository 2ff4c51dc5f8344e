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
#include "qaqc/sequence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qaqc/errors.hpp"

namespace qaqc {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_mix(std::uint64_t &h, std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
        h ^= (value >> (8 * byte)) & 0xFFU;
        h *= kFnvPrime;
    }
}

/// pi if normalizing `theta` to [0, 2pi) crosses an odd number of 2pi wraps, else 0.
double wrap_phase(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double wraps = std::round((theta - normalize_angle(theta)) / two_pi);
    return std::fmod(std::abs(wraps), 2.0) == 1.0 ? std::numbers::pi : 0.0;
}

} // namespace

GateSequence::GateSequence(int num_qubits, std::vector<Gate> gates, double global_phase)
    : num_qubits_(num_qubits), global_phase_(global_phase) {
    if (num_qubits < 1) {
        throw ArgumentError("a sequence needs at least one qubit");
    }
    gates_.reserve(gates.size());
    for (auto &g : gates) {
        append(g);
    }
}

void GateSequence::check_gate(const Gate &gate) const {
    for (int i = 0; i < gate.arity(); ++i) {
        if (gate.qubit(i) >= num_qubits_) {
            throw IndexError("gate " + std::string(kind_name(gate.kind())) + " addresses qubit " +
                             std::to_string(gate.qubit(i)) + " on a " +
                             std::to_string(num_qubits_) + "-qubit register");
        }
    }
}

void GateSequence::append(const Gate &gate) {
    check_gate(gate);
    gates_.push_back(gate);
}

void GateSequence::append(const GateSequence &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw ArgumentError("appended sequence is wider than the register");
    }
    for (const auto &g : other.gates_) {
        append(g);
    }
    global_phase_ += other.global_phase_;
}

void GateSequence::append_rotation(GateKind kind, int qubit, double theta) {
    if (!kind_is_parameterized(kind)) {
        throw ArgumentError(std::string(kind_name(kind)) + " is not a rotation");
    }
    append(Gate(kind, qubit, theta));
    global_phase_ += wrap_phase(theta);
}

void GateSequence::replace(std::size_t index, const Gate &gate) {
    check_gate(gate);
    gates_.at(index) = gate;
}

void GateSequence::insert(std::size_t index, const Gate &gate) {
    check_gate(gate);
    if (index > gates_.size()) {
        throw IndexError("insert position out of range");
    }
    gates_.insert(gates_.begin() + static_cast<std::ptrdiff_t>(index), gate);
}

void GateSequence::erase(std::size_t index) {
    if (index >= gates_.size()) {
        throw IndexError("erase position out of range");
    }
    gates_.erase(gates_.begin() + static_cast<std::ptrdiff_t>(index));
}

std::size_t GateSequence::num_parameters() const {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(), [](const Gate &g) { return g.is_parameterized(); }));
}

std::vector<double> GateSequence::parameters() const {
    std::vector<double> out;
    for (const auto &g : gates_) {
        if (g.is_parameterized()) {
            out.push_back(g.theta());
        }
    }
    return out;
}

std::vector<std::size_t> GateSequence::parameter_gates() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        if (gates_[i].is_parameterized()) {
            out.push_back(i);
        }
    }
    return out;
}

GateSequence GateSequence::with_parameters(std::span<const double> angles) const {
    if (angles.size() != num_parameters()) {
        throw ArgumentError("expected " + std::to_string(num_parameters()) + " angles, got " +
                            std::to_string(angles.size()));
    }
    GateSequence out = *this;
    std::size_t k = 0;
    for (auto &g : out.gates_) {
        if (g.is_parameterized()) {
            out.global_phase_ += wrap_phase(angles[k]);
            g = g.with_theta(angles[k++]);
        }
    }
    return out;
}

std::uint64_t GateSequence::structure_hash() const {
    std::uint64_t h = kFnvOffset;
    fnv_mix(h, static_cast<std::uint64_t>(num_qubits_));
    for (const auto &g : gates_) {
        fnv_mix(h, static_cast<std::uint64_t>(g.kind()));
        fnv_mix(h, static_cast<std::uint64_t>(g.qubits()[0] + 1));
        fnv_mix(h, static_cast<std::uint64_t>(g.qubits()[1] + 1));
        for (const auto &z : g.fixed_matrix()) {
            fnv_mix(h, std::bit_cast<std::uint64_t>(z.real()));
            fnv_mix(h, std::bit_cast<std::uint64_t>(z.imag()));
        }
    }
    return h;
}

std::size_t GateSequence::count(GateKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(), [kind](const Gate &g) { return g.kind() == kind; }));
}

std::size_t GateSequence::two_qubit_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.arity() == 2; }));
}

GateSequence GateSequence::relabeled(std::span<const int> mapping, int num_qubits) const {
    if (mapping.size() != static_cast<std::size_t>(num_qubits_)) {
        throw ArgumentError("qubit mapping must cover every qubit");
    }
    GateSequence out(num_qubits, {}, global_phase_);
    out.gates_.reserve(gates_.size());
    for (const auto &g : gates_) {
        const int q0 = mapping[static_cast<std::size_t>(g.qubit(0))];
        const int q1 = g.arity() == 2 ? mapping[static_cast<std::size_t>(g.qubit(1))] : -1;
        out.append(g.with_qubits(q0, q1));
    }
    return out;
}

GateSequence GateSequence::shifted(int offset, int num_qubits) const {
    std::vector<int> mapping(static_cast<std::size_t>(num_qubits_));
    for (int q = 0; q < num_qubits_; ++q) {
        mapping[static_cast<std::size_t>(q)] = q + offset;
    }
    return relabeled(mapping, num_qubits);
}

Alphabet::Alphabet(std::string name, std::vector<GateKind> kinds,
                   std::set<std::pair<int, int>> edges)
    : name_(std::move(name)), kinds_(std::move(kinds)) {
    for (auto [a, b] : edges) {
        if (a == b || a < 0 || b < 0) {
            throw ArgumentError("invalid connectivity edge");
        }
        edges_.insert({std::min(a, b), std::max(a, b)});
    }
}

Alphabet Alphabet::ibm() {
    return {"ibm", {GateKind::RxPlusHalfPi, GateKind::Rz, GateKind::CNOT}};
}

Alphabet Alphabet::rigetti() {
    return {"rigetti", {GateKind::RxPlusHalfPi, GateKind::RxMinusHalfPi, GateKind::Rz, GateKind::CZ}};
}

Alphabet Alphabet::full() {
    std::vector<GateKind> kinds;
    for (int k = 0; k < kNumGateKinds; ++k) {
        kinds.push_back(static_cast<GateKind>(k));
    }
    return {"full", std::move(kinds)};
}

Alphabet Alphabet::by_name(const std::string &name) {
    if (name == "ibm") {
        return ibm();
    }
    if (name == "rigetti") {
        return rigetti();
    }
    if (name == "full") {
        return full();
    }
    throw ArgumentError("unknown alphabet '" + name + "'");
}

bool Alphabet::allows(GateKind kind) const {
    return std::find(kinds_.begin(), kinds_.end(), kind) != kinds_.end();
}

bool Alphabet::connected(int q0, int q1) const {
    return edges_.empty() || edges_.count({std::min(q0, q1), std::max(q0, q1)}) > 0;
}

bool Alphabet::admits(const Gate &gate) const {
    return allows(gate.kind()) && (gate.arity() == 1 || connected(gate.qubit(0), gate.qubit(1)));
}

void Alphabet::validate(const GateSequence &seq) const {
    for (const auto &g : seq.gates()) {
        if (!allows(g.kind())) {
            throw UnsupportedGateError(std::string(kind_name(g.kind())) +
                                       " is not in alphabet '" + name_ + "'");
        }
        if (g.arity() == 2 && !connected(g.qubit(0), g.qubit(1))) {
            throw ArgumentError("pair (" + std::to_string(g.qubit(0)) + ", " +
                                std::to_string(g.qubit(1)) + ") violates connectivity of '" +
                                name_ + "'");
        }
    }
}

Alphabet Alphabet::with_edges(std::set<std::pair<int, int>> edges) const {
    return {name_, kinds_, std::move(edges)};
}

UnitaryMatrix sequence_to_matrix(const GateSequence &seq) {
    const int n = seq.num_qubits();
    if (n > kMaxMatrixQubits) {
        throw CapacityError("sequence_to_matrix supports at most " +
                            std::to_string(kMaxMatrixQubits) + " qubits");
    }
    const Eigen::Index d = Eigen::Index{1} << n;
    MatrixXc m = MatrixXc::Identity(d, d);
    // Left-multiplying by an embedded gate only mixes the rows it addresses.
    for (const auto &g : seq.gates()) {
        if (g.arity() == 1) {
            const Matrix2 u = g.matrix2();
            const Eigen::Index bit = Eigen::Index{1} << g.qubit(0);
            for (Eigen::Index r = 0; r < d; ++r) {
                if (r & bit) {
                    continue;
                }
                const Eigen::RowVectorXcd r0 = m.row(r);
                const Eigen::RowVectorXcd r1 = m.row(r | bit);
                m.row(r) = u[0] * r0 + u[1] * r1;
                m.row(r | bit) = u[2] * r0 + u[3] * r1;
            }
        } else {
            const Matrix4 u = g.matrix4();
            const Eigen::Index b0 = Eigen::Index{1} << g.qubit(0);
            const Eigen::Index b1 = Eigen::Index{1} << g.qubit(1);
            for (Eigen::Index r = 0; r < d; ++r) {
                if (r & (b0 | b1)) {
                    continue;
                }
                const Eigen::Index idx[4] = {r, r | b0, r | b1, r | b0 | b1};
                const Eigen::RowVectorXcd rows[4] = {m.row(idx[0]), m.row(idx[1]), m.row(idx[2]),
                                                     m.row(idx[3])};
                for (int a = 0; a < 4; ++a) {
                    m.row(idx[a]) = u[4 * a] * rows[0] + u[4 * a + 1] * rows[1] +
                                    u[4 * a + 2] * rows[2] + u[4 * a + 3] * rows[3];
                }
            }
        }
    }
    m *= std::polar(1.0, seq.global_phase());
    return UnitaryMatrix(std::move(m), 1e-6);
}

int depth(const GateSequence &seq) {
    std::vector<int> frontier(static_cast<std::size_t>(seq.num_qubits()), 0);
    int total = 0;
    for (const auto &g : seq.gates()) {
        int layer = frontier[static_cast<std::size_t>(g.qubit(0))];
        if (g.arity() == 2) {
            layer = std::max(layer, frontier[static_cast<std::size_t>(g.qubit(1))]);
        }
        ++layer;
        frontier[static_cast<std::size_t>(g.qubit(0))] = layer;
        if (g.arity() == 2) {
            frontier[static_cast<std::size_t>(g.qubit(1))] = layer;
        }
        total = std::max(total, layer);
    }
    return total;
}

int depth(const GateSequence &seq, const Alphabet &alphabet) {
    alphabet.validate(seq);
    return depth(seq);
}

} // namespace qaqc
