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
#include "qaqc/ansatz.hpp"

#include <array>
#include <numbers>

#include "qaqc/errors.hpp"
#include "qaqc/rng.hpp"

namespace qaqc {

namespace {

void append_u3(GateSequence &seq, int q, double z1, double y, double z2) {
    seq.append_rotation(GateKind::Rz, q, z1);
    seq.append_rotation(GateKind::Ry, q, y);
    seq.append_rotation(GateKind::Rz, q, z2);
}

void append_block(GateSequence &seq, std::span<const double> a, int q0, int q1) {
    append_u3(seq, q0, a[0], a[1], a[2]);
    append_u3(seq, q1, a[3], a[4], a[5]);
    seq.append(Gate::cnot(q1, q0));
    seq.append_rotation(GateKind::Rz, q0, a[6]);
    seq.append_rotation(GateKind::Ry, q1, a[7]);
    seq.append(Gate::cnot(q0, q1));
    seq.append_rotation(GateKind::Ry, q1, a[8]);
    seq.append(Gate::cnot(q1, q0));
    append_u3(seq, q0, a[9], a[10], a[11]);
    append_u3(seq, q1, a[12], a[13], a[14]);
}

} // namespace

GateSequence ansatz_universal_1q(std::span<const double> angles, int qubit, int num_qubits) {
    if (angles.size() != kUniversal1qAngles) {
        throw ArgumentError("universal one-qubit template takes 3 angles");
    }
    GateSequence seq(num_qubits);
    append_u3(seq, qubit, angles[0], angles[1], angles[2]);
    return seq;
}

GateSequence ansatz_universal_2q(std::span<const double> angles, int q0, int q1, int num_qubits) {
    if (angles.size() != kUniversal2qAngles) {
        throw ArgumentError("universal two-qubit template takes 15 angles");
    }
    GateSequence seq(num_qubits);
    append_block(seq, angles, q0, q1);
    return seq;
}

std::vector<std::pair<int, int>> layered_pairs(int n) {
    if (n < 2) {
        throw ArgumentError("layered ansatz needs at least two qubits");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int q = 0; q + 1 < n; q += 2) {
        pairs.emplace_back(q, q + 1);
    }
    for (int q = 1; q + 1 < n; q += 2) {
        pairs.emplace_back(q, q + 1);
    }
    if (n > 2 && n % 2 == 0) {
        pairs.emplace_back(0, n - 1);
    }
    return pairs;
}

GateSequence ansatz_layered(int n, int layers, std::uint64_t rng_seed) {
    if (layers < 1) {
        throw ArgumentError("layered ansatz needs at least one layer");
    }
    const auto pairs = layered_pairs(n);
    Rng rng(rng_seed);
    GateSequence seq(n);
    std::array<double, kUniversal2qAngles> angles{};
    for (int layer = 0; layer < layers; ++layer) {
        for (const auto &[a, b] : pairs) {
            for (auto &x : angles) {
                x = 2.0 * std::numbers::pi * rng.uniform();
            }
            append_block(seq, angles, a, b);
        }
    }
    return seq;
}

} // namespace qaqc
