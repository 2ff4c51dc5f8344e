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
#include "qaqc/presets.hpp"

#include <numbers>

#include "qaqc/errors.hpp"
#include "qaqc/rng.hpp"
#include "qaqc/transforms.hpp"

namespace qaqc {

namespace {

constexpr std::uint64_t kTargetStream = 0x54475254;
constexpr std::uint64_t kAnsatzStream = 0x414e5354;

std::vector<double> angles_from(std::uint64_t seed, std::uint64_t stream, int count) {
    Rng rng(derive_seed(seed, {stream}));
    std::vector<double> out(static_cast<std::size_t>(count));
    for (auto &a : out) {
        a = 2.0 * std::numbers::pi * rng.uniform();
    }
    return out;
}

GateSequence controlled_on(GateKind kind) {
    GateSequence inner(2, {Gate(kind, 1)});
    return controlled_sequence(inner, 0);
}

void check_width(const std::string &name, int n, int min_n) {
    if (n < min_n) {
        throw ArgumentError(name + " needs n >= " + std::to_string(min_n));
    }
}

} // namespace

const std::vector<std::string> &preset_names() {
    static const std::vector<std::string> names = {"I",  "T",    "X",    "H",        "CNOT",    "CZ",
                                                   "CH", "SWAP", "QFT2", "Example1", "Example2"};
    return names;
}

GateSequence example1_circuit(std::span<const double> angles) {
    GateSequence seq(static_cast<int>(angles.size()));
    for (std::size_t j = 0; j < angles.size(); ++j) {
        seq.append_rotation(GateKind::Rz, static_cast<int>(j), angles[j]);
    }
    return seq;
}

GateSequence example2_circuit(std::span<const double> first, std::span<const double> second) {
    if (first.size() != second.size() || first.size() < 2) {
        throw ArgumentError("Example2 needs two equal angle layers on at least two qubits");
    }
    const int n = static_cast<int>(first.size());
    GateSequence seq(n);
    for (int j = 0; j < n; ++j) {
        seq.append_rotation(GateKind::Rz, j, first[static_cast<std::size_t>(j)]);
    }
    for (int j = 0; j + 1 < n; j += 2) {
        seq.append(Gate::cnot(j, j + 1));
    }
    for (int j = 1; j + 1 < n; j += 2) {
        seq.append(Gate::cnot(j, j + 1));
    }
    for (int j = 0; j < n; ++j) {
        seq.append_rotation(GateKind::Rz, j, second[static_cast<std::size_t>(j)]);
    }
    return seq;
}

GateSequence preset_target(const std::string &name, int n, std::uint64_t seed) {
    if (name == "I") {
        return GateSequence(1);
    }
    if (name == "T" || name == "X" || name == "H") {
        return GateSequence(1, {Gate(kind_from_name(name), 0)});
    }
    if (name == "CNOT") {
        return GateSequence(2, {Gate::cnot(0, 1)});
    }
    if (name == "CZ") {
        return GateSequence(2, {Gate::cz(0, 1)});
    }
    if (name == "CH") {
        return controlled_on(GateKind::H);
    }
    if (name == "SWAP") {
        return GateSequence(2, {Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cnot(0, 1)});
    }
    if (name == "QFT2") {
        // Qubit 1 is the most significant bit.
        GateSequence seq(2, {Gate(GateKind::H, 1)});
        seq.append(controlled_on(GateKind::S));
        seq.append(Gate(GateKind::H, 0));
        seq.append(preset_target("SWAP"));
        return seq;
    }
    if (name == "Example1") {
        check_width(name, n, 1);
        return example1_circuit(angles_from(seed, kTargetStream, n));
    }
    if (name == "Example2") {
        check_width(name, n, 2);
        const auto a = angles_from(seed, kTargetStream, 2 * n);
        return example2_circuit(std::span(a).first(static_cast<std::size_t>(n)),
                                std::span(a).last(static_cast<std::size_t>(n)));
    }
    throw ArgumentError("unknown preset '" + name + "'");
}

bool preset_has_ansatz(const std::string &name) {
    return name == "Example1" || name == "Example2";
}

GateSequence preset_ansatz(const std::string &name, int n, std::uint64_t seed) {
    if (name == "Example1") {
        check_width(name, n, 1);
        return example1_circuit(angles_from(seed, kAnsatzStream, n));
    }
    if (name == "Example2") {
        check_width(name, n, 2);
        const auto a = angles_from(seed, kAnsatzStream, 2 * n);
        return example2_circuit(std::span(a).first(static_cast<std::size_t>(n)),
                                std::span(a).last(static_cast<std::size_t>(n)));
    }
    throw ArgumentError("preset '" + name + "' has no trainable structure");
}

} // namespace qaqc
