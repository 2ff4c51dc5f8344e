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
#include "qaqc/serialize.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "qaqc/errors.hpp"

namespace qaqc {

namespace {

using nlohmann::json;
using std::numbers::pi;

std::string qasm_rotation(std::string_view name, double theta, int q) {
    return std::string(name) + "(" + format_double(theta) + ") q[" + std::to_string(q) + "];\n";
}

std::string qasm_plain(std::string_view name, int q) {
    return std::string(name) + " q[" + std::to_string(q) + "];\n";
}

std::string qasm_pair(std::string_view name, int a, int b) {
    return std::string(name) + " q[" + std::to_string(a) + "],q[" + std::to_string(b) + "];\n";
}

json complex_to_json(Complex z) { return json::array({hex_float(z.real()), hex_float(z.imag())}); }

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw ArgumentError("matrix entries must be [re, im] hex-float string pairs");
    }
    return {parse_float(j[0].get<std::string>()), parse_float(j[1].get<std::string>())};
}

} // namespace

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return {buf.data(), result.ptr};
}

std::string hex_float(double value) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%a", value);
    return buf.data();
}

double parse_float(std::string_view text) {
    const std::string owned(text);
    if (owned.empty()) {
        throw ArgumentError("empty number");
    }
    char *end = nullptr;
    const double value = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size()) {
        throw ArgumentError("malformed number '" + owned + "'");
    }
    return value;
}

std::string export_qasm(const GateSequence &seq) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << seq.num_qubits() << "];\n";
    for (const auto &g : seq.gates()) {
        const int q = g.qubit(0);
        switch (g.kind()) {
        case GateKind::RxPlusHalfPi:
            out << qasm_rotation("rx", pi / 2.0, q);
            break;
        case GateKind::RxMinusHalfPi:
            out << qasm_rotation("rx", -pi / 2.0, q);
            break;
        case GateKind::Rx:
            out << qasm_rotation("rx", g.theta(), q);
            break;
        case GateKind::Ry:
            // Ry(t) = Rz(pi/2) Rx(t) Rz(-pi/2), exactly
            out << qasm_rotation("rz", -pi / 2.0, q) << qasm_rotation("rx", g.theta(), q)
                << qasm_rotation("rz", pi / 2.0, q);
            break;
        case GateKind::Rz:
            out << qasm_rotation("rz", g.theta(), q);
            break;
        case GateKind::CNOT:
            out << qasm_pair("cx", q, g.qubit(1));
            break;
        case GateKind::CZ:
            out << qasm_pair("cz", q, g.qubit(1));
            break;
        case GateKind::H:
            out << qasm_plain("h", q);
            break;
        case GateKind::X:
            out << qasm_plain("x", q);
            break;
        case GateKind::Y:
            // Y = i X Z, so up to phase: Z first, then X.
            out << qasm_rotation("rz", pi, q) << qasm_plain("x", q);
            break;
        case GateKind::Z:
            out << qasm_rotation("rz", pi, q);
            break;
        case GateKind::S:
            out << qasm_plain("s", q);
            break;
        case GateKind::Sdg:
            out << qasm_rotation("rz", -pi / 2.0, q);
            break;
        case GateKind::T:
            out << qasm_plain("t", q);
            break;
        case GateKind::Tdg:
            out << qasm_rotation("rz", -pi / 4.0, q);
            break;
        case GateKind::FixedOneQubit:
        case GateKind::FixedTwoQubit:
            throw UnsupportedGateError("fixed-matrix gates have no QASM spelling");
        }
    }
    return out.str();
}

json sequence_to_json(const GateSequence &seq) {
    json gates = json::array();
    for (const auto &g : seq.gates()) {
        json entry;
        entry["kind"] = std::string(kind_name(g.kind()));
        entry["qubits"] =
            g.arity() == 2 ? json::array({g.qubit(0), g.qubit(1)}) : json::array({g.qubit(0)});
        if (g.is_parameterized()) {
            entry["theta"] = hex_float(g.theta());
        }
        if (!g.fixed_matrix().empty()) {
            json rows = json::array();
            for (const auto &z : g.fixed_matrix()) {
                rows.push_back(complex_to_json(z));
            }
            entry["matrix"] = std::move(rows);
        }
        gates.push_back(std::move(entry));
    }
    json doc;
    doc["num_qubits"] = seq.num_qubits();
    doc["gates"] = std::move(gates);
    if (seq.global_phase() != 0.0) {
        doc["global_phase"] = hex_float(seq.global_phase());
    }
    return doc;
}

GateSequence sequence_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw ArgumentError("circuit document must be an object");
    }
    if (!doc.contains("num_qubits") || !doc["num_qubits"].is_number_integer()) {
        throw ArgumentError("field 'num_qubits' must be an integer");
    }
    if (!doc.contains("gates") || !doc["gates"].is_array()) {
        throw ArgumentError("field 'gates' must be an array");
    }
    double phase = 0.0;
    if (doc.contains("global_phase")) {
        const auto &p = doc["global_phase"];
        phase = p.is_string() ? parse_float(p.get<std::string>()) : p.get<double>();
    }
    GateSequence seq(doc["num_qubits"].get<int>(), {}, phase);
    std::size_t index = 0;
    for (const auto &entry : doc["gates"]) {
        const std::string where = "gates[" + std::to_string(index++) + "]";
        if (!entry.is_object() || !entry.contains("kind") || !entry["kind"].is_string()) {
            throw ArgumentError(where + ": missing string field 'kind'");
        }
        const GateKind kind = kind_from_name(entry["kind"].get<std::string>());
        if (!entry.contains("qubits") || !entry["qubits"].is_array() ||
            entry["qubits"].size() != static_cast<std::size_t>(kind_arity(kind))) {
            throw ArgumentError(where + ": 'qubits' must list " +
                                std::to_string(kind_arity(kind)) + " indices");
        }
        for (const auto &q : entry["qubits"]) {
            if (!q.is_number_integer()) {
                throw ArgumentError(where + ": qubit indices must be integers");
            }
        }
        const int q0 = entry["qubits"][0].get<int>();
        const int q1 = kind_arity(kind) == 2 ? entry["qubits"][1].get<int>() : -1;
        if (kind == GateKind::FixedOneQubit || kind == GateKind::FixedTwoQubit) {
            const std::size_t dim = kind == GateKind::FixedOneQubit ? 4 : 16;
            if (!entry.contains("matrix") || !entry["matrix"].is_array() ||
                entry["matrix"].size() != dim) {
                throw ArgumentError(where + ": fixed gate needs a row-major 'matrix' of " +
                                    std::to_string(dim) + " entries");
            }
            if (dim == 4) {
                Matrix2 m;
                for (std::size_t k = 0; k < 4; ++k) {
                    m[k] = complex_from_json(entry["matrix"][k]);
                }
                seq.append(Gate::fixed(m, q0));
            } else {
                Matrix4 m;
                for (std::size_t k = 0; k < 16; ++k) {
                    m[k] = complex_from_json(entry["matrix"][k]);
                }
                seq.append(Gate::fixed(m, q0, q1));
            }
            continue;
        }
        if (kind_is_parameterized(kind)) {
            if (!entry.contains("theta")) {
                throw ArgumentError(where + ": missing 'theta'");
            }
            const auto &t = entry["theta"];
            if (!t.is_string() && !t.is_number()) {
                throw ArgumentError(where + ": 'theta' must be a hex-float string or number");
            }
            const double theta = t.is_string() ? parse_float(t.get<std::string>()) : t.get<double>();
            seq.append(Gate(kind, q0, theta));
        } else if (kind_arity(kind) == 2) {
            seq.append(Gate(kind, q0, q1));
        } else {
            seq.append(Gate(kind, q0));
        }
    }
    return seq;
}

std::string export_json(const GateSequence &seq) { return sequence_to_json(seq).dump(2) + "\n"; }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

GateSequence import_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        // byte is the 1-based position of the offending character.
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, column] = line_column(text, offset);
        throw ParseError("malformed circuit JSON", line, column);
    }
    try {
        return sequence_from_json(doc);
    } catch (const std::exception &e) {
        throw ParseError(std::string("invalid circuit: ") + e.what(), 1, 1);
    }
}

} // namespace qaqc
