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
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qaqc/cost.hpp"
#include "qaqc/errors.hpp"
#include "qaqc/experiments.hpp"
#include "qaqc/presets.hpp"
#include "qaqc/serialize.hpp"
#include "qaqc/verify.hpp"

namespace py = pybind11;

namespace {

qaqc::Backend make_backend(std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        return qaqc::ExactBackend{};
    }
    return qaqc::SampledBackend{shots, seed, std::nullopt};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Variational circuit compilation on a statevector simulator";

    py::register_exception<qaqc::ParseError>(m, "ParseError", PyExc_ValueError);

    py::enum_<qaqc::GateKind>(m, "GateKind")
        .value("RxPlusHalfPi", qaqc::GateKind::RxPlusHalfPi)
        .value("RxMinusHalfPi", qaqc::GateKind::RxMinusHalfPi)
        .value("Rx", qaqc::GateKind::Rx)
        .value("Ry", qaqc::GateKind::Ry)
        .value("Rz", qaqc::GateKind::Rz)
        .value("CNOT", qaqc::GateKind::CNOT)
        .value("CZ", qaqc::GateKind::CZ)
        .value("H", qaqc::GateKind::H)
        .value("X", qaqc::GateKind::X)
        .value("Y", qaqc::GateKind::Y)
        .value("Z", qaqc::GateKind::Z)
        .value("S", qaqc::GateKind::S)
        .value("Sdg", qaqc::GateKind::Sdg)
        .value("T", qaqc::GateKind::T)
        .value("Tdg", qaqc::GateKind::Tdg);

    py::class_<qaqc::Gate>(m, "Gate")
        .def(py::init<qaqc::GateKind, int>(), py::arg("kind"), py::arg("qubit"))
        .def(py::init<qaqc::GateKind, int, double>(), py::arg("kind"), py::arg("qubit"),
             py::arg("theta"))
        .def(py::init<qaqc::GateKind, int, int>(), py::arg("kind"), py::arg("q0"), py::arg("q1"))
        .def_property_readonly("kind", &qaqc::Gate::kind)
        .def_property_readonly("theta", &qaqc::Gate::theta)
        .def_property_readonly("qubits", [](const qaqc::Gate &g) {
            std::vector<int> q{g.qubit(0)};
            if (g.arity() == 2) {
                q.push_back(g.qubit(1));
            }
            return q;
        })
        .def("__eq__", [](const qaqc::Gate &a, const qaqc::Gate &b) { return a == b; })
        .def("__repr__", [](const qaqc::Gate &g) {
            std::string s = "Gate(" + std::string(qaqc::kind_name(g.kind()));
            if (g.is_parameterized()) {
                s += ", theta=" + qaqc::format_double(g.theta());
            }
            return s + ")";
        });

    py::class_<qaqc::GateSequence>(m, "GateSequence")
        .def(py::init<int>(), py::arg("num_qubits"))
        .def_property_readonly("num_qubits", &qaqc::GateSequence::num_qubits)
        .def_property_readonly("global_phase", &qaqc::GateSequence::global_phase)
        .def_property_readonly("gates", &qaqc::GateSequence::gates)
        .def("__len__", &qaqc::GateSequence::size)
        .def("append", py::overload_cast<const qaqc::Gate &>(&qaqc::GateSequence::append))
        .def("append_rotation", &qaqc::GateSequence::append_rotation, py::arg("kind"),
             py::arg("qubit"), py::arg("theta"))
        .def("parameters", &qaqc::GateSequence::parameters)
        .def("with_parameters", &qaqc::GateSequence::with_parameters)
        .def("unitary",
             [](const qaqc::GateSequence &s) { return qaqc::sequence_to_matrix(s).matrix(); })
        .def("depth", [](const qaqc::GateSequence &s) { return qaqc::depth(s); })
        .def("to_qasm", &qaqc::export_qasm)
        .def("to_json", &qaqc::export_json)
        .def_static("from_json", &qaqc::import_json, py::arg("text"));

    m.def("preset_target", &qaqc::preset_target, py::arg("name"), py::arg("n") = 0,
          py::arg("seed") = 0);
    m.def("preset_names", &qaqc::preset_names);

    m.def(
        "cost",
        [](const std::string &kind, const qaqc::GateSequence &u, const qaqc::GateSequence &v,
           std::uint64_t shots, std::uint64_t seed) {
            const auto c = qaqc::evaluate_cost(qaqc::CostKind::parse(kind), u, v,
                                               make_backend(shots, seed));
            return py::make_tuple(c.value, c.std_error);
        },
        py::arg("kind"), py::arg("u"), py::arg("v"), py::arg("shots") = 0, py::arg("seed") = 0,
        "Cost of V against U as (value, std_error); shots=0 is exact.");
    m.def(
        "trace_via_lhst",
        [](const qaqc::GateSequence &u, std::uint64_t shots, std::uint64_t seed) {
            const auto t = qaqc::trace_via_lhst(u, make_backend(shots, seed));
            return py::make_tuple(t.value, t.std_error);
        },
        py::arg("u"), py::arg("shots") = 0, py::arg("seed") = 0);

    m.def(
        "run_experiment",
        [](const std::string &config) {
            qaqc::RunReport report;
            {
                py::gil_scoped_release release;
                report = qaqc::run_experiment(qaqc::parse_experiment_spec(config));
            }
            return py::make_tuple(qaqc::report_json(report).dump(), qaqc::report_csv(report));
        },
        py::arg("config"), "Runs a JSON experiment config; returns (report JSON, trace CSV).");

    m.def("verify", [](std::uint64_t seed) {
        std::vector<py::tuple> out;
        for (const auto &c : qaqc::verify_suite(seed)) {
            out.push_back(py::make_tuple(c.name, c.passed, c.detail));
        }
        return out;
    }, py::arg("seed") = 2026);
}
