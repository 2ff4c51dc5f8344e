# Copyright 2026 The QAQC Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import math

import numpy as np
import pytest

import qaqc


def rz(theta):
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


def test_rotation_matrix_matches_numpy():
    seq = qaqc.GateSequence(1)
    seq.append(qaqc.Gate(qaqc.GateKind.Rz, 0, 0.7))
    assert np.allclose(seq.unitary(), rz(0.7), atol=1e-14)


def test_hst_cost_matches_trace_formula():
    rng = np.random.default_rng(3)
    u = qaqc.GateSequence(2)
    v = qaqc.GateSequence(2)
    for seq in (u, v):
        for q in (0, 1):
            seq.append_rotation(qaqc.GateKind.Ry, q, rng.uniform(0, 2 * math.pi))
        seq.append(qaqc.Gate(qaqc.GateKind.CNOT, 0, 1))
    mu, mv = u.unitary(), v.unitary()
    expected = 1 - abs(np.trace(mv.conj().T @ mu)) ** 2 / 16
    value, err = qaqc.cost("hst", u, v)
    assert value == pytest.approx(expected, abs=1e-12)
    assert err == 0.0


def test_lhst_is_below_hst_and_zero_for_equal_pairs():
    u = qaqc.preset_target("QFT2")
    assert qaqc.cost("lhst", u, u)[0] == pytest.approx(0.0, abs=1e-12)
    v = qaqc.preset_target("SWAP")
    assert qaqc.cost("lhst", u, v)[0] <= qaqc.cost("hst", u, v)[0] + 1e-12


def test_json_round_trip_and_qasm():
    seq = qaqc.preset_target("Example1", 3, 5)
    again = qaqc.GateSequence.from_json(seq.to_json())
    assert again.parameters() == seq.parameters()
    assert seq.to_qasm().count("rz(") == 3


def test_trace_via_lhst_exact():
    seq = qaqc.preset_target("CZ")
    value, _ = qaqc.trace_via_lhst(seq)
    assert value == pytest.approx(2.0, abs=1e-9)


def test_run_experiment_finds_t_angle():
    report, csv = qaqc.run_experiment({
        "name": "t",
        "target": "T",
        "structure": {"num_qubits": 1, "gates": [{"kind": "Rz", "qubits": [0], "theta": 0.0}]},
        "optimizer": "bisection",
        "optimizer_config": {"tolerance": 1e-9, "max_iterations": 20, "bisection_levels": 6},
    })
    assert report["converged"]
    assert report["angles"][0]["annotation"] == "0.25pi (1/4 pi)"
    assert csv.startswith("iteration,cost,std_error,gradient_norm,hst_via_lhst_cost\r\n")


def test_bad_config_raises():
    with pytest.raises(ValueError):
        qaqc.run_experiment('{"target": "T", "bogus": 1}')
    with pytest.raises(ValueError):
        qaqc.run_experiment('{"target": ')


def test_verify_suite_passes():
    checks = qaqc.verify()
    assert checks and all(passed for _, passed, _ in checks)
