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
"""Python bindings for the qaqc circuit compiler."""

import json

from qaqc._core import (
    Gate,
    GateKind,
    GateSequence,
    ParseError,
    cost,
    preset_names,
    preset_target,
    trace_via_lhst,
    verify,
)
from qaqc._core import run_experiment as _run_experiment

__all__ = [
    "Gate",
    "GateKind",
    "GateSequence",
    "ParseError",
    "cost",
    "preset_names",
    "preset_target",
    "run_experiment",
    "trace_via_lhst",
    "verify",
]


def run_experiment(config):
    """Run an experiment given as a dict or JSON string; returns (report dict, CSV text)."""
    text = config if isinstance(config, str) else json.dumps(config)
    report, csv = _run_experiment(text)
    return json.loads(report), csv
