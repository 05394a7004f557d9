# Copyright 2026 The Rotakit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import pathlib

import pytest

import rotakit

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "tests" / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_mss_at_r_prime():
    report = rotakit.solve(load("three_alternatives.json"), "mss", "R'")
    assert report["outcome_sets"] == [["x", "y"]]
    assert report["deterrence"] and report["external_stability"]


def test_three_alternative_rule_conditions():
    doc = load("three_alternatives.json")
    assert rotakit.check(doc, "indirect")["ok"]
    assert rotakit.check(doc, "rotation-monotonicity")["status"] == "violated"


def test_construct_theorem_one_and_obstruction():
    doc = load("three_alternatives.json")
    built = rotakit.construct(doc, 1)
    assert built["verification"]["ok"]
    assert "obstruction" in rotakit.construct(doc, 4)


def test_pareto_allocations_two_agents():
    assert sorted(rotakit.pareto_allocations([[0, 1], [1, 0]])) == [[0, 1]]


def test_cli_exit_codes():
    code, out, _ = rotakit.run_cli("check", FIXTURES / "three_alternatives.json")
    assert code == 0
    assert json.loads(out)["command"] == "check"
    code, _, err = rotakit.run_cli("solve", "/missing.json")
    assert code == 1 and "error" in err


def test_input_error_is_value_error():
    with pytest.raises(ValueError):
        rotakit.solve(load("three_alternatives.json"), "nash", "R")
