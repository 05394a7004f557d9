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

"""Python interface to the rotakit core.

Documents are plain dicts in the JSON schema the CLI reads.
"""

import json

from rotakit import _rotakit
from rotakit._rotakit import CapExceeded, InputError, pareto_allocations

__all__ = [
    "CapExceeded",
    "InputError",
    "check",
    "construct",
    "pareto_allocations",
    "run_cli",
    "solve",
]


def solve(document, concept, profile):
    """Solution report for one profile; rights default to the full structure."""
    return json.loads(_rotakit.solve(json.dumps(document), concept, profile))


def check(document, condition):
    """Verdict of one condition checker on the document's SCR."""
    return json.loads(_rotakit.check(json.dumps(document), condition))


def construct(document, theorem=1):
    """Builds and verifies an implementing structure (theorem 1 or 4)."""
    return json.loads(_rotakit.construct(json.dumps(document), theorem))


def run_cli(*args):
    """Runs `rotakit ARGS...` in-process; returns (code, stdout, stderr)."""
    return _rotakit.run_cli([str(a) for a in args])
