# Copyright 2026 The pidsym Authors
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

"""Reachability for t-nets with pid-tree symmetry reduction."""

import json

from ._pidsym import (
    Error,
    Marking,
    ModelSyntaxError,
    ModelValidationError,
    Pid,
    PidTree,
    StateSpace,
    TNet,
    TooManyPids,
    expand,
    explore,
    is_ancestor,
    is_child,
    is_clean,
    is_elder_sibling,
    is_next_sibling,
    parse_marking,
    parse_model,
    print_marking,
    represent,
    run_cli,
    state_equivalent,
    state_key,
    stripped_form,
    tree_equivalent,
)
from ._pidsym import compare_reductions_json as _compare_reductions_json


def compare_reductions(net, max_states=100000, validate=False, oracle_pid_bound=10):
    """Explores `net` under every mode; returns the report as a dict."""
    return json.loads(_compare_reductions_json(net, max_states, validate, oracle_pid_bound))


def load_model(path, defines=None):
    with open(path, encoding="utf-8") as f:
        return parse_model(f.read(), defines or {})


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
