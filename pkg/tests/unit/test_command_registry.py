# SPDX-FileCopyrightText: Copyright (c) 2026 hopi-workbench contributors. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Unit tests for the command registry helpers.

These pin the public behavior of :mod:`hopi_workbench.commands.registry` so
scripts driving ``hopi`` can rely on the same command names and help text.
"""

from __future__ import annotations

import json
from types import SimpleNamespace

import pytest

from hopi_workbench.checker import Outcome, Verdict
from hopi_workbench.cli import WorkbenchCLI
from hopi_workbench.commands import registry
from hopi_workbench.commands.common import emit, read_argument, verdict_lines
from hopi_workbench.errors import InputError


def test_command_names_are_ordered_as_registered():
    assert registry.command_names() == [spec.name for spec in registry.COMMANDS]
    assert registry.command_names()[0] == "normalize"


def test_command_help_returns_short_help_text():
    assert registry.command_help() == {spec.name: spec.short_help for spec in registry.COMMANDS}


def test_help_for_returns_subparser_help_text():
    spec = registry.COMMANDS_BY_NAME["check"]
    assert registry.help_for("check") == spec.help
    assert registry.help_for("check") != spec.short_help


def test_help_for_raises_keyerror_for_unknown_commands():
    with pytest.raises(KeyError):
        registry.help_for("definitely-not-a-command")


@pytest.mark.parametrize(
    "group, names",
    [
        ("process", {"normalize", "congruent", "step", "reach", "barbs"}),
        ("logic", {"check", "translate"}),
        ("proof", {"prove", "verify-proof", "validity-sample"}),
        ("equiv", {"equiv"}),
        ("corpus", {"phi-demo", "generate"}),
        ("info", {"version"}),
    ],
)
def test_commands_in_group_filters_by_group(group, names):
    assert {spec.name for spec in registry.commands_in_group(group)} == names


def test_commands_in_group_returns_empty_for_unknown_group():
    assert list(registry.commands_in_group("nope")) == []


def test_commands_by_name_keys_match_specs():
    for spec in registry.COMMANDS:
        assert registry.COMMANDS_BY_NAME[spec.name] is spec
    assert len(registry.COMMANDS_BY_NAME) == len(registry.COMMANDS)


def test_every_registered_command_has_a_subparser():
    cli = WorkbenchCLI(script_name="hopi")
    assert set(cli.subparsers) == set(registry.command_names())


def test_suggestions_come_from_registered_commands():
    cli = WorkbenchCLI(script_name="hopi")
    assert cli._suggest_command("verify-prof") == ["verify-proof"]
    assert cli._suggest_command("zzzzzzzz") == []


# ---- shared helpers ------------------------------------------------------------


def test_read_argument_inline_and_file(tmp_path):
    assert read_argument("a<0>.0") == ("a<0>.0", "<arg>")
    path = tmp_path / "p.hopi"
    path.write_text("0")
    assert read_argument(f"@{path}") == ("0", str(path))
    with pytest.raises(InputError):
        read_argument(f"@{tmp_path / 'missing'}")


def test_emit_prints_lines_or_json(capsys):
    assert emit(SimpleNamespace(command="version"), {"x": 1}, 2, ["one", "two"]) == 2
    assert capsys.readouterr().out == "one\ntwo\n"

    args = SimpleNamespace(command="version", json=True)
    assert emit(args, {"package": "hopi-workbench"}, 0, ["ignored"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert list(document)[:3] == ["schema_version", "command", "exit_code"]
    assert document["package"] == "hopi-workbench"


def test_verdict_lines(monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    assert verdict_lines(Verdict(Outcome.HOLDS, "Q = 0")) == ["HOLDS", "  witness: Q = 0"]
    lines = verdict_lines(Verdict(Outcome.UNKNOWN, None, True))
    assert lines[0] == "UNKNOWN"
    assert "budget exhausted" in lines[1]
