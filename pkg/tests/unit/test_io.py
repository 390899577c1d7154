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

from io import StringIO

import pytest

from hopi_workbench.utils import io
from hopi_workbench.utils.text import levenshtein_distance, suggest


class _Tty(StringIO):
    def isatty(self):
        return True


@pytest.fixture
def no_color_env(monkeypatch):
    monkeypatch.delenv("NO_COLOR", raising=False)
    monkeypatch.delenv("FORCE_COLOR", raising=False)


def test_color_only_on_a_tty(no_color_env):
    assert io.Color.red("x", stream=StringIO()) == "x"
    assert io.Color.red("x", stream=_Tty()) == "\033[31mx\033[0m"
    assert io.Color.green("x", bold=True, stream=_Tty()) == "\033[32m\033[1mx\033[0m"


def test_no_color_and_force_color(no_color_env, monkeypatch):
    monkeypatch.setenv("FORCE_COLOR", "1")
    assert io.Color.yellow("x", stream=StringIO()).startswith("\033[33m")
    monkeypatch.setenv("NO_COLOR", "1")
    assert io.Color.yellow("x", stream=_Tty()) == "x"


@pytest.mark.parametrize(
    "code, color", [(0, "\033[32m"), (1, "\033[31m"), (2, "\033[33m"), (3, "\033[36m")]
)
def test_outcome_color_follows_exit_code(no_color_env, monkeypatch, code, color):
    monkeypatch.setenv("FORCE_COLOR", "1")
    assert io.outcome("WORD", code).startswith(color)


def test_report_and_error_streams(monkeypatch, capsys):
    monkeypatch.setenv("NO_COLOR", "1")
    io.report("line")
    io.error("broken")
    captured = capsys.readouterr()
    assert captured.out == "line\n"
    assert captured.err == "ERROR: broken\n"


# ---- text ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "left, right, distance",
    [("", "abc", 3), ("check", "check", 0), ("chekc", "check", 2), ("STEP", "step", 0)],
)
def test_levenshtein_distance(left, right, distance):
    assert levenshtein_distance(left, right) == distance


def test_suggest_closest_first():
    options = ["check", "congruent", "reach", "barbs"]
    assert suggest("chek", options) == ["check"]
    assert suggest("reah", options) == ["reach"]
    assert suggest("nothing-like-it", options) == []
