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

"""Terminal output of the workbench.

Verdicts (HOLDS, FAILS, UNKNOWN), proof outcomes (accept, reject) and
sampling summaries are printed on stdout, colored after the exit code they
stand for; input and internal errors go to stderr.
"""

import os
import sys


class Color:
    """ANSI colors for report words.

    ``NO_COLOR`` strips them, ``FORCE_COLOR`` keeps them, and otherwise they
    are emitted only when the destination stream is a TTY. Error lines pass
    ``stream=sys.stderr`` so the TTY check looks at stderr.
    """

    # ANSI color codes
    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    BLUE = "\033[34m"
    CYAN = "\033[36m"

    # Text attributes
    BOLD = "\033[1m"
    RESET = "\033[0m"

    @staticmethod
    def _should_color(stream=None) -> bool:
        if os.environ.get("NO_COLOR"):
            return False
        if os.environ.get("FORCE_COLOR"):
            return True
        stream = stream or sys.stdout
        return hasattr(stream, "isatty") and stream.isatty()

    @staticmethod
    def format(text: str, color: str, bold: bool = False, stream=None) -> str:
        """Wrap ``text`` in ``color`` when the destination should be colored."""
        if not Color._should_color(stream):
            return text
        result = color
        if bold:
            result += Color.BOLD
        return result + text + Color.RESET

    def _create_color_method(color_code: str):
        def color_method(text: str, bold: bool = False, stream=None) -> str:
            return Color.format(text, color_code, bold, stream=stream)

        return color_method

    red = _create_color_method(RED)
    green = _create_color_method(GREEN)
    yellow = _create_color_method(YELLOW)
    blue = _create_color_method(BLUE)
    cyan = _create_color_method(CYAN)


# Outcome words printed in reports, by exit code.
_OUTCOME_COLORS = {0: Color.green, 1: Color.red, 2: Color.yellow}


def outcome(word: str, code: int) -> str:
    """``word`` colored after the exit code it stands for."""
    return _OUTCOME_COLORS.get(code, Color.cyan)(word, bold=True)


def report(message: str) -> None:
    """Print one line of a human-readable report on stdout."""
    print(message)


def error(message: str) -> None:
    """Print ``ERROR: message`` on stderr; the caller picks the exit code."""
    err = sys.stderr
    print(f"{Color.red('ERROR:', bold=True, stream=err)} {message}", file=err)
