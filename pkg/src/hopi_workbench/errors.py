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

"""Exception hierarchy shared by every workbench module.

``InputError`` and its subclasses are user-correctable and map to exit code 3
in the CLI; everything else that escapes a command maps to 4.
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all workbench failures."""


class InputError(WorkbenchError):
    """Malformed or unsupported user input."""


class ParseError(InputError):
    """Syntax error in a process, formula or proof-script text.

    ``line`` and ``column`` are 1-based. ``context`` is a two-line caret
    snippet pointing at the offending position (may be empty).
    """

    def __init__(
        self,
        message: str,
        *,
        source: str = "<arg>",
        line: int = 1,
        column: int = 1,
        context: str = "",
    ):
        self.message = message
        self.source = source
        self.line = line
        self.column = column
        self.context = context
        super().__init__(f"{source}:{line}:{column}: {message}")

    def with_source(
        self, source: str, line_offset: int = 0, column_offset: int = 0
    ) -> "ParseError":
        """Return a copy re-anchored to ``source`` and shifted by the offsets.

        The column shift applies to errors on the first line only.
        """
        return type(self)(
            self.message,
            source=source,
            line=self.line + line_offset,
            column=self.column + (column_offset if self.line == 1 else 0),
            context=self.context,
        )


class PositivityError(ParseError):
    """``mu X. A`` where ``X`` occurs under an odd number of negations."""


class DialectError(InputError):
    """A formula uses a constructor outside the requested dialect."""


class SideConditionError(InputError):
    """An axiom instantiation violates one of the schema's side conditions."""

    def __init__(self, schema: str, condition: str, detail: Optional[str] = None):
        self.schema = schema
        self.condition = condition
        message = f"{schema}: side condition '{condition}' does not hold"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class BudgetError(InputError):
    """Malformed ``--budget`` / ``HOPI_BUDGET`` specification."""


class GenerationError(WorkbenchError):
    """A proof generator cannot produce a script for the given input."""


class SoundnessViolation(WorkbenchError):
    """Validity sampling refuted an instance of an axiom schema.

    ``report`` is the sampling report; its ``refutation`` names the instance
    and the process on which it fails.
    """

    def __init__(self, report):
        self.report = report
        found = report.refutation.to_json()
        super().__init__(
            f"{report.schema}: instance '{found['instance']}' fails on '{found['process']}'"
        )
