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

# See README.md for command and flag reference.

import sys

# Python version check - must be before other imports that use Python 3.10+ features
PYTHON_MIN_VERSION = (3, 10, 0)
if sys.version_info < PYTHON_MIN_VERSION:
    sys_major, sys_minor, sys_micro = sys.version_info[:3]
    print(
        f"Error: Python {'.'.join(map(str, PYTHON_MIN_VERSION))} or higher required, "
        f"found {sys_major}.{sys_minor}.{sys_micro}",
        file=sys.stderr,
    )
    sys.exit(1)

# ruff: noqa: E402  # Imports after python version check
import argparse
import logging
import os
from pathlib import Path
from typing import List, Optional

from hopi_workbench.commands import registry as commands_registry
from hopi_workbench.commands.common import EXIT_INPUT, EXIT_INTERNAL
from hopi_workbench.errors import InputError, ParseError
from hopi_workbench.schemas.validator import validate_report
from hopi_workbench.utils.io import error
from hopi_workbench.utils.json_output import dumps, wrap
from hopi_workbench.utils.text import suggest

logger = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARN", "WARNING", "ERROR", "CRITICAL"]


class WorkbenchCLI:
    """Command-line interface of the workbench."""

    def __init__(self, script_name: Optional[str] = None):
        self.script_name = script_name or os.environ.get("HOPI_CMD_NAME", "hopi")
        self.parser = self._create_parser()

    def _create_parser(self) -> argparse.ArgumentParser:
        """Create the argument parser with all supported commands.

        Subparser construction is delegated to per-command modules under
        :mod:`hopi_workbench.commands`; the wiring lives in
        :func:`hopi_workbench.commands.registry.register_all`.
        """
        parser = argparse.ArgumentParser(
            prog=self.script_name,
            description=(
                f"{self.script_name}: processes, transitions, spatial logics, proofs "
                "and equivalences of the higher-order pi-calculus"
            ),
            epilog="exit codes: 0 holds/accept/none-found, 1 fails/reject/distinguished, "
            "2 unknown, 3 input error, 4 internal error",
        )
        parser.add_argument(
            "-l",
            "--log-level",
            dest="log_level",
            type=str.upper,
            choices=LOG_LEVELS,
            help="set the logging level (default: WARNING)",
        )
        subparsers = parser.add_subparsers(dest="command", required=True)

        # Kept for "Did you mean" suggestions on typos.
        self.subparsers: dict[str, argparse.ArgumentParser] = commands_registry.register_all(
            self, subparsers
        )
        return parser

    def _suggest_command(self, invalid_value: str) -> list[str]:
        """Suggest similar command names using Levenshtein distance."""
        return suggest(invalid_value, self.subparsers.keys())

    def parse_args(self, argv: Optional[List[str]] = None) -> argparse.Namespace:
        """Parse ``argv`` (program name first); usage errors exit with the input-error code."""
        if argv is None:
            argv = sys.argv
        cmd_args = list(argv)[1:]
        potential_command = _first_positional(cmd_args)
        try:
            return self.parser.parse_args(cmd_args)
        except SystemExit as e:
            if e.code in (0, None):
                raise
            if potential_command and potential_command not in self.subparsers:
                suggestions = self._suggest_command(potential_command)
                if suggestions:
                    print("\nDid you mean:", file=sys.stderr)
                    for cmd in suggestions:
                        print(f"  {self.script_name} {cmd}", file=sys.stderr)
                    print(file=sys.stderr)
            raise SystemExit(EXIT_INPUT) from None

    def execute(self, args: argparse.Namespace) -> int:
        """Run the parsed command and map failures to exit codes."""
        try:
            return args.func(args)
        except InputError as err:
            self._report_failure(args, err, EXIT_INPUT)
            return EXIT_INPUT
        except Exception as err:
            logger.debug("internal error in '%s'", args.command, exc_info=True)
            self._report_failure(args, err, EXIT_INTERNAL)
            return EXIT_INTERNAL

    def _report_failure(self, args: argparse.Namespace, err: Exception, code: int) -> None:
        message = str(err) if code == EXIT_INPUT else f"internal error: {err!r}"
        if isinstance(err, ParseError) and err.context:
            message += "\n" + err.context
        error(message)
        if getattr(args, "json", False):
            document = {
                "command": args.command,
                "exit_code": code,
                "error": {"type": type(err).__name__, "message": str(err)},
            }
            if isinstance(err, ParseError):
                document["error"].update(source=err.source, line=err.line, column=err.column)
            validate_report(wrap(document))
            print(dumps(document))

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Parse and execute; returns the exit code."""
        return self.execute(self.parse_args(argv))


def _first_positional(cmd_args: List[str]) -> Optional[str]:
    """The first token that is neither an option nor the value of '-l'."""
    skip = False
    for arg in cmd_args:
        if skip:
            skip = False
        elif arg in ("-l", "--log-level"):
            skip = True
        elif not arg.startswith("-"):
            return arg
    return None


def script_name_of(argv: Optional[List[str]]) -> Optional[str]:
    if argv and not os.environ.get("HOPI_CMD_NAME"):
        executable = Path(argv[0]).name
        return "hopi" if executable == "__main__.py" else executable
    return None
