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

"""Argument helpers and report emission shared by every command module."""

import argparse
import logging
from pathlib import Path
from typing import Any, Iterable, Optional

from hopi_workbench.checker import Budget, Outcome, Verdict, parse_budget
from hopi_workbench.errors import InputError
from hopi_workbench.logic import Dialect, Formula, parse_formula
from hopi_workbench.process import Process, parse_process
from hopi_workbench.schemas.validator import validate_report
from hopi_workbench.utils.io import outcome, report
from hopi_workbench.utils.json_output import dumps, wrap

logger = logging.getLogger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3
EXIT_INTERNAL = 4

VERDICT_EXIT = {Outcome.HOLDS: EXIT_OK, Outcome.FAILS: EXIT_NEGATIVE, Outcome.UNKNOWN: EXIT_UNKNOWN}

ARG_SOURCE = "<arg>"


# ---- shared flags ------------------------------------------------------------


def add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Print the report as JSON")


def add_budget_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--budget",
        metavar="K=V,...",
        help="Override budget fields (payload_depth, pool_size, tau_fuel, mu_fuel); "
        "HOPI_BUDGET supplies defaults (default: 3, 64, 8, 8)",
    )


def add_seed_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")


def add_dialect_flag(parser: argparse.ArgumentParser, default: Optional[str] = None) -> None:
    parser.add_argument(
        "--dialect",
        choices=[d.value for d in Dialect],
        default=default,
        help="Accept only formulas of this dialect"
        + (f" (default: {default})" if default else " (default: any)"),
    )


def add_process_flag(
    parser: argparse.ArgumentParser, short: str = "-p", long: str = "--process", **kwargs
) -> None:
    parser.add_argument(short, long, metavar="TEXT|@FILE", **kwargs)


def add_formula_flag(parser: argparse.ArgumentParser, **kwargs) -> None:
    parser.add_argument("-f", "--formula", metavar="TEXT|@FILE", **kwargs)


# ---- argument readers --------------------------------------------------------


def read_argument(value: str) -> tuple[str, str]:
    """The text of ``value`` and its source: ``@path`` reads a file."""
    if not value.startswith("@"):
        return value, ARG_SOURCE
    path = Path(value[1:])
    try:
        return path.read_text(), str(path)
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror or err}") from None


def process_argument(value: Optional[str], flag: str = "-p") -> Process:
    if value is None:
        raise InputError(f"missing process argument {flag}")
    text, source = read_argument(value)
    return parse_process(text.strip(), source=source)


def formula_argument(value: Optional[str], dialect: Optional[str] = None) -> Formula:
    if value is None:
        raise InputError("missing formula argument -f")
    text, source = read_argument(value)
    return parse_formula(text.strip(), source=source, dialect=dialect_of(dialect))


def dialect_of(value: Optional[str]) -> Optional[Dialect]:
    return None if value is None else Dialect(value)


def budget_of(args: argparse.Namespace) -> Budget:
    """Defaults, then ``HOPI_BUDGET``, then ``--budget``."""
    return parse_budget(getattr(args, "budget", None))


# ---- report emission ---------------------------------------------------------


def emit(
    args: argparse.Namespace,
    payload: dict[str, Any],
    code: int,
    lines: Iterable[str] = (),
) -> int:
    """Print either the JSON document or the human-readable ``lines``; return ``code``."""
    if getattr(args, "json", False):
        document = {"command": args.command, "exit_code": code, **payload}
        validate_report(wrap(document))
        print(dumps(document))
    else:
        for line in lines:
            report(line)
    return code


def verdict_lines(verdict: Verdict) -> list[str]:
    code = VERDICT_EXIT[verdict.outcome]
    lines = [outcome(verdict.outcome.value.upper(), code)]
    if verdict.witness:
        lines.append(f"  witness: {verdict.witness}")
    if verdict.unknown:
        lines.append("  budget exhausted before a definite answer")
    return lines


# ---- transition labels -------------------------------------------------------


def add_action_flags(parser: argparse.ArgumentParser, *, required: bool = False) -> None:
    parser.add_argument(
        "--action",
        choices=["tau", "out", "in"],
        required=required,
        help="Transition kind",
    )
    parser.add_argument("--subject", metavar="NAME", help="Channel of an input or output")
    parser.add_argument(
        "--payload",
        metavar="TEXT|@FILE",
        default="0",
        help="Received or emitted process (default: 0)",
    )
    parser.add_argument(
        "--extruded",
        metavar="NAME,...",
        default="",
        help="Names extruded by an output, outermost first",
    )


def subject_argument(args: argparse.Namespace) -> str:
    if not args.subject:
        raise InputError(f"--action {args.action} requires --subject")
    return args.subject


def payload_argument(args: argparse.Namespace) -> Process:
    return process_argument(args.payload, "--payload")


def extruded_argument(args: argparse.Namespace) -> tuple[str, ...]:
    return tuple(name.strip() for name in args.extruded.split(",") if name.strip())
