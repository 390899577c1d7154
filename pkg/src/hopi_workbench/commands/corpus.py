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

"""``hopi phi-demo`` and ``hopi generate``."""

import argparse
import logging

from hopi_workbench.checker import Outcome, Verdict, check
from hopi_workbench.commands.common import (
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_UNKNOWN,
    add_budget_flag,
    add_dialect_flag,
    add_json_flag,
    add_seed_flag,
    budget_of,
    emit,
)
from hopi_workbench.commands.registry import help_for
from hopi_workbench.corpus import generate_many, phi_family
from hopi_workbench.corpus.phi import CHANNEL, PAYLOAD_CHANNEL
from hopi_workbench.errors import InputError
from hopi_workbench.logic import Dialect, Formula, show_formula
from hopi_workbench.process import Process, enumerate_processes, show
from hopi_workbench.utils.io import outcome

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 6


# ---- phi-demo ----------------------------------------------------------------


def register_phi_demo_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``phi-demo`` subcommand."""
    parser = subparsers.add_parser("phi-demo", help=help_for("phi-demo"))
    parser.add_argument(
        "-n",
        "--max-n",
        type=int,
        default=DEFAULT_MAX_N,
        help=f"Check witness(1) .. witness(N) (default: {DEFAULT_MAX_N})",
    )
    parser.add_argument(
        "--exhaustive",
        type=int,
        metavar="SIZE",
        help="Also check that no closed process of at most SIZE constructors satisfies "
        "the formula of index SIZE+1",
    )
    add_budget_flag(parser)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_phi_demo(cli, args))
    return parser


def _row_code(verdicts: list[Verdict]) -> int:
    expected = [Outcome.HOLDS] * (len(verdicts) - 1) + [Outcome.FAILS]
    if any(v.unknown for v in verdicts):
        return EXIT_UNKNOWN
    if [v.outcome for v in verdicts] != expected:
        return EXIT_NEGATIVE
    return EXIT_OK


def _worst(codes: list[int]) -> int:
    if EXIT_NEGATIVE in codes:
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN if EXIT_UNKNOWN in codes else EXIT_OK


def exhaustive_phi(size: int, budget) -> dict:
    """Closed processes over the family's channels with at most ``size``
    constructors that satisfy (or may satisfy) the formula of index ``size + 1``."""
    formula: Formula = phi_family(size + 1).formula
    checked = 0
    satisfying: list[Process] = []
    unknown: list[Process] = []
    for p in enumerate_processes((CHANNEL, PAYLOAD_CHANNEL), ("X",), size, closed=True):
        checked += 1
        verdict = check(p, formula, budget)
        if verdict.holds:
            satisfying.append(p)
        elif verdict.unknown:
            unknown.append(p)
    logger.debug("exhaustive check of %d process(es) up to size %d", checked, size)
    return {
        "size": size,
        "formula": show_formula(formula),
        "checked": checked,
        "satisfying": [show(p) for p in satisfying],
        "unknown": len(unknown),
    }


def handle_phi_demo(cli, args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise InputError("--max-n must be at least 1")
    budget = budget_of(args)
    rows = []
    codes = []
    lines = []
    for n in range(1, args.max_n + 1):
        instance = phi_family(n)
        verdicts = [
            check(instance.witness, phi_family(i).formula, budget) for i in range(1, n + 2)
        ]
        code = _row_code(verdicts)
        codes.append(code)
        rows.append(
            {
                **instance.to_json(),
                "verdicts": [v.outcome.value for v in verdicts],
                "exit_code": code,
            }
        )
        marks = " ".join(v.outcome.value for v in verdicts)
        lines.append(
            f"n={n} depth={rows[-1]['depth']} {show(instance.witness)}: {marks} "
            f"[{outcome('ok' if code == EXIT_OK else 'unexpected', code)}]"
        )
    payload: dict = {"instances": rows, "budget": budget.to_json()}
    if args.exhaustive is not None:
        if args.exhaustive < 0:
            raise InputError("--exhaustive must be non-negative")
        summary = exhaustive_phi(args.exhaustive, budget)
        payload["exhaustive"] = summary
        if summary["satisfying"]:
            codes.append(EXIT_NEGATIVE)
        elif summary["unknown"]:
            codes.append(EXIT_UNKNOWN)
        lines.append(
            f"size <= {summary['size']}: {summary['checked']} process(es), "
            f"{len(summary['satisfying'])} satisfy {summary['formula']}, "
            f"{summary['unknown']} unknown"
        )
    return emit(args, payload, _worst(codes), lines)


# ---- generate ----------------------------------------------------------------


def register_generate_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``generate`` subcommand."""
    parser = subparsers.add_parser("generate", help=help_for("generate"))
    parser.add_argument(
        "--kind", choices=["process", "formula"], default="process", help="(default: process)"
    )
    parser.add_argument(
        "--size", type=int, default=4, help="Maximum number of constructors (default: 4)"
    )
    parser.add_argument("--count", type=int, default=1, help="Number of terms (default: 1)")
    parser.add_argument(
        "--closed",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Only closed processes (default: closed)",
    )
    add_seed_flag(parser)
    add_dialect_flag(parser, default=Dialect.SL.value)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_generate(cli, args))
    return parser


def handle_generate(cli, args: argparse.Namespace) -> int:
    if args.size < 1:
        raise InputError("--size must be at least 1")
    if args.count < 0:
        raise InputError("--count must be non-negative")
    terms = generate_many(
        args.seed,
        args.kind,
        args.size,
        args.count,
        dialect=Dialect(args.dialect),
        closed=args.closed,
    )
    printer = show if args.kind == "process" else show_formula
    texts = [printer(t) for t in terms]
    payload = {
        "kind": args.kind,
        "seed": args.seed,
        "size": args.size,
        "dialect": args.dialect,
        "terms": texts,
    }
    return emit(args, payload, EXIT_OK, texts)
