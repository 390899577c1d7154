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

"""``hopi equiv``: distinguishing formulas and bounded bisimulation games."""

import argparse

from hopi_workbench.commands.common import (
    EXIT_NEGATIVE,
    EXIT_OK,
    add_budget_flag,
    add_json_flag,
    add_process_flag,
    budget_of,
    emit,
    process_argument,
)
from hopi_workbench.commands.registry import help_for
from hopi_workbench.equiv import (
    DEFAULT_BREADTH,
    DEFAULT_DEPTH,
    DEFAULT_SIZE_BOUND,
    bisim_bounded,
    distinguish_l,
    recheck,
)
from hopi_workbench.logic import show_formula
from hopi_workbench.process import show
from hopi_workbench.utils.io import Color, outcome

METHODS = ("L", "context", "barbed")
STRENGTHS = ("strong", "weak")


def register_equiv_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``equiv`` subcommand."""
    parser = subparsers.add_parser("equiv", help=help_for("equiv"))
    add_process_flag(parser, required=True)
    add_process_flag(parser, "-q", "--other", required=True)
    parser.add_argument(
        "--method",
        choices=METHODS,
        default="L",
        help="L: distinguishing formulas; context or barbed: bisimulation game (default: L)",
    )
    parser.add_argument(
        "--strength", choices=STRENGTHS, default="strong", help="Game strength (default: strong)"
    )
    parser.add_argument(
        "--size-bound",
        type=int,
        default=DEFAULT_SIZE_BOUND,
        help=f"Largest L formula tried (default: {DEFAULT_SIZE_BOUND})",
    )
    parser.add_argument(
        "--depth",
        type=int,
        default=DEFAULT_DEPTH,
        help=f"Game rounds (default: {DEFAULT_DEPTH})",
    )
    parser.add_argument(
        "--breadth",
        type=int,
        default=DEFAULT_BREADTH,
        help=f"Payloads, contexts and partners per attack (default: {DEFAULT_BREADTH})",
    )
    add_budget_flag(parser)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_equiv(cli, args))
    return parser


def handle_equiv(cli, args: argparse.Namespace) -> int:
    p = process_argument(args.process)
    q = process_argument(args.other, "-q")
    budget = budget_of(args)
    if args.method == "L":
        found = distinguish_l(p, q, args.size_bound, budget)
    else:
        found = bisim_bounded(
            p, q, args.method, args.strength, budget, depth=args.depth, breadth=args.breadth
        )
    code = EXIT_NEGATIVE if found.distinguished else EXIT_OK
    payload = {"p": show(p), "q": show(q), "method": args.method, **found.to_json()}
    word = "distinguished" if found.distinguished else "none found"
    lines = [outcome(word, code)]
    if found.formula is not None:
        lines.append(f"  formula: {show_formula(found.formula)}")
        if not recheck(p, q, found, budget):
            lines.append(Color.yellow("  (the formula does not re-check definitely)"))
    lines.extend(f"  {move}" for move in found.trace)
    return emit(args, payload, code, lines)
