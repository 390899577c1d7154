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

"""``hopi check`` and ``hopi translate``."""

import argparse

from hopi_workbench.checker import check
from hopi_workbench.commands.common import (
    EXIT_OK,
    VERDICT_EXIT,
    add_budget_flag,
    add_dialect_flag,
    add_formula_flag,
    add_json_flag,
    add_process_flag,
    budget_of,
    dialect_of,
    emit,
    formula_argument,
    process_argument,
    verdict_lines,
)
from hopi_workbench.commands.registry import help_for
from hopi_workbench.errors import InputError
from hopi_workbench.logic import bang
from hopi_workbench.logic import dialect_of as formula_dialect
from hopi_workbench.logic import show_formula, translate_tps, translate_twm
from hopi_workbench.process import show

TRANSLATIONS = ("tps", "twm", "bang")


def register_check_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``check`` subcommand."""
    parser = subparsers.add_parser("check", help=help_for("check"))
    add_process_flag(parser, required=True)
    add_formula_flag(parser, required=True)
    add_dialect_flag(parser)
    add_budget_flag(parser)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_check(cli, args))
    return parser


def handle_check(cli, args: argparse.Namespace) -> int:
    p = process_argument(args.process)
    a = formula_argument(args.formula, args.dialect)
    budget = budget_of(args)
    verdict = check(p, a, budget, dialect=dialect_of(args.dialect))
    payload = {
        "process": show(p),
        "formula": show_formula(a),
        "dialect": formula_dialect(a).value,
        **verdict.to_json(budget),
    }
    return emit(args, payload, VERDICT_EXIT[verdict.outcome], verdict_lines(verdict))


def register_translate_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``translate`` subcommand."""
    parser = subparsers.add_parser(
        "translate",
        help=help_for("translate"),
        description="tps: characteristic formula of a process (-p); "
        "twm: WL formula to its fixpoint encoding (-f); bang: !A (-f)",
    )
    parser.add_argument("mode", choices=TRANSLATIONS, help="Translation to apply")
    add_process_flag(parser)
    add_formula_flag(parser)
    add_dialect_flag(parser)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_translate(cli, args))
    return parser


def handle_translate(cli, args: argparse.Namespace) -> int:
    if args.mode == "tps":
        if args.formula is not None:
            raise InputError("translate tps takes a process (-p), not a formula")
        p = process_argument(args.process)
        source, result = show(p), translate_tps(p)
    else:
        if args.process is not None:
            raise InputError(f"translate {args.mode} takes a formula (-f), not a process")
        a = formula_argument(args.formula, args.dialect)
        source = show_formula(a)
        result = translate_twm(a) if args.mode == "twm" else bang(a)
    text = show_formula(result)
    payload = {
        "mode": args.mode,
        "input": source,
        "output": text,
        "dialect": formula_dialect(result).value,
    }
    return emit(args, payload, EXIT_OK, [text])
