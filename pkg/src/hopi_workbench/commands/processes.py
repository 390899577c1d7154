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

"""``hopi normalize|congruent|step|reach|barbs``: processes and their transitions."""

import argparse

from hopi_workbench.commands.common import (
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_UNKNOWN,
    add_action_flags,
    add_budget_flag,
    add_json_flag,
    add_process_flag,
    budget_of,
    emit,
    payload_argument,
    process_argument,
    subject_argument,
)
from hopi_workbench.commands.registry import help_for
from hopi_workbench.lts import Query, barbs, step, tau_path, weak_reach, weak_transitions
from hopi_workbench.process import congruent, normalize, show
from hopi_workbench.utils.io import Color, outcome


def register_normalize_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``normalize`` subcommand."""
    parser = subparsers.add_parser("normalize", help=help_for("normalize"))
    add_process_flag(parser, required=True)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_normalize(cli, args))
    return parser


def handle_normalize(cli, args: argparse.Namespace) -> int:
    p = process_argument(args.process)
    canonical = normalize(p)
    payload = {
        "process": show(p),
        "normal_form": canonical.key,
        "certified": canonical.certified,
    }
    lines = [canonical.key]
    if not canonical.certified:
        lines.append(Color.yellow("(heuristic order: not certified canonical)"))
    return emit(args, payload, EXIT_OK, lines)


def register_congruent_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``congruent`` subcommand."""
    parser = subparsers.add_parser("congruent", help=help_for("congruent"))
    add_process_flag(parser, required=True)
    add_process_flag(parser, "-q", "--other", required=True)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_congruent(cli, args))
    return parser


def handle_congruent(cli, args: argparse.Namespace) -> int:
    p = process_argument(args.process)
    q = process_argument(args.other, "-q")
    same = congruent(p, q)
    code = EXIT_OK if same else EXIT_NEGATIVE
    payload = {"p": show(p), "q": show(q), "congruent": same}
    word = "congruent" if same else "not congruent"
    return emit(args, payload, code, [f"{show(p)} and {show(q)}: {outcome(word, code)}"])


def register_step_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``step`` subcommand."""
    parser = subparsers.add_parser("step", help=help_for("step"))
    add_process_flag(parser, required=True)
    add_action_flags(parser)
    parser.add_argument(
        "--weak", action="store_true", help="List weak transitions (tau-closure on both sides)"
    )
    add_budget_flag(parser)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_step(cli, args))
    return parser


def _queries(args: argparse.Namespace) -> list[Query]:
    if args.action is None:
        return [Query.tau(), Query.out()]
    if args.action == "tau":
        return [Query.tau()]
    if args.action == "out":
        return [Query.out()]
    return [Query.input(subject_argument(args), payload_argument(args))]


def handle_step(cli, args: argparse.Namespace) -> int:
    p = process_argument(args.process)
    budget = budget_of(args)
    found = []
    truncated = False
    for query in _queries(args):
        if args.weak:
            more, cut = weak_transitions(p, query, budget.tau_fuel)
            found.extend(more)
            truncated = truncated or cut
        else:
            found.extend(step(p, query))
    arrow = "=" if args.weak else "-"
    lines = [f"{arrow}{t.action}{arrow}> {show(t.target)}" for t in found]
    if not found:
        lines.append("(no transitions)")
    if truncated:
        lines.append(Color.yellow(f"(tau-closure truncated at fuel {budget.tau_fuel})"))
    payload = {
        "process": show(p),
        "weak": args.weak,
        "transitions": [t.to_json() for t in found],
        "truncated": truncated,
    }
    return emit(args, payload, EXIT_UNKNOWN if truncated else EXIT_OK, lines)


def register_reach_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``reach`` subcommand."""
    parser = subparsers.add_parser("reach", help=help_for("reach"))
    add_process_flag(parser, required=True)
    add_process_flag(
        parser, "-q", "--target", help="Print a shortest tau-path to this state instead"
    )
    parser.add_argument(
        "--fuel", type=int, help="Maximum number of tau-steps (default: the budget's tau_fuel)"
    )
    add_budget_flag(parser)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_reach(cli, args))
    return parser


def handle_reach(cli, args: argparse.Namespace) -> int:
    p = process_argument(args.process)
    fuel = args.fuel if args.fuel is not None else budget_of(args).tau_fuel
    if args.target is not None:
        q = process_argument(args.target, "-q")
        path = tau_path(p, q, fuel)
        payload = {
            "process": show(p),
            "target": show(q),
            "fuel": fuel,
            "path": None if path is None else [show(s) for s in path],
        }
        if path is None:
            return emit(args, payload, EXIT_NEGATIVE, [f"no tau-path within {fuel} step(s)"])
        return emit(args, payload, EXIT_OK, [" -tau-> ".join(show(s) for s in path)])
    reach = weak_reach(p, fuel)
    lines = [show(s) for s in reach.states]
    if reach.truncated:
        lines.append(Color.yellow(f"(truncated at fuel {fuel})"))
    payload = {
        "process": show(p),
        "fuel": fuel,
        "states": [show(s) for s in reach.states],
        "truncated": reach.truncated,
    }
    return emit(args, payload, EXIT_UNKNOWN if reach.truncated else EXIT_OK, lines)


def register_barbs_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``barbs`` subcommand."""
    parser = subparsers.add_parser("barbs", help=help_for("barbs"))
    add_process_flag(parser, required=True)
    parser.add_argument("--weak", action="store_true", help="Look through tau-steps")
    add_budget_flag(parser)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_barbs(cli, args))
    return parser


def handle_barbs(cli, args: argparse.Namespace) -> int:
    p = process_argument(args.process)
    found = barbs(p, weak=args.weak, fuel=budget_of(args).tau_fuel)
    payload = {
        "process": show(p),
        "weak": args.weak,
        "barbs": [{"name": b.name, "output": b.output} for b in found],
    }
    return emit(args, payload, EXIT_OK, [" ".join(str(b) for b in found) or "(none)"])
