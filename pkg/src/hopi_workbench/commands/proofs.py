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

"""``hopi prove``, ``hopi verify-proof`` and ``hopi validity-sample``."""

import argparse
import logging
from pathlib import Path

from hopi_workbench.checker import SamplingReport, validity_sample
from hopi_workbench.commands.common import (
    EXIT_NEGATIVE,
    EXIT_OK,
    add_action_flags,
    add_budget_flag,
    add_json_flag,
    add_process_flag,
    add_seed_flag,
    budget_of,
    emit,
    extruded_argument,
    payload_argument,
    process_argument,
    subject_argument,
)
from hopi_workbench.commands.registry import help_for
from hopi_workbench.corpus import corpus_path
from hopi_workbench.errors import GenerationError, InputError, SoundnessViolation
from hopi_workbench.lts import Action, In, Out, Tau
from hopi_workbench.proofs import (
    CATALOGUE,
    GROUPS,
    ProofReport,
    check_proof,
    parse_script,
    prove_congruence,
    prove_transition,
    render_script,
)
from hopi_workbench.utils.io import Color, outcome

logger = logging.getLogger(__name__)

PROOF_KINDS = ("congruence", "transition")


def _report_lines(report: ProofReport) -> list[str]:
    code = EXIT_OK if report.accepted else EXIT_NEGATIVE
    if report.accepted:
        return [outcome("accept", code)]
    return [f"{outcome('reject', code)} at step {report.step}: {report.reason}"]


# ---- prove -------------------------------------------------------------------


def register_prove_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``prove`` subcommand."""
    parser = subparsers.add_parser(
        "prove",
        help=help_for("prove"),
        description="congruence: proof of -q from -p; transition: proof of "
        "<alpha>-q (<<alpha>>-q with --weak) from -p. A strong tau-step under a "
        "restriction has no axiom and is rejected; prove it with --weak.",
    )
    parser.add_argument("kind", choices=PROOF_KINDS, help="What to prove")
    add_process_flag(parser, required=True)
    add_process_flag(parser, "-q", "--target", required=True, help="Congruent process or residual")
    add_action_flags(parser)
    parser.add_argument(
        "--weak",
        action="store_true",
        help="Prove a weak transition (<<alpha>> modality); needed for tau-steps under a restriction",
    )
    parser.add_argument("-o", "--output", type=Path, help="Also write the script to this file")
    add_budget_flag(parser)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_prove(cli, args))
    return parser


def _action(args: argparse.Namespace) -> Action:
    if args.action is None:
        raise InputError("prove transition requires --action")
    if args.action == "tau":
        return Tau()
    if args.action == "in":
        return In(subject_argument(args), payload_argument(args))
    return Out(subject_argument(args), extruded_argument(args), payload_argument(args))


def handle_prove(cli, args: argparse.Namespace) -> int:
    p = process_argument(args.process)
    q = process_argument(args.target, "-q")
    try:
        if args.kind == "congruence":
            proof = prove_congruence(p, q)
        else:
            fuel = budget_of(args).tau_fuel
            proof = prove_transition(p, _action(args), q, args.weak, fuel=fuel)
    except GenerationError as err:
        payload = {"result": "reject", "step": None, "reason": str(err)}
        return emit(args, payload, EXIT_NEGATIVE, [f"{outcome('reject', EXIT_NEGATIVE)}: {err}"])
    script = render_script(proof)
    report = check_proof(proof)
    if not report.accepted:
        logger.warning("generated proof does not check: %s", report)
    if args.output is not None:
        args.output.write_text(script)
    code = EXIT_OK if report.accepted else EXIT_NEGATIVE
    payload = {"kind": args.kind, "steps": len(proof), "script": script, **report.to_json()}
    return emit(args, payload, code, [script.rstrip("\n"), *_report_lines(report)])


# ---- verify-proof ------------------------------------------------------------


def register_verify_proof_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``verify-proof`` subcommand."""
    parser = subparsers.add_parser("verify-proof", help=help_for("verify-proof"))
    parser.add_argument(
        "script",
        help="Proof script; corpus/<name> falls back to the packaged corpus",
    )
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_verify_proof(cli, args))
    return parser


def script_path(name: str) -> Path:
    """``name`` as given, or inside the packaged corpus when it does not exist."""
    path = Path(name)
    if path.exists():
        return path
    packaged = corpus_path(name)
    if packaged.exists():
        logger.debug("resolved %s to %s", name, packaged)
        return packaged
    raise InputError(f"no such proof script: {name}")


def handle_verify_proof(cli, args: argparse.Namespace) -> int:
    path = script_path(args.script)
    proof = parse_script(path.read_text(), source=str(path))
    report = check_proof(proof)
    code = EXIT_OK if report.accepted else EXIT_NEGATIVE
    payload = {"file": str(path), "steps": len(proof), **report.to_json()}
    return emit(args, payload, code, _report_lines(report))


# ---- validity-sample ---------------------------------------------------------


def register_validity_sample_parser(cli, subparsers) -> argparse.ArgumentParser:
    """Register the ``validity-sample`` subcommand."""
    parser = subparsers.add_parser("validity-sample", help=help_for("validity-sample"))
    parser.add_argument(
        "--schema",
        action="append",
        dest="schemas",
        metavar="ID",
        help="Catalogue line to sample; repeatable (default: every line)",
    )
    parser.add_argument("--group", choices=GROUPS, help="Only sample lines of this group")
    parser.add_argument(
        "--trials", type=int, default=50, help="Instances per catalogue line (default: 50)"
    )
    parser.add_argument(
        "--processes", type=int, default=2, help="Random processes per instance (default: 2)"
    )
    add_seed_flag(parser)
    add_budget_flag(parser)
    add_json_flag(parser)
    parser.set_defaults(func=lambda args: handle_validity_sample(cli, args))
    return parser


def _selected(args: argparse.Namespace) -> list[str]:
    ids = args.schemas or list(CATALOGUE)
    if args.group:
        ids = [i for i in ids if i in CATALOGUE and CATALOGUE[i].group == args.group]
    return ids


def _summary(report: SamplingReport) -> str:
    if not report.sampled:
        return f"{report.schema}: {Color.yellow('excluded from sampling')}"
    line = (
        f"{report.schema}: {report.instances} instance(s), {report.holds} holds, "
        f"{report.unknown} unknown"
    )
    if report.refutation is not None:
        found = report.refutation.to_json()
        line += f", {outcome('FAILS', EXIT_NEGATIVE)} {found['instance']} on {found['process']}"
    return line


def handle_validity_sample(cli, args: argparse.Namespace) -> int:
    if args.trials < 0 or args.processes < 1:
        raise InputError("--trials must be non-negative and --processes positive")
    budget = budget_of(args)
    reports: list[SamplingReport] = []
    for schema_id in _selected(args):
        try:
            report = validity_sample(
                schema_id, args.trials, budget, seed=args.seed, processes=args.processes
            )
        except SoundnessViolation as violation:
            logger.debug("%s", violation)
            report = violation.report
        reports.append(report)
    refuted = [r for r in reports if r.refutation is not None]
    code = EXIT_NEGATIVE if refuted else EXIT_OK
    payload = {"seed": args.seed, "reports": [r.to_json(budget) for r in reports]}
    lines = [_summary(r) for r in reports]
    lines.append(
        f"{len(reports)} line(s), {sum(r.instances for r in reports)} instance(s), "
        f"{len(refuted)} refuted"
    )
    return emit(args, payload, code, lines)
