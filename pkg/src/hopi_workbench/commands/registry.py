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

"""Single source of truth for the workbench subcommand surface.

:mod:`hopi_workbench.cli` builds the argparse subparsers by calling
:func:`register_all`, which delegates to the ``register_<command>_parser``
function of each per-command module. Each entry pairs a public command name
with ``short_help`` for the top-level listing and ``help`` for the
``hopi <cmd> --help`` title.

The ``version`` command is registered here too but implemented in
:mod:`hopi_workbench.version`.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class CommandSpec:
    """Stable metadata for a single ``hopi`` subcommand."""

    name: str
    short_help: str
    help: str
    group: str  # "process" | "logic" | "proof" | "equiv" | "corpus" | "info"


# Ordered for predictable iteration; ``hopi --help`` re-sorts alphabetically.
COMMANDS: tuple[CommandSpec, ...] = (
    # processes and their transitions
    CommandSpec(
        "normalize",
        short_help="print the canonical form of a process",
        help="Canonical representative of a process up to structural congruence",
        group="process",
    ),
    CommandSpec(
        "congruent",
        short_help="decide structural congruence of two processes",
        help="Decide whether two processes are structurally congruent",
        group="process",
    ),
    CommandSpec(
        "step",
        short_help="list the one-step transitions of a process",
        help="List tau, output or input transitions of a closed process",
        group="process",
    ),
    CommandSpec(
        "reach",
        short_help="list the states reachable by tau-steps",
        help="Weak tau-closure of a closed process, or a tau-path to a target",
        group="process",
    ),
    CommandSpec(
        "barbs",
        short_help="list the strong or weak barbs of a process",
        help="Observable channels of a closed process",
        group="process",
    ),
    # logic
    CommandSpec(
        "check",
        short_help="model-check a formula on a process",
        help="Decide or approximate P |= A within a budget",
        group="logic",
    ),
    CommandSpec(
        "translate",
        short_help="characteristic formulas, weak-to-fixpoint and !A",
        help="Translate a process or formula (tps, twm or bang)",
        group="logic",
    ),
    # proofs
    CommandSpec(
        "prove",
        short_help="generate a proof script for a congruence or transition",
        help="Generate and self-check a congruence or transition proof",
        group="proof",
    ),
    CommandSpec(
        "verify-proof",
        short_help="check a proof script",
        help="Check a proof script against the axiom catalogue",
        group="proof",
    ),
    CommandSpec(
        "validity-sample",
        short_help="sample instances of axiom schemas against the checker",
        help="Check random instances of catalogue lines on random processes",
        group="proof",
    ),
    # equivalences
    CommandSpec(
        "equiv",
        short_help="search for a distinction between two processes",
        help="Distinguishing L formulas and bounded bisimulation games",
        group="equiv",
    ),
    # corpus
    CommandSpec(
        "phi-demo",
        short_help="check the depth-bounded formula family",
        help="Check witness(n) against the first n+1 formulas of the family",
        group="corpus",
    ),
    CommandSpec(
        "generate",
        short_help="print seeded random processes or formulas",
        help="Generate random processes or formulas from a seed",
        group="corpus",
    ),
    CommandSpec(
        "version",
        short_help="display the hopi-workbench package version",
        help="Display the hopi-workbench package version",
        group="info",
    ),
)


# Lookup helpers -----------------------------------------------------------

COMMANDS_BY_NAME: dict[str, CommandSpec] = {spec.name: spec for spec in COMMANDS}


def command_names() -> list[str]:
    """Return every command name, ordered as registered."""
    return [spec.name for spec in COMMANDS]


def command_help() -> dict[str, str]:
    """Return a mapping of command name to top-level (``short_help``) text."""
    return {spec.name: spec.short_help for spec in COMMANDS}


def help_for(command: str) -> str:
    """Return the per-subcommand ``help`` string for ``command``.

    Raises :class:`KeyError` if ``command`` is not registered.
    """
    return COMMANDS_BY_NAME[command].help


def commands_in_group(group: str) -> Iterable[CommandSpec]:
    """Yield every command registered under ``group``."""
    return (spec for spec in COMMANDS if spec.group == group)


# Parser wiring ------------------------------------------------------------


def register_all(cli, subparsers: argparse._SubParsersAction) -> dict[str, argparse.ArgumentParser]:
    """Register every subcommand on ``subparsers``.

    Returns a ``{command_name: subparser}`` mapping that the caller keeps for
    Levenshtein-based suggestions on typos.
    """
    # Imported lazily so ``from hopi_workbench.commands import registry`` does
    # not pull in the checker and the proof kernel.
    from hopi_workbench import version
    from hopi_workbench.commands import corpus, equivalence, logic, processes, proofs

    registered: dict[str, argparse.ArgumentParser] = {}

    def add(register_fn, name: str) -> None:
        registered[name] = register_fn(cli, subparsers)

    for register_fn, name in (
        (processes.register_normalize_parser, "normalize"),
        (processes.register_congruent_parser, "congruent"),
        (processes.register_step_parser, "step"),
        (processes.register_reach_parser, "reach"),
        (processes.register_barbs_parser, "barbs"),
        (logic.register_check_parser, "check"),
        (logic.register_translate_parser, "translate"),
        (proofs.register_prove_parser, "prove"),
        (proofs.register_verify_proof_parser, "verify-proof"),
        (proofs.register_validity_sample_parser, "validity-sample"),
        (equivalence.register_equiv_parser, "equiv"),
        (corpus.register_phi_demo_parser, "phi-demo"),
        (corpus.register_generate_parser, "generate"),
        (version.register_version_parser, "version"),
    ):
        add(register_fn, name)

    return registered
