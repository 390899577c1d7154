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

"""Bounded bisimulation games.

The attacker moves in either process; the defender answers in the other
one, with a single step in the strong game and a weak transition in the
weak game. The context game follows the tau, input and output clauses of
context bisimulation, instantiating received payloads and receiving
contexts ``C(U)`` from finite pools. The barbed game compares barbs, answers
tau-moves and lets the attacker put both processes in parallel with a pool
process. Exhausting ``depth`` rounds without a win reports ``none-found``.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Optional

from ..checker import DEFAULT_BUDGET, Budget, CandidatePool
from ..errors import InputError
from ..lts import Barb, Query, Transition, barbs, input_subjects, step, strong_barbs, weak_transitions
from ..process import Par, Process, canonical_key, enumerate_processes, res_of, show, substitute
from .report import EquivReport, Result

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 3
DEFAULT_BREADTH = 8
HOLE = "U"

Trace = list[str]


class Kind(str, enum.Enum):
    CONTEXT = "context"
    BARBED = "barbed"


class Strength(str, enum.Enum):
    STRONG = "strong"
    WEAK = "weak"


def receiving_contexts(names: tuple[str, ...], max_size: int, limit: int) -> list[Process]:
    """Closed-but-for-``U`` processes with ``U`` free, smallest first."""
    found: list[Process] = []
    seen: set[str] = set()
    for c in enumerate_processes(names, (HOLE,), max_size, restrictions=False):
        if c.free_vars != {HOLE}:
            continue
        key = canonical_key(c)
        if key in seen:
            continue
        seen.add(key)
        found.append(c)
        if len(found) >= limit:
            break
    return found


@dataclass
class _Side:
    label: str
    process: Process


class _Game:
    def __init__(
        self,
        kind: Kind,
        strength: Strength,
        budget: Budget,
        breadth: int,
        p: Process,
        q: Process,
    ):
        self.kind = kind
        self.weak = strength is Strength.WEAK
        self.budget = budget
        self.memo: dict[tuple[str, str, int], Optional[Trace]] = {}
        self.truncated = False
        pool = CandidatePool(budget, [p, q], [])
        self.payloads = pool.payloads()[:breadth]
        self.partners = pool.members[:breadth]
        self.contexts = receiving_contexts(pool.names, budget.payload_depth, breadth)

    # -- defender moves --

    def answers(self, y: Process, query: Query) -> list[Transition]:
        if not self.weak:
            return step(y, query)
        found, truncated = weak_transitions(y, query, self.budget.tau_fuel)
        self.truncated = self.truncated or truncated
        return found

    def reply(self, y: _Side, answer: Transition) -> str:
        arrow = f"={answer.action}=>" if self.weak else f"-{answer.action}->"
        return f"{y.label} {arrow} {show(answer.target)}"

    def has_barb(self, y: Process, barb: Barb) -> bool:
        if not self.weak:
            return barb in strong_barbs(y)
        return barb in barbs(y, weak=True, fuel=self.budget.tau_fuel)

    # -- attacker --

    def attack(self, p: Process, q: Process, depth: int) -> Optional[Trace]:
        key = (canonical_key(p), canonical_key(q), depth)
        if key in self.memo:
            return self.memo[key]
        self.memo[key] = None
        trace = self._attack(_Side("P", p), _Side("Q", q), depth) or self._attack(
            _Side("Q", q), _Side("P", p), depth
        )
        self.memo[key] = trace
        return trace

    def _pair(self, x: _Side, xp: Process, y: _Side, yp: Process, depth: int) -> Optional[Trace]:
        if x.label == "P":
            return self.attack(xp, yp, depth)
        return self.attack(yp, xp, depth)

    def _attack(self, x: _Side, y: _Side, depth: int) -> Optional[Trace]:
        if self.kind is Kind.BARBED:
            for barb in sorted(strong_barbs(x.process), key=str):
                if not self.has_barb(y.process, barb):
                    return [
                        f"{x.label} = {show(x.process)} shows barb {barb}, "
                        f"{y.label} = {show(y.process)} does not"
                    ]
        if depth == 0:
            return None
        trace = self._tau(x, y, depth)
        if trace is not None:
            return trace
        if self.kind is Kind.BARBED:
            return self._compose(x, y, depth)
        return self._inputs(x, y, depth) or self._outputs(x, y, depth)

    def _defend(
        self, x: _Side, move: Transition, y: _Side, answers: list[Transition], depth: int
    ) -> Optional[Trace]:
        """The attacker wins when every answer loses the remaining game."""
        opening = f"{x.label} -{move.action}-> {show(move.target)}"
        if not answers:
            return [opening, f"{y.label} = {show(y.process)} cannot answer {move.action}"]
        losing: Optional[Trace] = None
        for answer in answers:
            rest = self._pair(x, move.target, y, answer.target, depth - 1)
            if rest is None:
                return None
            if losing is None:
                losing = [self.reply(y, answer)] + rest
        return [opening] + losing

    def _tau(self, x: _Side, y: _Side, depth: int) -> Optional[Trace]:
        for move in step(x.process, Query.tau()):
            trace = self._defend(x, move, y, self.answers(y.process, Query.tau()), depth)
            if trace is not None:
                return trace
        return None

    def _inputs(self, x: _Side, y: _Side, depth: int) -> Optional[Trace]:
        for subject in input_subjects(x.process):
            for payload in self.payloads:
                query = Query.input(subject, payload)
                for move in step(x.process, query):
                    trace = self._defend(x, move, y, self.answers(y.process, query), depth)
                    if trace is not None:
                        return trace
        return None

    def _outputs(self, x: _Side, y: _Side, depth: int) -> Optional[Trace]:
        for move in step(x.process, Query.out()):
            answers = [
                a
                for a in self.answers(y.process, Query.out())
                if a.action.subject == move.action.subject
            ]
            opening = f"{x.label} -{move.action}-> {show(move.target)}"
            if not answers:
                return [opening, f"{y.label} = {show(y.process)} has no output on {move.action.subject}"]
            losing: Optional[Trace] = None
            for answer in answers:
                rest = self._receive(x, move, y, answer, depth)
                if rest is None:
                    losing = None
                    break
                if losing is None:
                    losing = [self.reply(y, answer)] + rest
            if losing is not None:
                return [opening] + losing
        return None

    def _receive(
        self, x: _Side, move: Transition, y: _Side, answer: Transition, depth: int
    ) -> Optional[Trace]:
        """A receiving context that tells the two emissions apart."""
        scoped = set(move.action.extruded) | set(answer.action.extruded)
        for context in self.contexts:
            if context.free_names & scoped:
                continue
            left = res_of(
                move.action.extruded,
                Par(move.target, substitute(context, HOLE, move.action.payload)),
            )
            right = res_of(
                answer.action.extruded,
                Par(answer.target, substitute(context, HOLE, answer.action.payload)),
            )
            rest = self._pair(x, left, y, right, depth - 1)
            if rest is not None:
                return [f"in context C(U) = {show(context)}"] + rest
        return None

    def _compose(self, x: _Side, y: _Side, depth: int) -> Optional[Trace]:
        for partner in self.partners:
            rest = self._pair(x, Par(x.process, partner), y, Par(y.process, partner), depth - 1)
            if rest is not None:
                return [f"compose both with {show(partner)}"] + rest
        return None


def bisim_bounded(
    p: Process,
    q: Process,
    kind: Kind = Kind.CONTEXT,
    strength: Strength = Strength.STRONG,
    budget: Budget = DEFAULT_BUDGET,
    *,
    depth: int = DEFAULT_DEPTH,
    breadth: int = DEFAULT_BREADTH,
) -> EquivReport:
    """Play the bisimulation game for ``depth`` rounds.

    ``breadth`` caps the payloads, receiving contexts and parallel partners
    the attacker may pick from.
    """
    if not p.closed or not q.closed:
        raise InputError("bisimulation games are played on closed processes only")
    kind, strength = Kind(kind), Strength(strength)
    game = _Game(kind, strength, budget, breadth, p, q)
    trace = game.attack(p, q, depth)
    bounds = {
        "kind": kind.value,
        "strength": strength.value,
        "depth": depth,
        "breadth": breadth,
        "closure_truncated": game.truncated,
        "budget": budget.to_json(),
    }
    if trace is None:
        logger.debug("no distinction within %d round(s)", depth)
        return EquivReport(Result.NONE_FOUND, bounds)
    return EquivReport(Result.DISTINGUISHED, bounds, trace=tuple(trace))
