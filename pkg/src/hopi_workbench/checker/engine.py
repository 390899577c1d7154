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

"""Satisfaction ``P |= A`` with three-valued verdicts.

Every clause works on the canonical form of the process. Clauses whose
quantifier ranges over finitely many congruence classes (splits,
revelations, transitions, process-shaped payloads) are decided exactly.
The remaining quantifiers (guarantee partners, non process-shaped payloads,
weak closures and fixpoints) are explored within a ``Budget``: a witness
or counterexample found there is definite, exhausting the budget without
one yields ``unknown``.

Fixpoints are first unfolded ``A^i(F)`` for ``i = 1..mu_fuel``. If no
unfolding holds, the approximants are recomputed on the finite set of
processes at which the fixpoint variable is actually queried; once that set
is closed and the approximants stop changing the answer is definite.
"""

import enum
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Mapping, Optional

from ..errors import DialectError, InputError
from ..logic import (
    And,
    Bot,
    BoxIn,
    DiaIn,
    DiaOut,
    DiaTau,
    Dialect,
    Formula,
    FreshName,
    FreshVar,
    Guarantee,
    Hide,
    InAdjoint,
    InPrefix,
    Mu,
    Neq,
    NoBound,
    Not,
    NotFree,
    OutAdjoint,
    OutPrefix,
    Par,
    PropVar,
    Reveal,
    Top,
    WeakBoxIn,
    WeakEps,
    WeakIn,
    WeakOut,
    Zero,
    approximant,
    as_process,
    implies,
    in_dialect,
    rename_formula_name,
    rename_formula_var,
    show_formula,
)
from ..lts import Query, input_subjects, transitions
from ..process import (
    NIL,
    UNUSED,
    Input,
    Nil,
    Output,
    Process,
    Res,
    Var,
    components,
    fresh_name,
    fresh_var,
    normalize,
    par_of,
    rename_name,
    res_of,
    show,
    substitute,
)
from ..process import Par as PPar
from .budget import DEFAULT_BUDGET, Budget
from .pool import CandidatePool

logger = logging.getLogger(__name__)

Env = Mapping[str, frozenset[str]]


class Outcome(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witness: Optional[str] = None
    budget_hit: bool = False

    @property
    def holds(self) -> bool:
        return self.outcome is Outcome.HOLDS

    @property
    def fails(self) -> bool:
        return self.outcome is Outcome.FAILS

    @property
    def unknown(self) -> bool:
        return self.outcome is Outcome.UNKNOWN

    @property
    def definite(self) -> bool:
        return self.outcome is not Outcome.UNKNOWN

    def flip(self) -> "Verdict":
        if self.outcome is Outcome.HOLDS:
            return Verdict(Outcome.FAILS, self.witness)
        if self.outcome is Outcome.FAILS:
            return Verdict(Outcome.HOLDS, self.witness)
        return self

    def to_json(self, budget: Optional[Budget] = None) -> dict:
        return {
            "verdict": self.outcome.value,
            "witness": self.witness,
            "budget_hit": self.budget_hit,
            "budget": (budget or DEFAULT_BUDGET).to_json(),
        }


def holds(witness: Optional[str] = None) -> Verdict:
    return Verdict(Outcome.HOLDS, witness)


def fails(witness: Optional[str] = None) -> Verdict:
    return Verdict(Outcome.FAILS, witness)


UNKNOWN = Verdict(Outcome.UNKNOWN, None, True)


def conj(left: Verdict, right: Callable[[], Verdict]) -> Verdict:
    """Three-valued conjunction; ``right`` is only evaluated when it can matter."""
    if left.fails:
        return left
    second = right()
    if second.fails:
        return second
    if left.holds and second.holds:
        return holds(left.witness or second.witness)
    return UNKNOWN


class _Search:
    """Accumulates an existential search: first ``holds`` wins, and the
    result is ``fails`` only if every case was a definite failure."""

    def __init__(self, exact: bool = True):
        self.exact = exact
        self.found: Optional[Verdict] = None

    def offer(self, verdict: Verdict, witness: Optional[str] = None) -> bool:
        if verdict.holds:
            self.found = holds(witness or verdict.witness)
            return True
        if verdict.unknown:
            self.exact = False
        return False

    def result(self) -> Verdict:
        if self.found is not None:
            return self.found
        return fails() if self.exact else UNKNOWN


class _Evaluator:
    def __init__(self, budget: Budget, pool: CandidatePool):
        self.budget = budget
        self.pool = pool
        self._canon: dict[Process, Process] = {}
        self._memo: dict[tuple, tuple[Verdict, frozenset]] = {}
        self._reach: dict[str, tuple[list[Process], bool]] = {}
        self._queries: list[set[tuple[str, str]]] = []
        self._by_key: dict[str, Process] = {}

    # ---- helpers -------------------------------------------------------------

    def canon(self, p: Process) -> Process:
        cached = self._canon.get(p)
        if cached is None:
            cached = normalize(p).process
            self._canon[p] = cached
            self._by_key[show(cached)] = cached
        return cached

    def key(self, p: Process) -> str:
        return show(self.canon(p))

    def sat(self, p: Process, a: Formula, env: Env) -> Verdict:
        p = self.canon(p)
        visible = tuple(sorted((v, s) for v, s in env.items() if v in a.free_vars))
        memo_key = (show(p), a, visible)
        entry = self._memo.get(memo_key)
        if entry is None:
            self._queries.append(set())
            try:
                verdict = self._clause(p, a, env)
            finally:
                made = frozenset(self._queries.pop())
            entry = (verdict, made)
            self._memo[memo_key] = entry
        if self._queries:
            self._queries[-1].update(entry[1])
        return entry[0]

    def tau_reach(self, p: Process) -> tuple[list[Process], bool]:
        """States within ``tau_fuel`` tau-steps (open terms allowed), truncation flag."""
        start = self.canon(p)
        key = show(start)
        cached = self._reach.get(key)
        if cached is not None:
            return cached
        seen = {key: start}
        frontier = [start]
        for _ in range(self.budget.tau_fuel):
            nxt = []
            for state in frontier:
                for t in transitions(state, Query.tau()):
                    k = self.key(t.target)
                    if k not in seen:
                        seen[k] = self.canon(t.target)
                        nxt.append(seen[k])
            frontier = nxt
            if not frontier:
                break
        truncated = any(
            self.key(t.target) not in seen
            for state in frontier
            for t in transitions(state, Query.tau())
        )
        if truncated:
            logger.debug("tau closure of %s truncated at fuel %d", key, self.budget.tau_fuel)
        result = (list(seen.values()), truncated)
        self._reach[key] = result
        return result

    def payloads(
        self, a: Formula, env: Env, *, counterexamples: bool
    ) -> tuple[list[Process], bool]:
        """Processes standing for the members of ``a``, and whether they are exhaustive."""
        shaped = None if a.free_vars & env.keys() else as_process(a)
        if shaped is not None:
            return [self.canon(shaped)], True
        source = self.pool.members if counterexamples else self.pool.payloads()
        return [r for r in source if self.sat(r, a, env).holds], False

    # ---- clauses -------------------------------------------------------------

    def _clause(self, p: Process, a: Formula, env: Env) -> Verdict:
        match a:
            case Top():
                return holds()
            case Bot():
                return fails()
            case Not(body):
                return self.sat(p, body, env).flip()
            case And(left, right):
                return conj(self.sat(p, left, env), lambda: self.sat(p, right, env))
            case Neq(left, right):
                return holds() if left != right else fails()
            case Zero():
                return holds() if isinstance(p, Nil) else fails()
            case PropVar(var):
                if var in env:
                    key = show(p)
                    self._queries[-1].add((var, key))
                    return holds() if key in env[var] else fails()
                return holds() if p == Var(var) else fails()
            case NotFree(name, body):
                if name in p.free_names:
                    return fails()
                return self.sat(p, body, env)
            case NoBound(body):
                if p.bound_names:
                    return fails()
                return self.sat(p, body, env)
            case DiaTau(body):
                search = _Search()
                for t in transitions(p, Query.tau()):
                    if search.offer(self.sat(t.target, body, env), f"tau -> {show(t.target)}"):
                        break
                return search.result()
            case DiaOut(subject, payload, body):
                return self._dia_out(p, subject, payload, body, env, weak=False)
            case DiaIn(subject, payload, body):
                return self._dia_in(p, subject, payload, body, env, weak=False)
            case BoxIn(subject, payload, body):
                return self._box_in(p, subject, payload, body, env, weak=False)
            case WeakEps(body):
                states, truncated = self.tau_reach(p)
                search = _Search(exact=not truncated)
                for state in states:
                    if search.offer(self.sat(state, body, env), f"=> {show(state)}"):
                        break
                return search.result()
            case WeakOut(subject, payload, body):
                return self._dia_out(p, subject, payload, body, env, weak=True)
            case WeakIn(subject, payload, body):
                return self._dia_in(p, subject, payload, body, env, weak=True)
            case WeakBoxIn(subject, payload, body):
                return self._box_in(p, subject, payload, body, env, weak=True)
            case InPrefix(subject, binder, body):
                return self._in_prefix(p, subject, binder, body, env)
            case OutPrefix(subject, payload, body):
                match components(p):
                    case [Output(s, carried, cont)] if s == subject:
                        return conj(
                            self.sat(carried, payload, env), lambda: self.sat(cont, body, env)
                        )
                return fails()
            case InAdjoint(body, subject, var):
                return self.sat(Input(subject, var, p), body, env)
            case OutAdjoint(body, subject):
                return self.sat(Output(subject, p, NIL), body, env)
            case Hide(body, name):
                return self.sat(Res(name, p), body, env)
            case Par(left, right):
                return self._par(p, left, right, env)
            case Guarantee(left, right):
                return self._guarantee(p, left, right, env)
            case Reveal(name, body):
                return self._reveal(p, name, body, env)
            case FreshName(binder, body):
                n = fresh_name(a.free_names | p.free_names, binder)
                return self.sat(p, rename_formula_name(body, binder, n), env)
            case FreshVar(binder, body):
                v = fresh_var(a.free_vars | p.free_vars | set(env), binder)
                return self.sat(p, rename_formula_var(body, binder, v), env)
            case Mu():
                return self._mu(p, a, env)
        raise TypeError(f"not a formula: {a!r}")

    def _in_prefix(self, p: Process, subject, binder, body: Formula, env: Env) -> Verdict:
        match components(p):
            case [Input(s, bound, cont)] if s == subject:
                if binder in p.free_vars:
                    return fails()
                inner = {v: s for v, s in env.items() if v != binder}
                if bound != binder:
                    cont = substitute(cont, bound, Var(binder))
                return self.sat(cont, body, inner)
        return fails()

    def _par(self, p: Process, left: Formula, right: Formula, env: Env) -> Verdict:
        parts = components(p)
        search = _Search()
        indices = range(len(parts))
        for k in range(len(parts) + 1):
            for chosen in combinations(indices, k):
                first = par_of(parts[i] for i in chosen)
                second = par_of(parts[i] for i in indices if i not in chosen)
                verdict = conj(self.sat(first, left, env), lambda: self.sat(second, right, env))
                if search.offer(verdict, f"{show(first)} || {show(second)}"):
                    return search.result()
        return search.result()

    def _reveal(self, p: Process, name: str, body: Formula, env: Env) -> Verdict:
        if name in p.free_names:
            return fails()
        marker = Input(name, UNUSED, NIL)
        p = normalize(p, _also=[marker]).process
        parts = components(p)
        candidates = [p]
        for index, part in enumerate(parts):
            labels: list[str] = []
            inner = part
            while isinstance(inner, Res):
                labels.append(inner.binder)
                inner = inner.body
            others = parts[:index] + parts[index + 1 :]
            for label in labels:
                rest = [lb for lb in labels if lb != label]
                opened = res_of(rest, rename_name(inner, label, name))
                candidates.append(par_of(others + [opened]))
        search = _Search()
        for q in candidates:
            if search.offer(self.sat(q, body, env), f"{name} @ {show(q)}"):
                break
        return search.result()

    def _guarantee(self, p: Process, left: Formula, right: Formula, env: Env) -> Verdict:
        partners, exact = self.payloads(left, env, counterexamples=True)
        unknown = not exact
        for q in partners:
            verdict = self.sat(PPar(p, q), right, env)
            if verdict.fails:
                return fails(f"Q = {show(q)}")
            if verdict.unknown:
                unknown = True
        if unknown:
            logger.debug("guarantee %s: no counterexample within budget", show_formula(left))
            return UNKNOWN
        return holds()

    # ---- transition modalities ----------------------------------------------

    def _starts(self, p: Process, weak: bool) -> tuple[list[Process], bool]:
        return self.tau_reach(p) if weak else ([p], False)

    def _dia_out(self, p, subject, payload, body, env, *, weak: bool) -> Verdict:
        starts, truncated = self._starts(p, weak)
        search = _Search(exact=not truncated)
        for state in starts:
            for t in transitions(state, Query.out()):
                if t.action.subject != subject:
                    continue
                carried = res_of(t.action.extruded, t.action.payload)
                first = self.sat(carried, payload, env)
                if first.fails:
                    continue
                if not first.holds:
                    search.exact = False
                    continue
                ends, more = self._starts(t.target, weak)
                search.exact = search.exact and not more
                for end in ends:
                    if search.offer(self.sat(end, body, env), f"{t.action} -> {show(end)}"):
                        return search.result()
        return search.result()

    def _input_succeeds(self, p, subject, r: Process, body, env, weak: bool) -> Verdict:
        starts, truncated = self._starts(p, weak)
        search = _Search(exact=not truncated)
        if r.bound_names:
            return search.result()
        for state in starts:
            for t in transitions(state, Query.input(subject, r)):
                ends, more = self._starts(t.target, weak)
                search.exact = search.exact and not more
                for end in ends:
                    if search.offer(self.sat(end, body, env), f"{t.action} -> {show(end)}"):
                        return search.result()
        return search.result()

    def _has_input(self, p: Process, subject: str, weak: bool) -> Optional[bool]:
        """Whether some reachable state can input on ``subject`` (``None`` if unsure)."""
        starts, truncated = self._starts(p, weak)
        if any(subject in input_subjects(state) for state in starts):
            return True
        return None if truncated else False

    def _dia_in(self, p, subject, payload, body, env, *, weak: bool) -> Verdict:
        if self._has_input(p, subject, weak) is False:
            return fails()
        candidates, exact = self.payloads(payload, env, counterexamples=False)
        search = _Search(exact=exact)
        for r in candidates:
            if search.offer(self._input_succeeds(p, subject, r, body, env, weak)):
                break
        if search.found is None and not search.exact:
            logger.debug("input modality on %s: no witness within budget", subject)
        return search.result()

    def _box_in(self, p, subject, payload, body, env, *, weak: bool) -> Verdict:
        candidates, exact = self.payloads(payload, env, counterexamples=True)
        unknown = not exact
        for r in candidates:
            verdict = self._input_succeeds(p, subject, r, body, env, weak)
            if verdict.fails:
                return fails(f"R = {show(r)}")
            if verdict.unknown:
                unknown = True
        return UNKNOWN if unknown else holds()

    # ---- fixpoints -----------------------------------------------------------

    def _mu(self, p: Process, m: Mu, env: Env) -> Verdict:
        for i in range(1, self.budget.mu_fuel + 1):
            verdict = self.sat(p, approximant(m, i), env)
            if verdict.holds:
                return holds(f"unfolding {i}")
        return self._local_fixpoint(p, m, env)

    def _local_fixpoint(self, p: Process, m: Mu, env: Env) -> Verdict:
        tracked = {show(p): p}
        limit = self.budget.pool_size
        while len(tracked) <= limit:
            members: frozenset[str] = frozenset()
            ever: set[str] = set()
            grown = False
            for _ in range(max(self.budget.mu_fuel, len(tracked) + 1)):
                inner = {**env, m.binder: members}
                self._queries.append(set())
                next_members = set()
                try:
                    for key, state in tracked.items():
                        verdict = self.sat(state, m.body, inner)
                        if verdict.unknown:
                            logger.debug("fixpoint at %s: undetermined inner verdict", show(p))
                            return UNKNOWN
                        if verdict.holds:
                            next_members.add(key)
                finally:
                    queried = self._queries.pop()
                new_keys = [k for var, k in queried if var == m.binder and k not in tracked]
                if new_keys:
                    for k in new_keys:
                        tracked[k] = self._by_key[k]
                    grown = True
                    break
                ever |= next_members
                if frozenset(next_members) == members:
                    key = show(p)
                    return holds("least fixpoint") if key in ever else fails("least fixpoint")
                members = frozenset(next_members)
            if not grown:
                break
        logger.debug("fixpoint at %s not resolved within budget", show(p))
        return UNKNOWN


# ---- public API --------------------------------------------------------------


def check(
    p: Process,
    a: Formula,
    budget: Budget = DEFAULT_BUDGET,
    *,
    dialect: Optional[Dialect] = None,
) -> Verdict:
    """Decide or approximate ``p |= a`` for a closed process."""
    if not p.closed:
        raise InputError(
            "check requires a closed process; free variables: " + ", ".join(sorted(p.free_vars))
        )
    if dialect is not None and not in_dialect(a, dialect):
        raise DialectError(f"formula is not in the {dialect.value} dialect")
    evaluator = _Evaluator(budget, CandidatePool(budget, [p], [a]))
    verdict = evaluator.sat(p, a, {})
    logger.debug("%s |= %s: %s", show(p), show_formula(a), verdict.outcome.value)
    return verdict


@dataclass(frozen=True)
class RefinementReport:
    checked: int
    unknown: int
    counterexample: Optional[Process] = None

    @property
    def verdict(self) -> Verdict:
        if self.counterexample is not None:
            return fails(show(self.counterexample))
        return UNKNOWN if self.unknown else holds()


def refines(
    a: Formula, b: Formula, processes: Iterable[Process], budget: Budget = DEFAULT_BUDGET
) -> RefinementReport:
    """Check ``a -> b`` on every given process; the first refuted one is returned."""
    goal = implies(a, b)
    checked = unknown = 0
    for p in processes:
        verdict = check(p, goal, budget)
        checked += 1
        if verdict.fails:
            return RefinementReport(checked, unknown, p)
        if verdict.unknown:
            unknown += 1
    return RefinementReport(checked, unknown)
