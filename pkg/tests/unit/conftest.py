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

"""Shared fixtures and brute-force oracles.

The oracles are deliberately naive: congruence is decided by exploring the
structural axioms directly, and satisfaction for the exactly decided
fragment follows the clause definitions without any memoisation.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Callable, Iterator

import pytest

from hopi_workbench.checker import Budget
from hopi_workbench.lts import Query, step
from hopi_workbench.logic import (
    And,
    Bot,
    DiaIn,
    DiaOut,
    DiaTau,
    Formula,
    FreshName,
    Neq,
    Not,
    Reveal,
    Top,
    Zero,
    as_process,
    rename_formula_name,
)
from hopi_workbench.logic import Par as FPar
from hopi_workbench.process import (
    NIL,
    Input,
    Nil,
    Output,
    Par,
    Process,
    Res,
    Var,
    canonical_key,
    components,
    fresh_name,
    par_of,
    rename_name,
    res_of,
    standard_form,
)

GARBAGE_NAME = "z"


# ---- alpha-equivalence -------------------------------------------------------


def alpha_key(p: Process) -> str:
    """A spelling of ``p`` in which every binder is replaced by its depth."""
    return _alpha_key(p, {}, {}, 0)


def _alpha_key(p: Process, names: dict, variables: dict, level: int) -> str:
    match p:
        case Nil():
            return "0"
        case Var(var):
            return variables.get(var, var)
        case Input(subject, binder, body):
            inner = _alpha_key(body, names, {**variables, binder: f"#{level}"}, level + 1)
            return f"{names.get(subject, subject)}(#).{inner}"
        case Output(subject, payload, cont):
            carried = _alpha_key(payload, names, variables, level)
            after = _alpha_key(cont, names, variables, level)
            return f"{names.get(subject, subject)}<{carried}>.{after}"
        case Par(left, right):
            first = _alpha_key(left, names, variables, level)
            second = _alpha_key(right, names, variables, level)
            return f"({first}|{second})"
        case Res(binder, body):
            inner = _alpha_key(body, {**names, binder: f"#{level}"}, variables, level + 1)
            return f"nu.{inner}"
    raise TypeError(p)


# ---- structural congruence ---------------------------------------------------


def _rename_free(p: Process, old: str, new: str) -> Process:
    """Free ``old`` becomes ``new``; ``new`` must not occur in ``p``."""
    match p:
        case Input(subject, binder, body):
            return Input(new if subject == old else subject, binder, _rename_free(body, old, new))
        case Output(subject, payload, cont):
            return Output(
                new if subject == old else subject,
                _rename_free(payload, old, new),
                _rename_free(cont, old, new),
            )
        case Par(left, right):
            return Par(_rename_free(left, old, new), _rename_free(right, old, new))
        case Res(binder, body):
            return p if binder == old else Res(binder, _rename_free(body, old, new))
    return p


def _extrude(binder: str, inside: Process, other: Process, inside_left: bool) -> Process:
    if binder in other.free_names:
        fresh = fresh_name(inside.names | other.names, binder)
        inside = _rename_free(inside, binder, fresh)
        binder = fresh
    return Res(binder, Par(inside, other) if inside_left else Par(other, inside))


def _at_root(p: Process) -> Iterator[Process]:
    yield Par(p, NIL)
    if isinstance(p, Nil):
        yield Res(GARBAGE_NAME, NIL)
    match p:
        case Par(left, Nil()):
            yield left
    match p:
        case Par(left, right):
            yield Par(right, left)
            if isinstance(left, Par):
                yield Par(left.left, Par(left.right, right))
            if isinstance(right, Par):
                yield Par(Par(left, right.left), right.right)
            if isinstance(left, Res):
                yield _extrude(left.binder, left.body, right, True)
            if isinstance(right, Res):
                yield _extrude(right.binder, right.body, left, False)
        case Res(binder, body):
            if binder not in body.free_names:
                yield body
            if isinstance(body, Res):
                yield Res(body.binder, Res(binder, body.body))
            if isinstance(body, Par):
                if binder not in body.right.free_names:
                    yield Par(Res(binder, body.left), body.right)
                if binder not in body.left.free_names:
                    yield Par(body.left, Res(binder, body.right))


def _rewrites(p: Process) -> Iterator[Process]:
    yield from _at_root(p)
    match p:
        case Input(subject, binder, body):
            for r in _rewrites(body):
                yield Input(subject, binder, r)
        case Output(subject, payload, cont):
            for r in _rewrites(payload):
                yield Output(subject, r, cont)
            for r in _rewrites(cont):
                yield Output(subject, payload, r)
        case Par(left, right):
            for r in _rewrites(left):
                yield Par(r, right)
            for r in _rewrites(right):
                yield Par(left, r)
        case Res(binder, body):
            for r in _rewrites(body):
                yield Res(binder, r)


def _congruence_closure(p: Process, max_size: int) -> set[str]:
    """Alpha keys of every term reachable from ``p`` by the structural axioms
    without exceeding ``max_size`` constructors."""
    seen = {alpha_key(p)}
    queue = deque([p])
    while queue:
        current = queue.popleft()
        for r in _rewrites(current):
            if r.size > max_size:
                continue
            key = alpha_key(r)
            if key not in seen:
                seen.add(key)
                queue.append(r)
    return seen


def oracle_congruent(p: Process, q: Process, slack: int = 2) -> bool:
    cap = max(p.size, q.size) + slack
    return bool(_congruence_closure(p, cap) & _congruence_closure(q, cap))


# ---- satisfaction on the exact fragment --------------------------------------


def _splits(p: Process) -> Iterator[tuple[Process, Process]]:
    parts = components(standard_form(p))
    indices = range(len(parts))
    for k in range(len(parts) + 1):
        for chosen in combinations(indices, k):
            yield (
                par_of(parts[i] for i in chosen),
                par_of(parts[i] for i in indices if i not in chosen),
            )


def _revelations(p: Process, name: str) -> Iterator[Process]:
    yield p
    parts = components(standard_form(p))
    for index, part in enumerate(parts):
        binders = []
        inner = part
        while isinstance(inner, Res):
            binders.append(inner.binder)
            inner = inner.body
        others = parts[:index] + parts[index + 1 :]
        for binder in binders:
            rest = [b for b in binders if b != binder]
            yield par_of(others + [res_of(rest, rename_name(inner, binder, name))])


def oracle_sat(p: Process, a: Formula) -> bool:
    """``p |= a`` for closed ``p`` and ``a`` in the exactly decided fragment."""
    match a:
        case Top():
            return True
        case Bot():
            return False
        case Not(body):
            return not oracle_sat(p, body)
        case And(left, right):
            return oracle_sat(p, left) and oracle_sat(p, right)
        case Neq(left, right):
            return left != right
        case Zero():
            return canonical_key(p) == canonical_key(NIL)
        case DiaTau(body):
            return any(oracle_sat(t.target, body) for t in step(p, Query.tau()))
        case DiaOut(subject, payload, body):
            return any(
                t.action.subject == subject
                and oracle_sat(res_of(t.action.extruded, t.action.payload), payload)
                and oracle_sat(t.target, body)
                for t in step(p, Query.out())
            )
        case DiaIn(subject, payload, body):
            shaped = as_process(payload)
            assert shaped is not None, "input payloads must be process-shaped"
            return any(oracle_sat(t.target, body) for t in step(p, Query.input(subject, shaped)))
        case FPar(left, right):
            return any(oracle_sat(x, left) and oracle_sat(y, right) for x, y in _splits(p))
        case Reveal(name, body):
            if name in p.free_names:
                return False
            return any(oracle_sat(q, body) for q in _revelations(p, name))
        case FreshName(binder, body):
            n = fresh_name(p.names | a.free_names | {binder}, "fresh")
            return oracle_sat(p, rename_formula_name(body, binder, n))
    raise ValueError(f"outside the exact fragment: {a!r}")


# ---- fixtures ----------------------------------------------------------------


@pytest.fixture
def congruent_oracle() -> Callable[[Process, Process], bool]:
    return oracle_congruent


@pytest.fixture
def sat_oracle() -> Callable[[Process, Formula], bool]:
    return oracle_sat


@pytest.fixture
def small_budget() -> Budget:
    return Budget(payload_depth=2, pool_size=16, tau_fuel=4, mu_fuel=4)


@pytest.fixture(autouse=True)
def _no_budget_env(monkeypatch):
    monkeypatch.delenv("HOPI_BUDGET", raising=False)
    monkeypatch.delenv("HOPI_CMD_NAME", raising=False)


@pytest.fixture
def congruence_closure() -> Callable[[Process, int], set[str]]:
    return _congruence_closure
