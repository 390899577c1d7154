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

"""Labelled transition system: one-step successors, barbs and weak closure.

Derivations are computed on a copy of the source whose restriction binders
are all distinct (so the PAR/COM side conditions on bound names hold by
construction). Input transitions are query-driven: the caller supplies the
payload. Targets are returned in canonical form and deduplicated up to
structural congruence.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .errors import InputError
from .process import (
    Input,
    Name,
    Output,
    Par,
    Process,
    Res,
    canonical_key,
    fresh_name,
    freshen_bound,
    normalize,
    rename_name,
    res_of,
    show,
    substitute,
)

logger = logging.getLogger(__name__)

Path = tuple[str, ...]


# ---- actions -----------------------------------------------------------------


@dataclass(frozen=True)
class Tau:
    def __str__(self) -> str:
        return "tau"

    def to_json(self) -> dict:
        return {"kind": "tau"}


@dataclass(frozen=True)
class In:
    subject: Name
    payload: Process

    def __str__(self) -> str:
        return f"{self.subject}<{show(self.payload)}>"

    def to_json(self) -> dict:
        return {"kind": "in", "subject": self.subject, "payload": show(self.payload)}


@dataclass(frozen=True)
class Out:
    subject: Name
    extruded: tuple[Name, ...]
    payload: Process

    def __str__(self) -> str:
        scope = "".join(f"(nu {b})" for b in self.extruded)
        return f"{scope}'{self.subject}<{show(self.payload)}>"

    def to_json(self) -> dict:
        return {
            "kind": "out",
            "subject": self.subject,
            "extruded": list(self.extruded),
            "payload": show(self.payload),
        }


Action = Union[Tau, In, Out]


@dataclass(frozen=True)
class Transition:
    source: Process
    action: Action
    target: Process

    def to_json(self) -> dict:
        return {
            "source": show(self.source),
            "action": self.action.to_json(),
            "target": show(self.target),
        }


@dataclass(frozen=True)
class Query:
    """Which transitions ``step`` should return."""

    kind: str
    subject: Optional[Name] = None
    payload: Optional[Process] = None

    @classmethod
    def tau(cls) -> "Query":
        return cls("tau")

    @classmethod
    def out(cls) -> "Query":
        return cls("out")

    @classmethod
    def input(cls, subject: Name, payload: Process) -> "Query":
        return cls("in", subject, payload)


@dataclass(frozen=True)
class Barb:
    name: Name
    output: bool

    def __str__(self) -> str:
        return f"'{self.name}" if self.output else self.name


@dataclass(frozen=True)
class Reach:
    states: tuple[Process, ...]
    truncated: bool


# ---- derivations -------------------------------------------------------------


@dataclass(frozen=True)
class _Emission:
    """An output derivable from a term: subject, extruded names, payload, residual."""

    subject: Name
    extruded: tuple[Name, ...]
    payload: Process
    residual: Process


def _outputs(p: Process) -> Iterator[_Emission]:
    match p:
        case Output(subject, payload, cont):
            yield _Emission(subject, (), payload, cont)
        case Par(left, right):
            for em in _outputs(left):
                yield _Emission(em.subject, em.extruded, em.payload, Par(em.residual, right))
            for em in _outputs(right):
                yield _Emission(em.subject, em.extruded, em.payload, Par(left, em.residual))
        case Res(binder, body):
            for em in _outputs(body):
                if binder == em.subject:
                    continue
                if binder in em.payload.free_names:
                    # OPEN
                    yield _Emission(em.subject, (binder,) + em.extruded, em.payload, em.residual)
                else:
                    yield _Emission(em.subject, em.extruded, em.payload, Res(binder, em.residual))


def _inputs(p: Process, path: Path = ()) -> Iterator[tuple[Name, Path]]:
    """Subjects of available inputs with the path to each."""
    match p:
        case Input(subject, _, _):
            yield subject, path
        case Par(left, right):
            yield from _inputs(left, path + ("L",))
            yield from _inputs(right, path + ("R",))
        case Res(binder, body):
            for subject, inner in _inputs(body, path + ("B",)):
                if subject != binder:
                    yield subject, inner


def _receive(p: Process, path: Path, payload: Process) -> Process:
    """Residual of the input at ``path`` after receiving ``payload``."""
    if not path:
        assert isinstance(p, Input)
        return substitute(p.body, p.binder, payload)
    head, rest = path[0], path[1:]
    if head == "L":
        assert isinstance(p, Par)
        return Par(_receive(p.left, rest, payload), p.right)
    if head == "R":
        assert isinstance(p, Par)
        return Par(p.left, _receive(p.right, rest, payload))
    assert isinstance(p, Res)
    binder, body = p.binder, p.body
    if binder in payload.free_names:
        renamed = fresh_name(payload.free_names | body.names, binder)
        body = rename_name(body, binder, renamed)
        binder = renamed
    return Res(binder, _receive(body, rest, payload))


def _taus(p: Process) -> Iterator[Process]:
    match p:
        case Par(left, right):
            for target in _taus(left):
                yield Par(target, right)
            for target in _taus(right):
                yield Par(left, target)
            yield from _communications(left, right, sender_left=True)
            yield from _communications(right, left, sender_left=False)
        case Res(binder, body):
            for target in _taus(body):
                yield Res(binder, target)


def _communications(sender: Process, receiver: Process, *, sender_left: bool) -> Iterator[Process]:
    inputs = list(_inputs(receiver))
    if not inputs:
        return
    for em in _outputs(sender):
        payload = normalize(em.payload).process
        if payload.bound_names:
            # IN only accepts payloads without bound names
            continue
        for subject, path in inputs:
            if subject != em.subject:
                continue
            received = _receive(receiver, path, payload)
            body = Par(em.residual, received) if sender_left else Par(received, em.residual)
            yield res_of(em.extruded, body)


# ---- public operations -------------------------------------------------------


def _require_closed(p: Process, operation: str) -> None:
    if p.free_vars:
        raise InputError(
            f"{operation} requires a closed process; free variables: "
            + ", ".join(sorted(p.free_vars))
        )


def transitions(p: Process, query: Query) -> list[Transition]:
    """Transitions of ``p`` matching ``query``; open terms are allowed here."""
    work = freshen_bound(p)
    found: dict[str, Transition] = {}
    if query.kind == "tau":
        for target in _taus(work):
            canonical = normalize(target).process
            found.setdefault(show(canonical), Transition(p, Tau(), canonical))
    elif query.kind == "out":
        for em in _outputs(work):
            key = canonical_key(res_of(em.extruded, Output(em.subject, em.payload, em.residual)))
            if key in found:
                continue
            action = Out(em.subject, em.extruded, em.payload)
            found[key] = Transition(p, action, normalize(em.residual).process)
    elif query.kind == "in":
        assert query.subject is not None and query.payload is not None
        payload = normalize(query.payload).process
        if payload.bound_names:
            raise InputError("input payload must have no bound names (up to congruence)")
        work = freshen_bound(work, payload.free_names)
        for subject, path in _inputs(work):
            if subject != query.subject:
                continue
            canonical = normalize(_receive(work, path, payload)).process
            found.setdefault(show(canonical), Transition(p, In(subject, payload), canonical))
    else:
        raise InputError(f"unknown transition query '{query.kind}'")
    return sorted(found.values(), key=lambda t: (str(t.action), show(t.target)))


def step(p: Process, query: Query) -> list[Transition]:
    """All one-step transitions of the closed process ``p`` matching ``query``."""
    _require_closed(p, "step")
    return transitions(p, query)


def input_subjects(p: Process) -> list[Name]:
    """Channels on which ``p`` can immediately receive."""
    work = freshen_bound(p)
    return sorted({subject for subject, _ in _inputs(work)})


def tau_successors(p: Process) -> list[Process]:
    return [t.target for t in transitions(p, Query.tau())]


def weak_reach(p: Process, fuel: int) -> Reach:
    """States reachable by at most ``fuel`` tau-steps, ``p`` included."""
    _require_closed(p, "weak_reach")
    start = normalize(p).process
    seen = {show(start): start}
    frontier = [start]
    for _ in range(fuel):
        next_frontier = []
        for state in frontier:
            for target in tau_successors(state):
                key = show(target)
                if key not in seen:
                    seen[key] = target
                    next_frontier.append(target)
        frontier = next_frontier
        if not frontier:
            break
    truncated = any(
        show(target) not in seen for state in frontier for target in tau_successors(state)
    )
    if truncated:
        logger.debug("weak closure of %s truncated at fuel %d", show(p), fuel)
    return Reach(tuple(seen.values()), truncated)


def tau_path(p: Process, q: Process, fuel: int) -> Optional[list[Process]]:
    """Shortest tau-path of canonical states from ``p`` to a state congruent to ``q``."""
    start = normalize(p).process
    goal = canonical_key(q)
    parents: dict[str, Optional[str]] = {show(start): None}
    states = {show(start): start}
    queue = deque([(start, 0)])
    while queue:
        state, dist = queue.popleft()
        key = show(state)
        if key == goal:
            path = []
            cursor: Optional[str] = key
            while cursor is not None:
                path.append(states[cursor])
                cursor = parents[cursor]
            return list(reversed(path))
        if dist == fuel:
            continue
        for target in tau_successors(state):
            target_key = show(target)
            if target_key not in parents:
                parents[target_key] = key
                states[target_key] = target
                queue.append((target, dist + 1))
    return None


def strong_barbs(p: Process) -> set[Barb]:
    work = freshen_bound(p)
    barbs = {Barb(subject, False) for subject, _ in _inputs(work)}
    barbs |= {Barb(em.subject, True) for em in _outputs(work)}
    return barbs


def barbs(p: Process, weak: bool = False, fuel: int = 8) -> list[Barb]:
    """Observable channels of ``p``; the weak variant looks through tau-steps."""
    _require_closed(p, "barbs")
    if not weak:
        found = strong_barbs(p)
    else:
        found = set()
        for state in weak_reach(p, fuel).states:
            found |= strong_barbs(state)
    return sorted(found, key=lambda b: (b.name, b.output))


def weak_transitions(p: Process, query: Query, fuel: int) -> tuple[list[Transition], bool]:
    """``=tau*=> -action-> =tau*=>`` successors, and whether closure was truncated.

    For a ``tau`` query the result is the weak-epsilon closure itself,
    reported as tau-transitions (zero steps included).
    """
    reach = weak_reach(p, fuel)
    truncated = reach.truncated
    if query.kind == "tau":
        return [Transition(p, Tau(), s) for s in reach.states], truncated
    found: dict[tuple[str, str], Transition] = {}
    for state in reach.states:
        for t in transitions(state, query):
            after = weak_reach(t.target, fuel)
            truncated = truncated or after.truncated
            for target in after.states:
                found.setdefault((str(t.action), show(target)), Transition(p, t.action, target))
    return sorted(found.values(), key=lambda t: (str(t.action), show(t.target))), truncated
