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

"""Process terms of the second-order higher-order pi-calculus.

Six constructors, all frozen dataclasses::

    P ::= 0 | X | a(X).P | a<P>.P | P | P | (nu a) P

Binding information (free/bound names and variables, size) is computed once
per node and cached on the instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

Name = str
ProcVar = str

# Binder of the ``a.P`` sugar. Not a valid VAR token, so user text can never
# reference it.
UNUSED: ProcVar = "_U"


class Process:
    """Common base of the six process constructors."""

    @cached_property
    def free_names(self) -> frozenset[Name]:
        match self:
            case Input(subject, _, body):
                return body.free_names | {subject}
            case Output(subject, payload, cont):
                return payload.free_names | cont.free_names | {subject}
            case Par(left, right):
                return left.free_names | right.free_names
            case Res(binder, body):
                return body.free_names - {binder}
        return frozenset()

    @cached_property
    def bound_names(self) -> frozenset[Name]:
        match self:
            case Input(_, _, body):
                return body.bound_names
            case Output(_, payload, cont):
                return payload.bound_names | cont.bound_names
            case Par(left, right):
                return left.bound_names | right.bound_names
            case Res(binder, body):
                return body.bound_names | {binder}
        return frozenset()

    @cached_property
    def free_vars(self) -> frozenset[ProcVar]:
        match self:
            case Var(name):
                return frozenset({name})
            case Input(_, binder, body):
                return body.free_vars - {binder}
            case Output(_, payload, cont):
                return payload.free_vars | cont.free_vars
            case Par(left, right):
                return left.free_vars | right.free_vars
            case Res(_, body):
                return body.free_vars
        return frozenset()

    @cached_property
    def bound_vars(self) -> frozenset[ProcVar]:
        match self:
            case Input(_, binder, body):
                return body.bound_vars | ({binder} if binder != UNUSED else frozenset())
            case Output(_, payload, cont):
                return payload.bound_vars | cont.bound_vars
            case Par(left, right):
                return left.bound_vars | right.bound_vars
            case Res(_, body):
                return body.bound_vars
        return frozenset()

    @property
    def names(self) -> frozenset[Name]:
        """n(P): every name occurring in the term, free or bound."""
        return self.free_names | self.bound_names

    @cached_property
    def size(self) -> int:
        """Constructor count."""
        match self:
            case Input(_, _, body) | Res(_, body):
                return 1 + body.size
            case Output(_, payload, cont):
                return 1 + payload.size + cont.size
            case Par(left, right):
                return 1 + left.size + right.size
        return 1

    @property
    def closed(self) -> bool:
        return not self.free_vars

    def __str__(self) -> str:
        from .syntax import show

        return show(self)


@dataclass(frozen=True)
class Nil(Process):
    pass


@dataclass(frozen=True)
class Var(Process):
    name: ProcVar


@dataclass(frozen=True)
class Input(Process):
    subject: Name
    binder: ProcVar
    body: Process


@dataclass(frozen=True)
class Output(Process):
    subject: Name
    payload: Process
    cont: Process


@dataclass(frozen=True)
class Par(Process):
    left: Process
    right: Process


@dataclass(frozen=True)
class Res(Process):
    binder: Name
    body: Process


NIL = Nil()


def par_of(components: Iterable[Process]) -> Process:
    """Left-nested parallel composition; the empty composition is ``0``."""
    result: Optional[Process] = None
    for component in components:
        result = component if result is None else Par(result, component)
    return NIL if result is None else result


def res_of(binders: Iterable[Name], body: Process) -> Process:
    """``(nu b1)...(nu bn) body`` with ``b1`` outermost."""
    for binder in reversed(list(binders)):
        body = Res(binder, body)
    return body


def components(p: Process) -> list[Process]:
    """Flatten nested ``Par`` nodes, dropping ``0`` components."""
    if isinstance(p, Par):
        return components(p.left) + components(p.right)
    if isinstance(p, Nil):
        return []
    return [p]


def fresh_name(avoid: Iterable[Name], base: Name = "n") -> Name:
    """``base``, ``base'``, ``base''``, ... whichever is first not in ``avoid``."""
    taken = set(avoid)
    candidate = base
    while candidate in taken:
        candidate += "'"
    return candidate


def fresh_var(avoid: Iterable[ProcVar], base: ProcVar = "X") -> ProcVar:
    if base == UNUSED:
        base = "X"
    return fresh_name(avoid, base)


def depth(p: Process) -> int:
    """Nesting depth of prefixes.

    ``d(0) = d(X) = 0``, a prefix adds one to the depths of its payload and
    continuation, parallel adds the depths of both sides, and restriction
    is transparent.
    """
    match p:
        case Input(_, _, body):
            return 1 + depth(body)
        case Output(_, payload, cont):
            return 1 + depth(payload) + depth(cont)
        case Par(left, right):
            return depth(left) + depth(right)
        case Res(_, body):
            return depth(body)
    return 0


def replication_encode(p: Process, a: Name) -> Process:
    """Encode ``!p`` as ``(nu a)(D | a<p | D>.0)`` with ``D = a(X).(X | a<X>.0)``."""
    from ..errors import InputError

    if a in p.free_names:
        raise InputError(f"replication channel '{a}' must not occur free in the process")
    x = fresh_var(p.free_vars)
    duplicator = Input(a, x, Par(Var(x), Output(a, Var(x), NIL)))
    return Res(a, Par(duplicator, Output(a, Par(p, duplicator), NIL)))


def subterms(p: Process) -> Iterator[Process]:
    """Every subterm, outermost first (payloads included)."""
    yield p
    match p:
        case Input(_, _, body) | Res(_, body):
            yield from subterms(body)
        case Output(_, payload, cont):
            yield from subterms(payload)
            yield from subterms(cont)
        case Par(left, right):
            yield from subterms(left)
            yield from subterms(right)


def enumerate_processes(
    names: Iterable[Name],
    variables: Iterable[ProcVar],
    max_size: int,
    *,
    closed: bool = False,
    restrictions: bool = True,
) -> Iterator[Process]:
    """All processes with at most ``max_size`` constructors, smallest first.

    Free names come from ``names`` and variables from ``variables``; input
    binders and restriction binders also range over those alphabets, so
    alpha-variants appear as separate terms. ``closed`` drops terms with
    free variables, ``restrictions=False`` drops every ``(nu a)``.
    """
    names = tuple(names)
    variables = tuple(variables)
    by_size: dict[int, list[Process]] = {}
    for size in range(1, max_size + 1):
        layer: list[Process] = []
        if size == 1:
            layer.append(NIL)
            layer.extend(Var(v) for v in variables)
        else:
            for body in by_size[size - 1]:
                for a in names:
                    for x in variables + (UNUSED,):
                        if x == UNUSED or x in body.free_vars:
                            layer.append(Input(a, x, body))
                    if restrictions:
                        layer.append(Res(a, body))
            for left_size in range(1, size - 1):
                right_size = size - 1 - left_size
                for left, right in itertools.product(by_size[left_size], by_size[right_size]):
                    layer.append(Par(left, right))
                    for a in names:
                        layer.append(Output(a, left, right))
        by_size[size] = layer
        for p in layer:
            if not closed or p.closed:
                yield p
