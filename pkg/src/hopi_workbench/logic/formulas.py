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

"""Formula syntax trees for the strong, weak and fixpoint spatial logics.

Only primitive connectives are stored; ``or``, ``->`` and ``<->`` are built
from ``Not``/``And`` and remember how they were written through a ``hint``
that takes no part in equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from ..process import UNUSED, Name, ProcVar, fresh_var


class Dialect(str, enum.Enum):
    SL = "sl"
    WL = "wl"
    MUSL = "musl"


class Formula:
    """Common base of all formula constructors."""

    @cached_property
    def free_names(self) -> frozenset[Name]:
        """fn(A). Name binders exist only in ``(N x)A``."""
        own: set[Name] = set()
        match self:
            case (
                DiaIn(subject, _, _)
                | BoxIn(subject, _, _)
                | DiaOut(subject, _, _)
                | InPrefix(subject, _, _)
                | OutPrefix(subject, _, _)
                | WeakIn(subject, _, _)
                | WeakBoxIn(subject, _, _)
                | WeakOut(subject, _, _)
            ):
                own.add(subject)
            case InAdjoint(_, subject, _) | OutAdjoint(_, subject):
                own.add(subject)
            case Reveal(name, _) | NotFree(name, _) | Hide(_, name):
                own.add(name)
            case Neq(left, right):
                own.update((left, right))
            case FreshName(binder, body):
                return body.free_names - {binder}
        for child in self.children():
            own |= child.free_names
        return frozenset(own)

    @cached_property
    def free_vars(self) -> frozenset[ProcVar]:
        """fpv(A). ``in a(X).A``, ``(NV X)A`` and ``mu X.A`` bind ``X``."""
        match self:
            case PropVar(var):
                return frozenset({var})
            case InPrefix(_, binder, body) | FreshVar(binder, body) | Mu(binder, body):
                return body.free_vars - {binder}
            case InAdjoint(body, _, var):
                return body.free_vars | ({var} if var != UNUSED else frozenset())
        result: frozenset[ProcVar] = frozenset()
        for child in self.children():
            result |= child.free_vars
        return result

    @cached_property
    def size(self) -> int:
        return 1 + sum(child.size for child in self.children())

    def children(self) -> tuple["Formula", ...]:
        return ()

    def __str__(self) -> str:
        from .syntax import show_formula

        return show_formula(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    body: Formula
    hint: str = field(default="", compare=False, repr=False)

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula
    hint: str = field(default="", compare=False, repr=False)

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class DiaTau(Formula):
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class DiaIn(Formula):
    """``<a<A1>>A2``: some input of a process in A1 leads into A2."""

    subject: Name
    payload: Formula
    body: Formula

    def children(self):
        return (self.payload, self.body)


@dataclass(frozen=True)
class BoxIn(Formula):
    """``<a[A1]>A2``: every input of a process in A1 can lead into A2."""

    subject: Name
    payload: Formula
    body: Formula

    def children(self):
        return (self.payload, self.body)


@dataclass(frozen=True)
class DiaOut(Formula):
    subject: Name
    payload: Formula
    body: Formula

    def children(self):
        return (self.payload, self.body)


@dataclass(frozen=True)
class Zero(Formula):
    pass


@dataclass(frozen=True)
class PropVar(Formula):
    var: ProcVar


@dataclass(frozen=True)
class InPrefix(Formula):
    subject: Name
    binder: ProcVar
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class InAdjoint(Formula):
    body: Formula
    subject: Name
    var: ProcVar

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class OutPrefix(Formula):
    subject: Name
    payload: Formula
    body: Formula

    def children(self):
        return (self.payload, self.body)


@dataclass(frozen=True)
class OutAdjoint(Formula):
    body: Formula
    subject: Name

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class Par(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Guarantee(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Reveal(Formula):
    name: Name
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class Hide(Formula):
    body: Formula
    name: Name

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class FreshName(Formula):
    binder: Name
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class FreshVar(Formula):
    binder: ProcVar
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class NotFree(Formula):
    name: Name
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class NoBound(Formula):
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class Neq(Formula):
    left: Name
    right: Name


@dataclass(frozen=True)
class WeakEps(Formula):
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class WeakIn(Formula):
    subject: Name
    payload: Formula
    body: Formula

    def children(self):
        return (self.payload, self.body)


@dataclass(frozen=True)
class WeakBoxIn(Formula):
    subject: Name
    payload: Formula
    body: Formula

    def children(self):
        return (self.payload, self.body)


@dataclass(frozen=True)
class WeakOut(Formula):
    subject: Name
    payload: Formula
    body: Formula

    def children(self):
        return (self.payload, self.body)


@dataclass(frozen=True)
class Mu(Formula):
    binder: ProcVar
    body: Formula

    def children(self):
        return (self.body,)


TOP = Top()
BOT = Bot()
ZERO = Zero()

STRONG_MODALITIES = (DiaTau, DiaIn, BoxIn, DiaOut)
WEAK_MODALITIES = (WeakEps, WeakIn, WeakBoxIn, WeakOut)


# ---- derived forms -----------------------------------------------------------


def or_(left: Formula, right: Formula) -> Formula:
    return Not(And(Not(left), Not(right)), hint="or")


def implies(left: Formula, right: Formula) -> Formula:
    return Not(And(left, Not(right)), hint="imp")


def iff(left: Formula, right: Formula) -> Formula:
    return And(implies(left, right), implies(right, left), hint="iff")


def bang(a: Formula) -> Formula:
    """``!A = not mu X. not (A | not X)`` with ``X`` fresh for ``A``."""
    x = fresh_var(a.free_vars, "X")
    return Not(Mu(x, Not(Par(a, Not(PropVar(x))))), hint="bang")


def conjunction(parts: list[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``T``."""
    if not parts:
        return TOP
    result = parts[0]
    for part in parts[1:]:
        result = And(result, part)
    return result


def as_implication(a: Formula) -> tuple[Formula, Formula] | None:
    """``(L, R)`` when ``a`` is ``not (L and not R)``."""
    if isinstance(a, Not) and isinstance(a.body, And) and isinstance(a.body.right, Not):
        return a.body.left, a.body.right.body
    return None


def as_iff(a: Formula) -> tuple[Formula, Formula] | None:
    if isinstance(a, And):
        first, second = as_implication(a.left), as_implication(a.right)
        if first and second and first == (second[1], second[0]):
            return first
    return None


def hidden_name(x: Name, body: Formula) -> Formula:
    """``(H x)A = (N x) x @ A``."""
    return FreshName(x, Reveal(x, body))


def hidden_var(a: Name, x: ProcVar, body: Formula) -> Formula:
    """``(a H X)A = (NV X) in a(X).A``."""
    return FreshVar(x, InPrefix(a, x, body))


def name_occurs(a: Name, body: Formula) -> Formula:
    """Processes in ``body`` that have ``a`` free: ``not (- a)T and A``."""
    return And(Not(NotFree(a, TOP)), body)


def forall_payload_output(
    a: Name, payload: Formula, after: Formula, helper: Name, y: ProcVar = "Y"
) -> Formula:
    """``{P | every P1 in payload has a<P1>.P in after}``.

    Written ``(in b(Y).out a<A1>.Y |> <tau>A2) \\ out b`` with ``b = helper``.
    """
    sender = InPrefix(helper, y, OutPrefix(a, payload, PropVar(y)))
    return OutAdjoint(Guarantee(sender, DiaTau(after)), helper)


def forall_continuation_output(
    a: Name, cont: Formula, after: Formula, helper: Name, y: ProcVar = "Y"
) -> Formula:
    """``{P | every P1 in cont has a<P>.P1 in after}``."""
    sender = InPrefix(helper, y, OutPrefix(a, PropVar(y), cont))
    return OutAdjoint(Guarantee(sender, DiaTau(after)), helper)


# ---- traversal ---------------------------------------------------------------


def walk(a: Formula) -> Iterator[Formula]:
    """Every subformula, outermost first."""
    yield a
    for child in a.children():
        yield from walk(child)


def dialect_of(a: Formula) -> Dialect:
    """Smallest dialect containing ``a``; mixing strong and weak modalities
    is reported as ``MUSL`` only when no weak modality is present."""
    weak = strong = mu = False
    for sub in walk(a):
        weak |= isinstance(sub, WEAK_MODALITIES)
        strong |= isinstance(sub, STRONG_MODALITIES)
        mu |= isinstance(sub, Mu)
    if weak:
        return Dialect.WL
    return Dialect.MUSL if mu else Dialect.SL


def in_dialect(a: Formula, dialect: Dialect) -> bool:
    for sub in walk(a):
        if dialect is Dialect.SL and isinstance(sub, WEAK_MODALITIES + (Mu,)):
            return False
        if dialect is Dialect.WL and isinstance(sub, STRONG_MODALITIES + (Mu,)):
            return False
        if dialect is Dialect.MUSL and isinstance(sub, WEAK_MODALITIES):
            return False
    return True


def negations_above(var: ProcVar, a: Formula) -> Iterator[int]:
    """Number of enclosing ``Not`` for each free occurrence of ``var``."""

    def visit(b: Formula, count: int) -> Iterator[int]:
        match b:
            case PropVar(name) if name == var:
                yield count
                return
            case InPrefix(_, binder, _) | FreshVar(binder, _) | Mu(binder, _) if binder == var:
                return
            case InAdjoint(body, _, name) if name == var:
                yield count
                yield from visit(body, count)
                return
            case Not(body):
                yield from visit(body, count + 1)
                return
        for child in b.children():
            yield from visit(child, count)

    return visit(a, 0)


def positive_in(var: ProcVar, a: Formula) -> bool:
    """True when every free occurrence of ``var`` is under an even number of negations."""
    return all(count % 2 == 0 for count in negations_above(var, a))


def monotone_in(var: ProcVar, a: Formula) -> bool:
    """Stricter than ``positive_in``: also rejects occurrences in the antitone
    positions (left of ``|>``, the payload of ``<a[A]>``/``<<a[A]>>``)."""

    def visit(b: Formula, polarity: bool) -> bool:
        match b:
            case PropVar(name) if name == var:
                return polarity
            case InPrefix(_, binder, _) | FreshVar(binder, _) | Mu(binder, _) if binder == var:
                return True
            case InAdjoint(_, _, name) if name == var:
                return False
            case Not(body):
                return visit(body, not polarity)
            case Guarantee(left, right):
                return visit(left, not polarity) and visit(right, polarity)
            case BoxIn(_, payload, body) | WeakBoxIn(_, payload, body):
                return visit(payload, not polarity) and visit(body, polarity)
        return all(visit(child, polarity) for child in b.children())

    return visit(a, True)
