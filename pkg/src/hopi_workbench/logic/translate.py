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

"""Processes as formulas, the weak-to-fixpoint translation and the sublogic L."""

from __future__ import annotations

import logging
from typing import Optional

from ..errors import DialectError
from ..lts import Action, In, Out, Tau
from ..process import (
    UNUSED,
    Input,
    Nil,
    Output,
    Process,
    Res,
    Var,
    fresh_var,
    res_of,
)
from ..process import Par as PPar
from .formulas import (
    TOP,
    ZERO,
    And,
    BoxIn,
    DiaIn,
    DiaOut,
    DiaTau,
    Dialect,
    Formula,
    FreshName,
    FreshVar,
    Guarantee,
    InPrefix,
    Mu,
    Not,
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
    in_dialect,
    or_,
)
from .subst import map_children

logger = logging.getLogger(__name__)


def embed(p: Process) -> Formula:
    """The process read as a formula: restriction becomes revelation, input ``in a(X).``."""
    match p:
        case Nil():
            return ZERO
        case Var(name):
            return PropVar(name)
        case Input(subject, binder, body):
            return InPrefix(subject, binder, embed(body))
        case Output(subject, payload, cont):
            return OutPrefix(subject, embed(payload), embed(cont))
        case PPar(left, right):
            return Par(embed(left), embed(right))
        case Res(binder, body):
            return Reveal(binder, embed(body))
    raise TypeError(f"not a process: {p!r}")


def as_process(a: Formula) -> Optional[Process]:
    """The process ``a`` spells, when it is built only from process formers."""
    match a:
        case Zero():
            return Nil()
        case PropVar(var):
            return Var(var)
        case InPrefix(subject, binder, body):
            inner = as_process(body)
            return None if inner is None else Input(subject, binder, inner)
        case OutPrefix(subject, payload, body):
            carried, cont = as_process(payload), as_process(body)
            if carried is None or cont is None:
                return None
            return Output(subject, carried, cont)
        case Par(left, right):
            first, second = as_process(left), as_process(right)
            if first is None or second is None:
                return None
            return PPar(first, second)
        case Reveal(name, body):
            inner = as_process(body)
            return None if inner is None else Res(name, inner)
    return None


def translate_tps(p: Process) -> Formula:
    """Characteristic formula of ``p`` up to structural congruence.

    Restriction becomes ``(N a) a @ ...`` and input ``(NV X) in a(X). ...``;
    every other former is kept, payloads included.
    """
    match p:
        case Nil():
            return ZERO
        case Var(name):
            return PropVar(name)
        case Input(subject, binder, body):
            inner = InPrefix(subject, binder, translate_tps(body))
            return inner if binder == UNUSED else FreshVar(binder, inner)
        case Output(subject, payload, cont):
            return OutPrefix(subject, translate_tps(payload), translate_tps(cont))
        case PPar(left, right):
            return Par(translate_tps(left), translate_tps(right))
        case Res(binder, body):
            return FreshName(binder, Reveal(binder, translate_tps(body)))
    raise TypeError(f"not a process: {p!r}")


def action_formula(action: Action, body: Formula) -> Formula:
    """``<alpha>body`` for a transition label; payloads are embedded directly."""
    match action:
        case Tau():
            return DiaTau(body)
        case In(subject, payload):
            return DiaIn(subject, embed(payload), body)
        case Out(subject, extruded, payload):
            return DiaOut(subject, embed(res_of(extruded, payload)), body)
    raise TypeError(f"not an action: {action!r}")


def weak_action_formula(action: Action, body: Formula) -> Formula:
    """``<<alpha>>body``; ``tau`` stands for the weak epsilon."""
    match action:
        case Tau():
            return WeakEps(body)
        case In(subject, payload):
            return WeakIn(subject, embed(payload), body)
        case Out(subject, extruded, payload):
            return WeakOut(subject, embed(res_of(extruded, payload)), body)
    raise TypeError(f"not an action: {action!r}")


# ---- weak to fixpoint --------------------------------------------------------


def _tau_closure(a: Formula, base: str = "X") -> Formula:
    """``mu X. (a or <tau> X)`` with ``X`` fresh for ``a``."""
    x = fresh_var(a.free_vars, base)
    return Mu(x, or_(a, DiaTau(PropVar(x))))


def translate_twm(a: Formula) -> Formula:
    """Replace every weak modality by its strong fixpoint encoding."""
    if not in_dialect(a, Dialect.WL):
        raise DialectError("the weak-to-fixpoint translation expects a WL formula")
    return _twm(a)


def _twm(a: Formula) -> Formula:
    match a:
        case WeakEps(body):
            return _tau_closure(_twm(body))
        case WeakIn(subject, payload, body) | WeakBoxIn(subject, payload, body) | WeakOut(
            subject, payload, body
        ):
            strong = {WeakIn: DiaIn, WeakBoxIn: BoxIn, WeakOut: DiaOut}[type(a)]
            inner = _tau_closure(_twm(body), "Y")
            step = strong(subject, _twm(payload), inner)
            return _tau_closure(step)
    return map_children(a, _twm)


# ---- sublogic L --------------------------------------------------------------


class SublogicL:
    """Membership in the fragment built from ``not``, ``and``, ``<tau>``, ``|>``
    and the two barb formulas ``<a<T>>T`` and ``<'a<T>>T``.

    ``process_guards=True`` also admits process-shaped left operands of
    ``|>``, which is how the distinguishing search instantiates guarantees.
    """

    def __init__(self, *, process_guards: bool = False):
        self.process_guards = process_guards

    def __contains__(self, a: Formula) -> bool:
        match a:
            case Not(body):
                return body in self
            case And(left, right):
                return left in self and right in self
            case DiaTau(body):
                return body in self
            case DiaIn(_, Top(), Top()) | DiaOut(_, Top(), Top()):
                return True
            case Guarantee(left, right):
                guard_ok = left in self or (self.process_guards and as_process(left) is not None)
                return guard_ok and right in self
        return False


def in_sublogic_l(a: Formula) -> bool:
    return a in SublogicL()


def barb_formula(subject: str, output: bool) -> Formula:
    return (DiaOut if output else DiaIn)(subject, TOP, TOP)
