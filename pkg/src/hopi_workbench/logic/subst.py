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

"""Capture-avoiding substitutions on formulas: ``A{b/a}``, ``A{Y/X}``, ``A{B/X}``."""

from __future__ import annotations

import dataclasses
from typing import Callable, Union

from ..process import UNUSED, Name, ProcVar, fresh_name, fresh_var
from .formulas import (
    BOT,
    DiaIn,
    DiaOut,
    BoxIn,
    Formula,
    FreshName,
    FreshVar,
    Hide,
    InAdjoint,
    InPrefix,
    Mu,
    Neq,
    NotFree,
    OutAdjoint,
    OutPrefix,
    PropVar,
    Reveal,
    WeakBoxIn,
    WeakIn,
    WeakOut,
)

_SUBJECT_NODES = (
    DiaIn,
    BoxIn,
    DiaOut,
    InPrefix,
    OutPrefix,
    WeakIn,
    WeakBoxIn,
    WeakOut,
    InAdjoint,
    OutAdjoint,
)


def map_children(a: Formula, fn: Callable[[Formula], Formula]) -> Formula:
    """Rebuild ``a`` with ``fn`` applied to every direct subformula (hints kept)."""
    changes = {
        f.name: fn(getattr(a, f.name))
        for f in dataclasses.fields(a)
        if isinstance(getattr(a, f.name), Formula)
    }
    return dataclasses.replace(a, **changes) if changes else a


def rename_formula_name(a: Formula, old: Name, new: Name) -> Formula:
    """``A{new/old}``; a ``(N x)`` binder equal to ``new`` is freshened."""
    if old == new or old not in a.free_names:
        return a
    if isinstance(a, FreshName):
        binder, body = a.binder, a.body
        if binder == new:
            renamed = fresh_name(body.free_names | {old, new}, binder)
            body = rename_formula_name(body, binder, renamed)
            binder = renamed
        return FreshName(binder, rename_formula_name(body, old, new))

    def swap(name: Name) -> Name:
        return new if name == old else name

    changes: dict = {}
    if isinstance(a, _SUBJECT_NODES):
        changes["subject"] = swap(a.subject)
    if isinstance(a, (Reveal, NotFree, Hide)):
        changes["name"] = swap(a.name)
    if isinstance(a, Neq):
        changes["left"], changes["right"] = swap(a.left), swap(a.right)
    result = dataclasses.replace(a, **changes) if changes else a
    return map_children(result, lambda child: rename_formula_name(child, old, new))


def rename_formula_var(a: Formula, old: ProcVar, new: ProcVar) -> Formula:
    """``A{new/old}`` on propositional variables."""
    return substitute_formula(a, old, PropVar(new))


def substitute_formula(a: Formula, var: ProcVar, b: Formula) -> Formula:
    """``A{B/X}``: replace the free occurrences of ``X`` by ``B``.

    Variable binders (``in a(Y).``, ``(NV Y)``, ``mu Y.``) that would capture
    a free variable of ``B`` are renamed. The variable slot of ``A \\ in a(X)``
    only follows variable-for-variable renamings.
    """
    if var not in a.free_vars:
        return a
    match a:
        case PropVar():
            return b
        case InPrefix(_, binder, body) | FreshVar(binder, body) | Mu(binder, body):
            if binder in b.free_vars:
                renamed = fresh_var(b.free_vars | body.free_vars | {var}, binder)
                body = substitute_formula(body, binder, PropVar(renamed))
                binder = renamed
            return dataclasses.replace(a, binder=binder, body=substitute_formula(body, var, b))
        case InAdjoint(body, _, slot):
            if slot == var and isinstance(b, PropVar):
                slot = b.var
            return dataclasses.replace(a, body=substitute_formula(body, var, b), var=slot)
    return map_children(a, lambda child: substitute_formula(child, var, b))


def formula_subst(
    a: Formula, old: Union[Name, ProcVar], new: Union[Name, ProcVar, Formula]
) -> Formula:
    """Dispatch on the substitution kind.

    A ``Formula`` replacement substitutes for a propositional variable;
    otherwise a lowercase ``old`` renames a name and an uppercase one
    renames a variable.
    """
    if isinstance(new, Formula):
        return substitute_formula(a, old, new)
    if old[:1].islower():
        return rename_formula_name(a, old, new)
    return rename_formula_var(a, old, new)


def unfold(m: Mu) -> Formula:
    """``A(mu X.A(X))``."""
    return substitute_formula(m.body, m.binder, m)


def approximant(m: Mu, i: int) -> Formula:
    """``A^i(F)``: ``F`` unfolded ``i`` times through the body of ``m``."""
    result: Formula = BOT
    for _ in range(i):
        result = substitute_formula(m.body, m.binder, result)
    return result


def alpha_normal(a: Formula) -> Formula:
    """``a`` with bound variables and ``(N x)`` binders relabelled by binding
    depth. Two formulas are equal up to renaming of bound variables exactly
    when their normal forms are equal; the labels are not valid tokens."""
    return _alpha_normal(a, 0)


def alpha_equal(a: Formula, b: Formula) -> bool:
    return a == b or alpha_normal(a) == alpha_normal(b)


def _alpha_normal(a: Formula, depth: int) -> Formula:
    match a:
        case InPrefix(_, binder, body) | FreshVar(binder, body) | Mu(binder, body):
            if binder not in body.free_vars:
                return dataclasses.replace(a, binder=UNUSED, body=_alpha_normal(body, depth + 1))
            label = f"_{depth}"
            body = rename_formula_var(body, binder, label)
            return dataclasses.replace(a, binder=label, body=_alpha_normal(body, depth + 1))
        case FreshName(binder, body):
            if binder not in body.free_names:
                return FreshName("_", _alpha_normal(body, depth + 1))
            label = f"_n{depth}"
            body = rename_formula_name(body, binder, label)
            return FreshName(label, _alpha_normal(body, depth + 1))
    return map_children(a, lambda child: _alpha_normal(child, depth))
