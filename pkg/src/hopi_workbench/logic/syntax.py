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

"""Concrete formula syntax.

Binding strength, loosest first: ``->``/``<->`` (right), ``or``, ``and``,
``|>`` (right), ``|``, the postfix adjoints ``\\ in a(X)``, ``\\ out a`` and
``/ a``, then every prefix form. Prefix forms take a prefix-level argument,
so ``mu X. 0 or <tau> X`` is ``(mu X. 0) or <tau> X``.

``!A`` is accepted as shorthand for ``not mu X. not (A | not X)``.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Optional

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from ..errors import DialectError, ParseError, PositivityError
from ..process import UNUSED, fresh_var
from ..process.syntax import parse_error
from .formulas import (
    BOT,
    TOP,
    ZERO,
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
    as_iff,
    as_implication,
    bang,
    iff,
    implies,
    in_dialect,
    or_,
    positive_in,
)

logger = logging.getLogger(__name__)

FORMULA_GRAMMAR = r"""
?start: imp

?imp: disj "->" imp            -> implication
    | disj "<->" imp           -> equivalence
    | disj

?disj: disj "or" conj          -> disjunction
     | conj

?conj: conj "and" guar         -> conjunction
     | guar

?guar: comp "|>" guar          -> guarantee
     | comp

?comp: comp "|" post           -> composition
     | post

?post: post "\\" "in" NAME "(" VAR ")"   -> in_adjoint
     | post "\\" "out" NAME              -> out_adjoint
     | post "/" NAME                     -> hide
     | unary

?unary: "not" unary                                    -> negation
      | "!" unary                                      -> bang
      | "<" "tau" ">" unary                            -> dia_tau
      | "<" NAME "<" imp ">" ">" unary                 -> dia_in
      | "<" NAME "[" imp "]" ">" unary                 -> box_in
      | "<" "'" NAME "<" imp ">" ">" unary             -> dia_out
      | "<" "<" "eps" ">" ">" unary                    -> weak_eps
      | "<" "<" NAME "<" imp ">" ">" ">" unary         -> weak_in
      | "<" "<" NAME "[" imp "]" ">" ">" ">"? unary    -> weak_box_in
      | "<" "<" "'" NAME "<" imp ">" ">" ">" unary     -> weak_out
      | "in" NAME "(" VAR ")" "." unary                -> in_prefix
      | "in" NAME "." unary                            -> in_prefix_unused
      | "out" NAME "<" imp ">" "." unary               -> out_prefix
      | NAME "@" unary                                 -> reveal
      | "(" "N" NAME ")" unary                         -> fresh_name
      | "(" "NV" VAR ")" unary                         -> fresh_var
      | "(" "-" NAME ")" unary                         -> not_free
      | "(" "~" "-" ")" unary                          -> no_bound
      | "mu" VAR "." unary                             -> mu
      | atom

?atom: "T"                 -> top
     | "F"                 -> bot
     | "0"                 -> zero
     | VAR                 -> prop_var
     | NAME "!=" NAME      -> neq
     | "(" imp ")"

NAME: /[a-z][A-Za-z0-9_']*/
VAR: /[A-Z][A-Za-z0-9_']*/

%import common.WS
%ignore WS
"""


def _caret(text: str, line: int, column: int) -> str:
    lines = text.split("\n")
    if not 1 <= line <= len(lines):
        return ""
    return f"{lines[line - 1]}\n{' ' * (column - 1)}^\n"


@v_args(inline=True)
class _ToFormula(Transformer):
    def __init__(self, text: str, source: str):
        super().__init__()
        self.text = text
        self.source = source

    def implication(self, left, right):
        return implies(left, right)

    def equivalence(self, left, right):
        return iff(left, right)

    def disjunction(self, left, right):
        return or_(left, right)

    def conjunction(self, left, right):
        return And(left, right)

    def guarantee(self, left, right):
        return Guarantee(left, right)

    def composition(self, left, right):
        return Par(left, right)

    def in_adjoint(self, body, subject, var):
        return InAdjoint(body, str(subject), str(var))

    def out_adjoint(self, body, subject):
        return OutAdjoint(body, str(subject))

    def hide(self, body, name):
        return Hide(body, str(name))

    def negation(self, body):
        return Not(body)

    def bang(self, body):
        return bang(body)

    def dia_tau(self, body):
        return DiaTau(body)

    def dia_in(self, subject, payload, body):
        return DiaIn(str(subject), payload, body)

    def box_in(self, subject, payload, body):
        return BoxIn(str(subject), payload, body)

    def dia_out(self, subject, payload, body):
        return DiaOut(str(subject), payload, body)

    def weak_eps(self, body):
        return WeakEps(body)

    def weak_in(self, subject, payload, body):
        return WeakIn(str(subject), payload, body)

    def weak_box_in(self, subject, payload, body):
        return WeakBoxIn(str(subject), payload, body)

    def weak_out(self, subject, payload, body):
        return WeakOut(str(subject), payload, body)

    def in_prefix(self, subject, binder, body):
        return InPrefix(str(subject), str(binder), body)

    def in_prefix_unused(self, subject, body):
        return InPrefix(str(subject), UNUSED, body)

    def out_prefix(self, subject, payload, body):
        return OutPrefix(str(subject), payload, body)

    def reveal(self, name, body):
        return Reveal(str(name), body)

    def fresh_name(self, binder, body):
        return FreshName(str(binder), body)

    def fresh_var(self, binder, body):
        return FreshVar(str(binder), body)

    def not_free(self, name, body):
        return NotFree(str(name), body)

    def no_bound(self, body):
        return NoBound(body)

    def mu(self, var, body):
        if not positive_in(str(var), body):
            raise PositivityError(
                f"'{var}' occurs negatively in the body of 'mu {var}'",
                source=self.source,
                line=var.line,
                column=var.column,
                context=_caret(self.text, var.line, var.column),
            )
        return Mu(str(var), body)

    def top(self):
        return TOP

    def bot(self):
        return BOT

    def zero(self):
        return ZERO

    def prop_var(self, name):
        return PropVar(str(name))

    def neq(self, left, right):
        return Neq(str(left), str(right))


@lru_cache(maxsize=None)
def _parser() -> Lark:
    return Lark(FORMULA_GRAMMAR, parser="lalr")


def parse_formula(
    text: str, *, source: str = "<arg>", dialect: Optional[Dialect] = None
) -> Formula:
    """Parse the concrete formula grammar, optionally restricted to ``dialect``."""
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as exc:
        raise parse_error(text, exc, source, "formula") from None
    try:
        formula = _ToFormula(text, source).transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, ParseError):
            raise exc.orig_exc from None
        raise
    if dialect is not None and not in_dialect(formula, dialect):
        raise DialectError(f"{source}: formula is not in the {dialect.value} dialect")
    return formula


# ---- printer -----------------------------------------------------------------

_IMP, _OR, _AND, _GUAR, _PAR, _POST, _UNARY, _ATOM = range(1, 9)


def _bang_operand(a: Formula) -> Optional[Formula]:
    match a:
        case Not(Mu(x, Not(Par(inner, Not(PropVar(y)))))) if x == y:
            if x not in inner.free_vars and x == fresh_var(inner.free_vars, "X"):
                return inner
    return None


def _or_operands(a: Formula) -> Optional[tuple[Formula, Formula]]:
    match a:
        case Not(And(Not(left), Not(right))):
            return left, right
    return None


def _level(a: Formula) -> int:
    match a:
        case Not(hint="imp") if as_implication(a):
            return _IMP
        case Not(hint="or") if _or_operands(a):
            return _OR
        case And(hint="iff") if as_iff(a):
            return _IMP
        case And():
            return _AND
        case Guarantee():
            return _GUAR
        case Par():
            return _PAR
        case InAdjoint() | OutAdjoint() | Hide():
            return _POST
        case Neq() | PropVar() | Zero() | Top() | Bot():
            return _ATOM
    return _UNARY


def show_formula(a: Formula) -> str:
    """Print ``a`` in the concrete grammar with minimal parentheses."""
    return _show(a, 0)


def _show(a: Formula, needed: int) -> str:
    text = _render(a)
    return f"({text})" if _level(a) < needed else text


def _render(a: Formula) -> str:
    level = _level(a)
    if level == _IMP and isinstance(a, Not):
        left, right = as_implication(a)
        return f"{_show(left, _OR)} -> {_show(right, _IMP)}"
    if level == _IMP:
        left, right = as_iff(a)
        return f"{_show(left, _OR)} <-> {_show(right, _IMP)}"
    if level == _OR:
        left, right = _or_operands(a)
        return f"{_show(left, _OR)} or {_show(right, _AND)}"
    match a:
        case Top():
            return "T"
        case Bot():
            return "F"
        case Zero():
            return "0"
        case PropVar(var):
            return var
        case Neq(left, right):
            return f"{left} != {right}"
        case And(left, right):
            return f"{_show(left, _AND)} and {_show(right, _GUAR)}"
        case Guarantee(left, right):
            return f"{_show(left, _PAR)} |> {_show(right, _GUAR)}"
        case Par(left, right):
            return f"{_show(left, _PAR)} | {_show(right, _POST)}"
        case InAdjoint(body, subject, var):
            return f"{_show(body, _POST)} \\ in {subject}({var})"
        case OutAdjoint(body, subject):
            return f"{_show(body, _POST)} \\ out {subject}"
        case Hide(body, name):
            return f"{_show(body, _POST)} / {name}"
        case Not(body):
            if a.hint == "bang" and (inner := _bang_operand(a)) is not None:
                return f"!{_show(inner, _UNARY)}"
            return f"not {_show(body, _UNARY)}"
        case DiaTau(body):
            return f"<tau>{_show(body, _UNARY)}"
        case DiaIn(subject, payload, body):
            return f"<{subject}<{_show(payload, 0)}>>{_show(body, _UNARY)}"
        case BoxIn(subject, payload, body):
            return f"<{subject}[{_show(payload, 0)}]>{_show(body, _UNARY)}"
        case DiaOut(subject, payload, body):
            return f"<'{subject}<{_show(payload, 0)}>>{_show(body, _UNARY)}"
        case WeakEps(body):
            return f"<<eps>>{_show(body, _UNARY)}"
        case WeakIn(subject, payload, body):
            return f"<<{subject}<{_show(payload, 0)}>>>{_show(body, _UNARY)}"
        case WeakBoxIn(subject, payload, body):
            return f"<<{subject}[{_show(payload, 0)}]>>>{_show(body, _UNARY)}"
        case WeakOut(subject, payload, body):
            return f"<<'{subject}<{_show(payload, 0)}>>>{_show(body, _UNARY)}"
        case InPrefix(subject, binder, body):
            head = subject if binder == UNUSED else f"{subject}({binder})"
            return f"in {head}.{_show(body, _UNARY)}"
        case OutPrefix(subject, payload, body):
            return f"out {subject}<{_show(payload, 0)}>.{_show(body, _UNARY)}"
        case Reveal(name, body):
            return f"{name} @ {_show(body, _UNARY)}"
        case FreshName(binder, body):
            return f"(N {binder}){_show(body, _UNARY)}"
        case FreshVar(binder, body):
            return f"(NV {binder}){_show(body, _UNARY)}"
        case NotFree(name, body):
            return f"(- {name}){_show(body, _UNARY)}"
        case NoBound(body):
            return f"(~-){_show(body, _UNARY)}"
        case Mu(binder, body):
            return f"mu {binder}. {_show(body, _UNARY)}"
    raise TypeError(f"not a formula: {a!r}")
