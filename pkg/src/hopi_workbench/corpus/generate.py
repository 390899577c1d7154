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

"""Seeded random processes and formulas for property tests and sampling."""

from __future__ import annotations

import logging
import random
from typing import Literal, Optional, Sequence, Union

from ..errors import InputError
from ..logic import (
    BOT,
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
    WeakBoxIn,
    WeakEps,
    WeakIn,
    WeakOut,
)
from ..process import NIL, UNUSED, Input, Output, Process, Res, Var, fresh_var
from ..process import Par as PPar

logger = logging.getLogger(__name__)

NAMES = ("a", "b", "c")
VARIABLES = ("X", "Y")

Kind = Literal["process", "formula"]

_UNARY = (
    "not",
    "reveal",
    "hide",
    "not-free",
    "no-bound",
    "fresh-name",
    "fresh-var",
    "in-prefix",
    "in-adjoint",
    "out-adjoint",
)
_BINARY = ("and", "par", "guarantee", "out-prefix")


class TermGenerator:
    """Random terms from one ``random.Random`` stream.

    Sizes count constructors, as ``Process.size`` and ``Formula.size`` do.
    The ``name``, ``var``, ``formula`` and ``label`` methods make an instance
    usable wherever rule samplers need a source of small terms.
    """

    def __init__(
        self,
        seed: int = 0,
        *,
        names: Sequence[str] = NAMES,
        variables: Sequence[str] = VARIABLES,
        dialect: Dialect = Dialect.SL,
        formula_size: int = 3,
    ):
        self.random = random.Random(seed)
        self.names = tuple(names)
        self.variables = tuple(variables)
        self.dialect = dialect
        self.formula_size = formula_size

    # -- processes --

    def process(
        self, max_size: int, *, closed: bool = True, variables: Optional[Sequence[str]] = None
    ) -> Process:
        """A process with at most ``max_size`` constructors.

        Closed processes only use variables bound by an enclosing input.
        """
        if max_size < 1:
            raise InputError("max_size must be at least 1")
        pool = self.variables if variables is None else tuple(variables)
        free = () if closed else pool
        return self._process(self.random.randint(1, max_size), pool, free)

    def _process(self, size: int, pool: tuple[str, ...], scope: tuple[str, ...]) -> Process:
        rnd = self.random
        if size == 1:
            if scope and rnd.random() < 0.5:
                return Var(rnd.choice(scope))
            return NIL
        shapes = ["input", "res"] + (["output", "par"] if size >= 3 else [])
        shape = rnd.choice(shapes)
        if shape == "input":
            binder = rnd.choice(pool) if pool else UNUSED
            inner = scope if binder in scope or binder == UNUSED else scope + (binder,)
            body = self._process(size - 1, pool, inner)
            if binder not in body.free_vars:
                binder = UNUSED
            return Input(rnd.choice(self.names), binder, body)
        if shape == "res":
            return Res(rnd.choice(self.names), self._process(size - 1, pool, scope))
        left = rnd.randint(1, size - 2)
        first = self._process(left, pool, scope)
        second = self._process(size - 1 - left, pool, scope)
        if shape == "par":
            return PPar(first, second)
        return Output(rnd.choice(self.names), first, second)

    # -- formulas --

    def formula(
        self, max_size: Optional[int] = None, *, dialect: Optional[Dialect] = None
    ) -> Formula:
        """A formula of ``dialect`` with at most ``max_size`` constructors.

        Fixpoint variables only occur under an even number of negations.
        """
        size = self.formula_size if max_size is None else max_size
        if size < 1:
            raise InputError("max_size must be at least 1")
        dialect = self.dialect if dialect is None else dialect
        return self._formula(self.random.randint(1, size), dialect, (), ())

    def _formula(
        self, size: int, dialect: Dialect, positive: tuple[str, ...], negative: tuple[str, ...]
    ) -> Formula:
        rnd = self.random
        if size == 1:
            return self._leaf(positive)
        options = list(_UNARY) + ["modal-unary"]
        if dialect is Dialect.MUSL:
            options.append("mu")
        if size >= 3:
            options += list(_BINARY) + ["modal-binary"]
        shape = rnd.choice(options)

        def sub(n: int, flip: bool = False) -> Formula:
            if flip:
                return self._formula(n, dialect, negative, positive)
            return self._formula(n, dialect, positive, negative)

        a = rnd.choice(self.names)
        match shape:
            case "not":
                return Not(sub(size - 1, flip=True))
            case "reveal":
                return Reveal(a, sub(size - 1))
            case "hide":
                return Hide(sub(size - 1), a)
            case "not-free":
                return NotFree(a, sub(size - 1))
            case "no-bound":
                return NoBound(sub(size - 1))
            case "fresh-name":
                return FreshName(rnd.choice(self.names), sub(size - 1))
            case "fresh-var":
                return FreshVar(rnd.choice(self.variables), sub(size - 1))
            case "in-prefix":
                return InPrefix(a, rnd.choice(self.variables), sub(size - 1))
            case "in-adjoint":
                return InAdjoint(sub(size - 1), a, rnd.choice(self.variables))
            case "out-adjoint":
                return OutAdjoint(sub(size - 1), a)
            case "modal-unary":
                if dialect is Dialect.WL:
                    return WeakEps(sub(size - 1))
                return DiaTau(sub(size - 1))
            case "mu":
                binder = fresh_var(set(self.variables) | set(positive) | set(negative), "Z")
                return Mu(binder, self._formula(size - 1, dialect, positive + (binder,), negative))
        left = rnd.randint(1, size - 2)
        first, second = sub(left), sub(size - 1 - left)
        match shape:
            case "and":
                return And(first, second)
            case "par":
                return Par(first, second)
            case "guarantee":
                return Guarantee(first, second)
            case "out-prefix":
                return OutPrefix(a, first, second)
        strong = (DiaIn, BoxIn, DiaOut)
        weak = (WeakIn, WeakBoxIn, WeakOut)
        cls = rnd.choice(weak if dialect is Dialect.WL else strong)
        return cls(a, first, second)

    def _leaf(self, positive: tuple[str, ...]) -> Formula:
        rnd = self.random
        choice = rnd.randrange(5)
        if choice == 0:
            return TOP
        if choice == 1:
            return BOT
        if choice == 2:
            return ZERO
        if choice == 3:
            return Neq(rnd.choice(self.names), rnd.choice(self.names))
        return PropVar(rnd.choice(self.variables + positive))

    # -- small pieces --

    def name(self) -> str:
        return self.random.choice(self.names)

    def var(self) -> str:
        return self.random.choice(self.variables)

    def names_list(self, max_length: int = 2) -> tuple[str, ...]:
        count = self.random.randint(0, min(max_length, len(self.names)))
        return tuple(self.random.sample(self.names, count))

    def label(self, weak: bool) -> Formula:
        """A modality over ``T``, as used by the label metavariable of rules."""
        rnd = self.random
        payload = self._leaf(())
        a = self.name()
        if weak:
            return rnd.choice(
                [
                    WeakEps(TOP),
                    WeakIn(a, payload, TOP),
                    WeakBoxIn(a, payload, TOP),
                    WeakOut(a, payload, TOP),
                ]
            )
        return rnd.choice(
            [DiaTau(TOP), DiaIn(a, payload, TOP), BoxIn(a, payload, TOP), DiaOut(a, payload, TOP)]
        )


def generate(
    seed: int,
    kind: Kind,
    max_constructors: int,
    *,
    dialect: Dialect = Dialect.SL,
    closed: bool = True,
) -> Union[Process, Formula]:
    """One seeded process or formula; the same arguments give the same term."""
    if max_constructors < 1:
        raise InputError("max_constructors must be at least 1")
    generator = TermGenerator(seed, dialect=dialect)
    if kind == "process":
        return generator.process(max_constructors, closed=closed)
    if kind == "formula":
        return generator.formula(max_constructors)
    raise InputError(f"unknown kind '{kind}'")


def generate_many(
    seed: int,
    kind: Kind,
    max_constructors: int,
    count: int,
    *,
    dialect: Dialect = Dialect.SL,
    closed: bool = True,
) -> list[Union[Process, Formula]]:
    """``count`` terms from a single stream seeded with ``seed``."""
    generator = TermGenerator(seed, dialect=dialect)
    if kind == "process":
        return [generator.process(max_constructors, closed=closed) for _ in range(count)]
    return [generator.formula(max_constructors) for _ in range(count)]
