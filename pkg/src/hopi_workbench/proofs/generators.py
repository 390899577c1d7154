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

"""Proof generators for structural congruence and for (weak) transitions.

Both work on the direct embedding of processes (restriction as ``a @``,
input as ``in a(X).``). Congruence proofs rewrite both sides to a standard
form: restrictions outermost, components sorted and nested to the right,
garbage restrictions dropped. Restricted names are renamed apart first and
to canonical labels last, each renaming going through the revelation alpha
axiom, or through the alpha-variant discharge of the nearest closed process
for a restriction under an input whose variable occurs. Transition proofs
replay a derivation tree of the operational semantics with one axiom per
rule of the tree, then respell the conclusion as requested through a
congruence proof where one exists.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from ..errors import GenerationError, InputError, SideConditionError
from ..logic import (
    ZERO,
    Dialect,
    Formula,
    InPrefix,
    NotFree,
    OutPrefix,
    Par,
    PropVar,
    Reveal,
    Zero,
    action_formula,
    alpha_equal,
    alpha_normal,
    as_iff,
    as_implication,
    as_process,
    embed,
    iff,
    implies,
    rename_formula_name,
    show_formula,
    weak_action_formula,
)
from ..lts import Action, In, Out, Tau
from ..process import (
    UNUSED,
    Input,
    Output,
    Process,
    Res,
    canonical_key,
    congruent,
    fresh_name,
    fresh_var,
    freshen_bound,
    res_of,
    substitute,
)
from ..process import Par as PPar
from .catalogue import instantiate_axiom, not_free, relabel, reveal_chain
from .kernel import MP, Axiom, Fresh, Premise, Proof, Rule, Sequent, Step, Taut

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 32
MAX_RELABELLED_BINDERS = 6

Path = tuple[str, ...]


# ---- proof building ----------------------------------------------------------


@dataclass(frozen=True)
class _Eq:
    """``left <-> right`` as two hypothesis-free implication steps; both are
    ``None`` when the sides coincide up to bound renaming."""

    left: Formula
    right: Formula
    fwd: Optional[int] = None
    bwd: Optional[int] = None

    @property
    def identity(self) -> bool:
        return self.fwd is None

    def reverse(self) -> "_Eq":
        return _Eq(self.right, self.left, self.bwd, self.fwd)


def _threads(parts: Sequence[Formula]) -> Formula:
    if not parts:
        return ZERO
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = Par(part, result)
    return result


def _at(a: Formula, path: Path) -> Formula:
    for field in path:
        a = getattr(a, field)
    return a


def _replace_at(a: Formula, path: Path, new: Formula) -> Formula:
    if not path:
        return new
    field = path[0]
    return dataclasses.replace(a, **{field: _replace_at(getattr(a, field), path[1:], new)})


def _thread_key(t: Formula) -> str:
    return show_formula(alpha_normal(t))


def _process_names(a: Formula) -> frozenset[str]:
    process = as_process(a)
    if process is None:
        raise GenerationError(f"'{show_formula(a)}' does not spell a process")
    return process.free_names


class _Prover:
    """Accumulates hypothesis-free lemma steps."""

    def __init__(self):
        self.steps: list[Step] = []

    def add(self, formula: Formula, why) -> int:
        self.steps.append(Step(formula, why))
        return len(self.steps)

    def formula(self, step: int) -> Formula:
        return self.steps[step - 1].formula

    def consequent(self, step: int) -> Formula:
        pair = as_implication(self.formula(step))
        assert pair is not None
        return pair[1]

    def axiom(self, schema: str, **bindings) -> int:
        try:
            formula = instantiate_axiom(schema, bindings)
        except SideConditionError as error:
            raise GenerationError(str(error)) from None
        return self.add(formula, Axiom(schema, bindings))

    def taut(self, formula: Formula, *cited: Optional[int]) -> int:
        return self.add(formula, Taut(tuple(c for c in cited if c is not None)))

    def fresh(self, formula: Formula) -> int:
        return self.add(formula, Fresh())

    def rule(self, rule: str, formula: Formula, *premises: int) -> int:
        return self.add(formula, Rule(rule, premises))

    def detach(self, step: int) -> int:
        """``G -> (X -> Y)`` with a syntactic side condition ``G`` becomes ``X -> Y``."""
        guard, rest = as_implication(self.formula(step))
        return self.taut(rest, step, self.fresh(guard))

    def chain(self, source: Formula, *steps: int) -> int:
        """``source -> Z`` from a chain of implications ending in ``Z``."""
        return self.taut(implies(source, self.consequent(steps[-1])), *steps)

    # -- equivalences --

    def split(self, step: int) -> _Eq:
        left, right = as_iff(self.formula(step))
        return _Eq(
            left, right, self.taut(implies(left, right), step), self.taut(implies(right, left), step)
        )

    def axiom_eq(self, schema: str, **bindings) -> _Eq:
        return self.split(self.axiom(schema, **bindings))

    def fresh_eq(self, name: str, body: Formula) -> _Eq:
        """``(- name)body <-> body``: discharged on closed processes, derived
        through the ``(- a)`` laws when ``body`` has free variables."""
        if not_free(name, body):
            return self.split(self.fresh(iff(NotFree(name, body), body)))
        if as_process(body) is not None and name in _process_names(body):
            raise GenerationError(f"name '{name}' is free in '{show_formula(body)}'")
        match body:
            case Zero():
                return self.axiom_eq("not-free-nil", a=name)
            case PropVar(var):
                return self.axiom_eq("not-free-var", a=name, X=var)
        chain = _Chain(self, NotFree(name, body))
        match body:
            case Par(left, right):
                chain.apply((), self.axiom_eq("not-free-par", a=name, A=left, B=right).reverse())
                chain.apply(("left",), self.fresh_eq(name, left))
                chain.apply(("right",), self.fresh_eq(name, right))
                return chain.eq
            case InPrefix(subject, binder, inner):
                if binder == UNUSED:
                    binder = fresh_var(inner.free_vars, "U")
                law = self.detach(
                    self.axiom("not-free-in", a=name, b=subject, X=binder, A=inner)
                )
                chain.apply((), self.split(law))
                chain.apply(("body",), self.fresh_eq(name, inner))
                return chain.eq
            case OutPrefix(subject, payload, cont):
                law = self.detach(
                    self.axiom("not-free-out", a=name, b=subject, A=cont, B=payload)
                )
                chain.apply((), self.split(law))
                chain.apply(("payload",), self.fresh_eq(name, payload))
                chain.apply(("body",), self.fresh_eq(name, cont))
                return chain.eq
            case Reveal(binder, inner) if binder != name:
                law = self.detach(self.axiom("not-free-res", a=name, b=binder, A=inner))
                chain.apply((), self.split(law))
                chain.apply(("body",), self.fresh_eq(name, inner))
                return chain.eq
        raise GenerationError(
            f"scope extrusion of '{name}' past '{show_formula(body)}' needs a closed process"
        )

    def rename_eq(self, a: Reveal, new: str) -> _Eq:
        """``a @ A <-> new @ A{new/a}``, one ``reveal-alpha`` in each direction."""
        fwd = self._alpha(a, new)
        renamed = self.consequent(fwd)
        return _Eq(a, renamed, fwd, self._alpha(renamed, a.name))

    def _alpha(self, a: Reveal, new: str) -> int:
        intro = self.axiom("reveal-alpha", a=a.name, b=new, A=a.body)
        quantified = self.consequent(intro)
        if not not_free(new, quantified.body):
            raise GenerationError(
                f"cannot rename the restriction on '{a.name}' in '{show_formula(a)}', "
                "which is not a closed process"
            )
        drop = self.fresh(iff(quantified, quantified.body))
        return self.taut(implies(a, quantified.body), intro, drop)

    def compose(self, first: _Eq, second: _Eq) -> _Eq:
        if first.identity:
            return _Eq(first.left, second.right, second.fwd, second.bwd)
        if second.identity:
            return _Eq(first.left, second.right, first.fwd, first.bwd)
        return _Eq(
            first.left,
            second.right,
            self.taut(implies(first.left, second.right), first.fwd, second.fwd),
            self.taut(implies(second.right, first.left), second.bwd, first.bwd),
        )

    def implication(self, eq: _Eq) -> int:
        if eq.identity:
            return self.taut(implies(eq.left, eq.right))
        return eq.fwd

    def lift(self, outer: Formula, path: Path, eq: _Eq) -> _Eq:
        """``eq`` applied at ``path`` inside ``outer``."""
        if not path:
            if not alpha_equal(outer, eq.left):
                raise GenerationError(
                    f"internal rewrite mismatch at '{show_formula(outer)}'"
                )
            return eq
        field = path[0]
        inner = self.lift(getattr(outer, field), path[1:], eq)
        if inner.identity:
            return _Eq(outer, outer)
        new = dataclasses.replace(outer, **{field: inner.right})
        return _Eq(
            outer,
            new,
            self.lift_step(outer, field, inner.right, inner.fwd),
            self.lift_step(new, field, inner.left, inner.bwd),
        )

    def lift_step(self, context: Formula, field: str, target: Formula, step: int) -> int:
        """From ``x -> target`` derive ``C[x] -> C[target]``, ``C[x] = context``."""
        before = context
        after = dataclasses.replace(context, **{field: target})
        current = getattr(context, field)
        if isinstance(context, Par) and field == "left":
            return self.rule("par-mono", implies(before, after), step)
        if isinstance(context, Par):
            other = context.left
            swap = self.implication(self.axiom_eq("par-comm", A=other, B=current))
            framed = self.rule(
                "par-mono", implies(Par(current, other), Par(target, other)), step
            )
            back = self.implication(self.axiom_eq("par-comm", A=target, B=other))
            return self.taut(implies(before, after), swap, framed, back)
        if isinstance(context, Reveal):
            rule = "reveal-mono"
        elif isinstance(context, InPrefix):
            rule = "in-mono"
        elif isinstance(context, OutPrefix):
            rule = "out-mono" if field == "body" else "out-payload-mono"
        elif isinstance(context, NotFree):
            rule = "not-free-mono"
        else:
            raise GenerationError(f"cannot rewrite inside '{show_formula(context)}'")
        reflexive = self.taut(implies(before, before))
        return self.rule(rule, implies(before, after), reflexive, step)

    # -- standard forms --

    def normal(self, a: Formula) -> _Eq:
        return self.prenex(a)[0]

    def prenex(self, a: Formula) -> tuple[_Eq, list[str], list[Formula]]:
        """Rewrite a process formula to ``b1 @ ... bn @ (t1 | (t2 | ...))``
        and return the restrictions and components alongside."""
        chain = _Chain(self, a)
        match a:
            case Zero():
                return chain.eq, [], []
            case PropVar():
                return chain.eq, [], [a]
            case InPrefix():
                chain.apply(("body",), self.normal(a.body))
                return chain.eq, [], [chain.current]
            case OutPrefix():
                chain.apply(("payload",), self.normal(a.payload))
                chain.apply(("body",), self.normal(a.body))
                return chain.eq, [], [chain.current]
            case Reveal(name, body):
                inner, binders, threads = self.prenex(body)
                chain.apply(("body",), inner)
                if name in binders:
                    raise GenerationError(
                        f"restriction on '{name}' shadows another restriction of the same name"
                    )
                if not any(name in _process_names(t) for t in threads):
                    self._drop(chain, name, binders, threads)
                    return chain.eq, binders, threads
                position = 0
                while position < len(binders) and binders[position] < name:
                    self._swap_binders(chain, ("body",) * position)
                    position += 1
                return chain.eq, binders[:position] + [name] + binders[position:], threads
            case Par(left, right):
                return self._par(chain, left, right)
        raise GenerationError(f"'{show_formula(a)}' does not spell a process")

    def _par(self, chain: "_Chain", left: Formula, right: Formula):
        left_eq, left_binders, left_threads = self.prenex(left)
        right_eq, right_binders, right_threads = self.prenex(right)
        chain.apply(("left",), left_eq)
        chain.apply(("right",), right_eq)
        clash = set(left_binders) & set(right_binders)
        if clash:
            raise GenerationError(
                f"restriction on '{sorted(clash)[0]}' occurs in two components"
            )
        for index in range(len(left_binders)):
            path = ("body",) * index
            chain.apply(path, self._extrude_left(chain.at(path)))
        for index in range(len(right_binders)):
            path = ("body",) * (len(left_binders) + index)
            chain.apply(path, self._extrude_right(chain.at(path)))
        binders = left_binders + right_binders
        for limit in range(len(binders) - 1, 0, -1):
            for k in range(limit):
                if binders[k] > binders[k + 1]:
                    self._swap_binders(chain, ("body",) * k)
                    binders[k], binders[k + 1] = binders[k + 1], binders[k]
        threads = self._merge(chain, ("body",) * len(binders), left_threads, right_threads)
        return chain.eq, binders, threads

    def _swap_binders(self, chain: "_Chain", path: Path) -> None:
        outer = chain.at(path)
        chain.apply(
            path, self.axiom_eq("res-swap", a=outer.name, b=outer.body.name, A=outer.body.body)
        )

    def _extrude_right(self, a: Par) -> _Eq:
        """``X | b @ Z <-> b @ (X | Z)``."""
        other, name, body = a.left, a.right.name, a.right.body
        chain = _Chain(self, a)
        chain.apply(("left",), self.fresh_eq(name, other).reverse())
        chain.apply((), self.axiom_eq("scope-ext", a=name, A=other, B=body).reverse())
        chain.apply(("body", "left"), self.fresh_eq(name, other))
        return chain.eq

    def _extrude_left(self, a: Par) -> _Eq:
        """``b @ X | Y <-> b @ (X | Y)``."""
        chain = _Chain(self, a)
        chain.apply((), self.axiom_eq("par-comm", A=a.left, B=a.right))
        chain.apply((), self._extrude_right(chain.current))
        inner = chain.current.body
        chain.apply(("body",), self.axiom_eq("par-comm", A=inner.left, B=inner.right))
        return chain.eq

    def _drop(self, chain: "_Chain", name: str, binders: list[str], threads: list[Formula]) -> None:
        for index in range(len(binders)):
            self._swap_binders(chain, ("body",) * index)
        path = ("body",) * len(binders)
        chain.apply(path, self._garbage(chain.at(path)))

    def _garbage(self, a: Reveal) -> _Eq:
        """``a @ T <-> T`` for ``a`` not free in ``T``."""
        name, body = a.name, a.body
        if isinstance(body, Zero):
            return self.axiom_eq("res-nil", a=name)
        chain = _Chain(self, a)
        chain.apply(("body",), self.axiom_eq("par-unit", A=body).reverse())
        chain.apply(("body", "left"), self.fresh_eq(name, body).reverse())
        chain.apply((), self.axiom_eq("scope-ext", a=name, A=body, B=ZERO))
        chain.apply(("right",), self.axiom_eq("res-nil", a=name))
        chain.apply(("left",), self.fresh_eq(name, body))
        chain.apply((), self.axiom_eq("par-unit", A=body))
        return chain.eq

    def _merge(
        self, chain: "_Chain", path: Path, left: list[Formula], right: list[Formula]
    ) -> list[Formula]:
        if not right:
            chain.apply(path, self.axiom_eq("par-unit", A=_threads(left)))
            return left
        if not left:
            chain.apply(path, self.axiom_eq("par-comm", A=ZERO, B=_threads(right)))
            chain.apply(path, self.axiom_eq("par-unit", A=_threads(right)))
            return right
        for index in range(len(left) - 1):
            here = path + ("right",) * index
            outer = chain.at(here)
            chain.apply(
                here,
                self.axiom_eq("par-assoc", A=outer.left.left, B=outer.left.right, C=outer.right),
            )
        threads = left + right
        for limit in range(len(threads) - 1, 0, -1):
            for k in range(limit):
                if _thread_key(threads[k]) > _thread_key(threads[k + 1]):
                    self._swap_threads(chain, path + ("right",) * k, last=k + 1 == len(threads) - 1)
                    threads[k], threads[k + 1] = threads[k + 1], threads[k]
        return threads

    def _swap_threads(self, chain: "_Chain", path: Path, *, last: bool) -> None:
        outer = chain.at(path)
        if last:
            chain.apply(path, self.axiom_eq("par-comm", A=outer.left, B=outer.right))
            return
        first, second, rest = outer.left, outer.right.left, outer.right.right
        chain.apply(path, self.axiom_eq("par-assoc", A=first, B=second, C=rest).reverse())
        chain.apply(path + ("left",), self.axiom_eq("par-comm", A=first, B=second))
        chain.apply(path, self.axiom_eq("par-assoc", A=second, B=first, C=rest))

    def equivalence(self, left: Formula, right: Formula) -> _Eq:
        """``left <-> right`` through the common standard form."""
        if alpha_equal(left, right):
            return _Eq(left, right)
        mark = len(self.steps)
        try:
            to_standard, from_standard = self.normal(left), self.normal(right)
            if alpha_equal(to_standard.right, from_standard.right):
                return self.compose(to_standard, from_standard.reverse())
        except GenerationError as error:
            logger.debug("restricted names need renaming: %s", error)
        del self.steps[mark:]
        taken = set(left.free_names | right.free_names)
        prefix = _label_prefix(taken)
        to_standard = self.standard(left, taken, prefix)
        from_standard = self.standard(right, taken, prefix)
        if not alpha_equal(to_standard.right, from_standard.right):
            raise GenerationError(
                f"the standard forms '{show_formula(to_standard.right)}' and "
                f"'{show_formula(from_standard.right)}' differ"
            )
        return self.compose(to_standard, from_standard.reverse())

    def standard(self, a: Formula, taken: set[str], prefix: str) -> _Eq:
        """``a`` rewritten to its standard form with canonically labelled restrictions."""
        chain = _Chain(self, a)
        chain.apply((), self.apart(a, taken))
        chain.apply((), self.normal(chain.current))
        _, labels = _Labeller(prefix).level(chain.current, 0)
        chain.apply((), self.relabel(chain.current, labels))
        chain.apply((), self.normal(chain.current))
        return chain.eq

    def apart(self, a: Formula, taken: set[str]) -> _Eq:
        """Rename restrictions apart from each other and from the free names."""
        chain = _Chain(self, a)
        used = set(_process_names(a))
        for path in list(_reveal_paths(a)):
            here = chain.at(path)
            if here.name in used:
                new = fresh_name(taken | used, here.name)
                taken.add(new)
                self.rename_at(chain, path, new)
            used.add(chain.at(path).name)
        return chain.eq

    def rename_at(self, chain: "_Chain", path: Path, new: str) -> None:
        """Rename the restriction at ``path``. Under an input whose variable
        occurs, the renaming is taken at the nearest closed enclosing process."""
        here = chain.at(path)
        if not here.free_vars:
            chain.apply(path, self.rename_eq(here, new))
            return
        anchor = path
        while anchor and chain.at(anchor).free_vars:
            anchor = anchor[:-1]
        outer = chain.at(anchor)
        if outer.free_vars:
            raise GenerationError(f"'{show_formula(outer)}' does not spell a closed process")
        moved = Reveal(new, rename_formula_name(here.body, here.name, new))
        renamed = _replace_at(outer, path[len(anchor):], moved)
        chain.apply(anchor, self.split(self.fresh(iff(outer, renamed))))

    def relabel(self, a: Formula, labels: dict[str, str]) -> _Eq:
        chain = _Chain(self, a)
        for path in list(_reveal_paths(a)):
            here = chain.at(path)
            new = labels.get(here.name, here.name)
            if new != here.name:
                self.rename_at(chain, path, new)
        return chain.eq

    def congruence(self, left: Formula, right: Formula) -> int:
        """A hypothesis-free step ``left -> right`` for congruent process formulas.

        On failure no steps are left behind.
        """
        mark = len(self.steps)
        try:
            return self.implication(self.equivalence(left, right))
        except GenerationError:
            del self.steps[mark:]
            raise


def _label_prefix(taken: set[str]) -> str:
    prefix = "n"
    while any(re.fullmatch(re.escape(prefix) + r"\d+", name) for name in taken):
        prefix += "n"
    return prefix


def _reveal_paths(a: Formula, path: Path = ()) -> Iterator[Path]:
    """Restrictions of a process formula in pre-order."""
    match a:
        case Reveal(_, body):
            yield path
            yield from _reveal_paths(body, path + ("body",))
        case Par(left, right):
            yield from _reveal_paths(left, path + ("left",))
            yield from _reveal_paths(right, path + ("right",))
        case InPrefix(_, _, body):
            yield from _reveal_paths(body, path + ("body",))
        case OutPrefix(_, payload, body):
            yield from _reveal_paths(payload, path + ("payload",))
            yield from _reveal_paths(body, path + ("body",))


def _split_level(a: Formula) -> tuple[list[str], list[Formula]]:
    binders: list[str] = []
    while isinstance(a, Reveal):
        binders.append(a.name)
        a = a.body
    threads: list[Formula] = []
    while isinstance(a, Par):
        threads.append(a.left)
        a = a.right
    if not isinstance(a, Zero):
        threads.append(a)
    return binders, threads


class _Labeller:
    """Canonical labels for the restrictions of a standard form.

    The restrictions of one level get ``prefix + depth``, ``prefix + depth+1``,
    ... in the order that makes the sorted components least; nested levels
    continue the numbering.
    """

    def __init__(self, prefix: str):
        self.prefix = prefix

    def level(self, a: Formula, depth: int) -> tuple[Formula, dict[str, str]]:
        binders, threads = _split_level(a)
        if len(binders) > MAX_RELABELLED_BINDERS:
            raise GenerationError(
                f"{len(binders)} restrictions at one level exceed the limit of "
                f"{MAX_RELABELLED_BINDERS} for renaming"
            )
        labels = [f"{self.prefix}{depth + i}" for i in range(len(binders))]
        best: Optional[tuple[tuple[str, ...], list[Formula], dict[str, str]]] = None
        for order in itertools.permutations(labels):
            mapping = dict(zip(binders, order))
            merged = dict(mapping)
            done = []
            for t in threads:
                for old, new in mapping.items():
                    t = rename_formula_name(t, old, new)
                t, found = self.thread(t, depth + len(binders))
                done.append(t)
                merged.update(found)
            done.sort(key=_thread_key)
            key = tuple(_thread_key(t) for t in done)
            if best is None or key < best[0]:
                best = (key, done, merged)
        _, done, merged = best
        return reveal_chain(labels, _threads(done)), merged

    def thread(self, a: Formula, depth: int) -> tuple[Formula, dict[str, str]]:
        match a:
            case InPrefix(_, _, body):
                inner, found = self.level(body, depth)
                return dataclasses.replace(a, body=inner), found
            case OutPrefix(_, payload, body):
                sent, found = self.level(payload, depth)
                rest, more = self.level(body, depth)
                return dataclasses.replace(a, payload=sent, body=rest), {**found, **more}
        return a, {}


class _Chain:
    """A running rewrite ``start <-> current``."""

    def __init__(self, prover: _Prover, start: Formula):
        self.prover = prover
        self.eq = _Eq(start, start)

    @property
    def current(self) -> Formula:
        return self.eq.right

    def at(self, path: Path) -> Formula:
        return _at(self.current, path)

    def apply(self, path: Path, eq: _Eq) -> None:
        lifted = self.prover.lift(self.current, path, eq)
        self.eq = self.prover.compose(self.eq, lifted)


# ---- congruence --------------------------------------------------------------


def prove_congruence(p: Process, q: Process) -> Proof:
    """A proof of ``embed(q)`` from the premise ``embed(p)`` for ``p == q``."""
    if not congruent(p, q):
        raise GenerationError("the processes are not structurally congruent")
    left, right = embed(p), embed(q)
    goal = Sequent((left,), right, Dialect.SL)
    prover = _Prover()
    if alpha_equal(left, right):
        prover.taut(right, prover.add(left, Premise(1)))
        return Proof(goal, tuple(prover.steps))
    eq = prover.equivalence(left, right)
    premise = prover.add(left, Premise(1))
    if eq.identity:
        prover.taut(right, premise)
    else:
        prover.add(right, MP(premise, eq.fwd))
    logger.debug("congruence proof with %d step(s)", len(prover.steps))
    return Proof(goal, tuple(prover.steps))


# ---- derivation trees --------------------------------------------------------


@dataclass(frozen=True)
class _Label:
    kind: str
    subject: Optional[str] = None
    extruded: tuple[str, ...] = ()
    payload: Optional[Process] = None


_TAU = _Label("tau")


@dataclass(frozen=True)
class _Derivation:
    """One derivation of the operational semantics, read syntactically."""

    rule: str
    source: Process
    label: _Label
    residual: Process
    premises: tuple["_Derivation", ...] = ()
    sender_left: bool = True


def _outputs(p: Process) -> Iterator[_Derivation]:
    match p:
        case Output(subject, payload, cont):
            yield _Derivation("out", p, _Label("out", subject, (), payload), cont)
        case PPar(left, right):
            for d in _outputs(left):
                yield _Derivation("par-left", p, d.label, PPar(d.residual, right), (d,))
            for d in _outputs(right):
                yield _Derivation("par-right", p, d.label, PPar(left, d.residual), (d,))
        case Res(binder, body):
            for d in _outputs(body):
                if binder == d.label.subject or binder in d.label.extruded:
                    continue
                if binder in d.label.payload.free_names:
                    label = dataclasses.replace(d.label, extruded=(binder,) + d.label.extruded)
                    yield _Derivation("open", p, label, d.residual, (d,))
                else:
                    yield _Derivation("res", p, d.label, Res(binder, d.residual), (d,))


def _inputs(p: Process, subject: str, payload: Process) -> Iterator[_Derivation]:
    match p:
        case Input(channel, binder, body) if channel == subject:
            label = _Label("in", subject, (), payload)
            yield _Derivation("in", p, label, substitute(body, binder, payload))
        case PPar(left, right):
            for d in _inputs(left, subject, payload):
                yield _Derivation("par-left", p, d.label, PPar(d.residual, right), (d,))
            for d in _inputs(right, subject, payload):
                yield _Derivation("par-right", p, d.label, PPar(left, d.residual), (d,))
        case Res(binder, body) if binder != subject and binder not in payload.free_names:
            for d in _inputs(body, subject, payload):
                yield _Derivation("res", p, d.label, Res(binder, d.residual), (d,))


def _taus(p: Process) -> Iterator[_Derivation]:
    match p:
        case PPar(left, right):
            for d in _taus(left):
                yield _Derivation("par-left", p, _TAU, PPar(d.residual, right), (d,))
            for d in _taus(right):
                yield _Derivation("par-right", p, _TAU, PPar(left, d.residual), (d,))
            yield from _communications(p, left, right, sender_left=True)
            yield from _communications(p, right, left, sender_left=False)
        case Res(binder, body):
            for d in _taus(body):
                yield _Derivation("res", p, _TAU, Res(binder, d.residual), (d,))


def _communications(
    p: Process, sender: Process, receiver: Process, *, sender_left: bool
) -> Iterator[_Derivation]:
    for out in _outputs(sender):
        for received in _inputs(receiver, out.label.subject, out.label.payload):
            if sender_left:
                body = PPar(out.residual, received.residual)
            else:
                body = PPar(received.residual, out.residual)
            yield _Derivation(
                "com", p, _TAU, res_of(out.label.extruded, body), (out, received), sender_left
            )


def _derivations(p: Process, action: Action) -> Iterator[_Derivation]:
    match action:
        case Tau():
            yield from _taus(p)
        case In(subject, payload):
            yield from _inputs(p, subject, payload)
        case Out(subject, extruded, _):
            for d in _outputs(p):
                if d.label.subject == subject and len(d.label.extruded) == len(extruded):
                    yield d


def _matches(label: _Label, residual: Process, action: Action, q: Process) -> bool:
    if isinstance(action, Out):
        ours = res_of(label.extruded, Output(label.subject, label.payload, residual))
        theirs = res_of(action.extruded, Output(action.subject, action.payload, q))
        return congruent(ours, theirs)
    return congruent(residual, q)


def _tau_paths(p: Process, fuel: int) -> Iterator[tuple[Process, list[_Derivation]]]:
    """States reachable by at most ``fuel`` tau-derivations, ``p`` first."""
    seen = {canonical_key(p)}
    queue = deque([(p, [])])
    while queue:
        state, path = queue.popleft()
        yield state, path
        if len(path) == fuel:
            continue
        for d in _taus(state):
            key = canonical_key(d.residual)
            if key not in seen:
                seen.add(key)
                queue.append((d.residual, path + [d]))


@dataclass(frozen=True)
class _Plan:
    before: tuple[_Derivation, ...]
    step: Optional[_Derivation]
    after: tuple[_Derivation, ...] = ()


def _strong_plans(p: Process, action: Action, q: Process) -> Iterator[_Plan]:
    for d in _derivations(p, action):
        if _matches(d.label, d.residual, action, q):
            yield _Plan((), d)


def _weak_plans(p: Process, action: Action, q: Process, fuel: int) -> Iterator[_Plan]:
    if isinstance(action, Tau):
        for state, path in _tau_paths(p, fuel):
            if path and congruent(state, q):
                yield _Plan(tuple(path), None)
        return
    for state, before in _tau_paths(p, fuel):
        for d in _derivations(state, action):
            for target, after in _tau_paths(d.residual, fuel - len(before)):
                if _matches(d.label, target, action, q):
                    yield _Plan(tuple(before), d, tuple(after))


# ---- transition proofs -------------------------------------------------------

_WEAK_SCHEMAS = {
    "out-intro": "w-out-intro",
    "in-intro": "w-in-intro",
    "tau-par": "w-eps-par",
    "in-par": "w-in-par",
    "out-par": "w-out-par",
    "com": "w-com",
    "res-in": "w-res-in",
    "res-out": "w-res-out",
    "open": "w-open",
    "box-to-dia": "w-box-to-dia",
    "dia-to-box": "w-dia-to-box",
    "dia-mono": "w-dia-mono",
    "dia-out-payload": "w-out-payload",
}


class _Emitter:
    """Turns a derivation into a step ``embed(source) -> <label>embed(residual)``."""

    def __init__(self, prover: _Prover, weak: bool):
        self.prover = prover
        self.weak = weak

    def schema(self, strong: str) -> str:
        return _WEAK_SCHEMAS[strong] if self.weak else strong

    def emit(self, d: _Derivation) -> int:
        step = getattr(self, "_" + d.rule.replace("-", "_"))(d)
        residual = self.prover.consequent(step).body
        if not alpha_equal(residual, embed(d.residual)):
            raise GenerationError(
                f"derived residual '{show_formula(residual)}' does not spell "
                f"'{show_formula(embed(d.residual))}'"
            )
        return step

    def rebody(self, source: Formula, step: int, body: Formula, implication: int) -> int:
        modality = self.prover.consequent(step)
        return self.prover.rule(
            self.schema("dia-mono"),
            implies(source, relabel(modality, body)),
            step,
            implication,
        )

    def _out(self, d: _Derivation) -> int:
        out = d.source
        return self.prover.axiom(
            self.schema("out-intro"), a=out.subject, A=embed(out.cont), B=embed(out.payload)
        )

    def _in(self, d: _Derivation) -> int:
        prover, receiver = self.prover, d.source
        payload = embed(d.label.payload)
        binder = receiver.binder
        if binder == UNUSED:
            binder = fresh_var(receiver.body.free_vars | d.label.payload.free_vars, "U")
        intro = prover.axiom(
            self.schema("in-intro"), a=receiver.subject, U=binder, A=embed(receiver.body), B=payload
        )
        guard, box = as_implication(prover.formula(intro))
        boxed = prover.taut(implies(embed(receiver), box), intro, prover.fresh(guard.right))
        diamond = prover.axiom(
            self.schema("box-to-dia"), a=receiver.subject, A=box.body, B=payload
        )
        return prover.chain(embed(receiver), boxed, diamond)

    def _par_left(self, d: _Derivation) -> int:
        prover = self.prover
        left, right = embed(d.source.left), embed(d.source.right)
        inner = self.emit(d.premises[0])
        modality = prover.consequent(inner)
        framed = prover.rule("par-mono", implies(Par(left, right), Par(modality, right)), inner)
        return prover.chain(Par(left, right), framed, self._frame(d.label, modality, right))

    def _par_right(self, d: _Derivation) -> int:
        prover = self.prover
        source = embed(d.source)
        swapped = PPar(d.source.right, d.source.left)
        inner = d.premises[0]
        mirrored = _Derivation(
            "par-left", swapped, d.label, PPar(inner.residual, d.source.left), (inner,)
        )
        swap = prover.implication(prover.axiom_eq("par-comm", A=source.left, B=source.right))
        moved = prover.chain(source, swap, self.emit(mirrored))
        residual = prover.consequent(moved).body
        back = prover.implication(
            prover.axiom_eq("par-comm", A=residual.left, B=residual.right)
        )
        return self.rebody(source, moved, embed(d.residual), back)

    def _frame(self, label: _Label, modality: Formula, other: Formula) -> int:
        prover = self.prover
        if label.kind == "tau":
            return prover.axiom(self.schema("tau-par"), A=modality.body, B=other)
        if label.kind == "in":
            return prover.axiom(
                self.schema("in-par"),
                a=label.subject,
                A=modality.body,
                B=other,
                C=modality.payload,
            )
        return prover.detach(
            prover.axiom(
                self.schema("out-par"),
                a=label.subject,
                bs=label.extruded,
                A=modality.body,
                B=other,
                C=embed(label.payload),
            )
        )

    def _revealed(self, d: _Derivation) -> tuple[int, Formula]:
        """The premise's step lifted under the restriction of ``d.source``."""
        prover = self.prover
        inner = self.emit(d.premises[0])
        modality = prover.consequent(inner)
        context = Reveal(d.source.binder, embed(d.source.body))
        return prover.lift_step(context, "body", modality, inner), modality

    def _res(self, d: _Derivation) -> int:
        prover = self.prover
        lifted, modality = self._revealed(d)
        binder, label = d.source.binder, d.label
        if label.kind == "tau":
            if not self.weak:
                raise GenerationError(
                    "a tau-step under a restriction has no strong axiom; use the weak mode"
                )
            commuted = prover.axiom("w-res-eps", a=binder, A=modality.body)
        elif label.kind == "in":
            commuted = prover.detach(
                prover.axiom(
                    self.schema("res-in"),
                    a=binder,
                    b=label.subject,
                    A=modality.body,
                    B=embed(label.payload),
                )
            )
        else:
            commuted = prover.detach(
                prover.axiom(
                    self.schema("res-out"),
                    a=binder,
                    c=label.subject,
                    bs=label.extruded,
                    A=modality.body,
                    B=embed(label.payload),
                )
            )
        return prover.chain(embed(d.source), lifted, commuted)

    def _open(self, d: _Derivation) -> int:
        prover = self.prover
        lifted, modality = self._revealed(d)
        inner = d.premises[0].label
        opened = prover.detach(
            prover.axiom(
                self.schema("open"),
                a=inner.subject,
                b=d.source.binder,
                cs=inner.extruded,
                A=modality.body,
                B=embed(inner.payload),
            )
        )
        return prover.chain(embed(d.source), lifted, opened)

    def _com(self, d: _Derivation) -> int:
        prover = self.prover
        source = embed(d.source)
        sender, receiver = d.premises
        if not d.sender_left:
            swapped = PPar(d.source.right, d.source.left)
            body = PPar(sender.residual, receiver.residual)
            mirrored = _Derivation(
                "com", swapped, _TAU, res_of(sender.label.extruded, body), d.premises, True
            )
            swap = prover.implication(prover.axiom_eq("par-comm", A=source.left, B=source.right))
            moved = prover.chain(source, swap, self.emit(mirrored))
            depth = len(sender.label.extruded)
            residual = prover.consequent(moved).body
            inner = _at(residual, ("body",) * depth)
            back = prover.lift(
                residual, ("body",) * depth, prover.axiom_eq("par-comm", A=inner.left, B=inner.right)
            )
            return self.rebody(source, moved, embed(d.residual), prover.implication(back))
        left, right = source.left, source.right
        emitted = self.emit(sender)
        offer = prover.consequent(emitted)
        accepted = self.emit(receiver)
        receive = prover.consequent(accepted)
        to_box = prover.axiom(
            self.schema("dia-to-box"), a=receive.subject, A=receive.body, B=receive.payload
        )
        boxed = prover.chain(right, accepted, to_box)
        box = prover.consequent(boxed)
        framed = prover.rule("par-mono", implies(Par(left, right), Par(offer, right)), emitted)
        both = prover.lift_step(Par(offer, right), "right", box, boxed)
        synced = prover.detach(
            prover.axiom(
                self.schema("com"),
                a=sender.label.subject,
                bs=sender.label.extruded,
                A=offer.body,
                B=box.body,
                C=embed(sender.label.payload),
            )
        )
        return prover.chain(source, framed, both, synced)


def _target_formula(action: Action, body: Formula, weak: bool) -> Formula:
    return (weak_action_formula if weak else action_formula)(action, body)


def _assemble(
    p: Process, work: Process, action: Action, q: Process, plan: _Plan, weak: bool
) -> Proof:
    """Replay ``plan``, found on the alpha-variant ``work`` of ``p``."""
    prover = _Prover()
    emitter = _Emitter(prover, weak)
    source = embed(p)
    if plan.step is None:
        result = _eps_chain(prover, emitter, plan.before)
    else:
        result = emitter.emit(plan.step)
        for d in plan.after:
            tail = emitter.emit(d)
            result = prover.rule(
                "w-chain-after",
                implies(embed(plan.step.source), relabel(prover.consequent(result), prover.consequent(tail).body)),
                result,
                tail,
            )
        for d in reversed(plan.before):
            head = emitter.emit(d)
            result = prover.rule(
                "w-chain-before",
                implies(embed(d.source), prover.consequent(result)),
                head,
                result,
            )
    if not alpha_equal(source, embed(work)):
        respelled = prover.fresh(iff(source, embed(work)))
        result = prover.chain(source, prover.taut(implies(source, embed(work)), respelled), result)
    result = _adjust(prover, emitter, source, result, action, q)
    conclusion = prover.consequent(result)
    premise = prover.add(source, Premise(1))
    prover.add(conclusion, MP(premise, result))
    goal = Sequent((source,), conclusion, Dialect.WL if weak else Dialect.SL)
    return Proof(goal, tuple(prover.steps))


def _eps_chain(prover: _Prover, emitter: _Emitter, path: Sequence[_Derivation]) -> int:
    if not path:
        raise GenerationError("a weak epsilon needs at least one tau-step; there is no reflexivity law")
    result = emitter.emit(path[0])
    for d in path[1:]:
        tail = emitter.emit(d)
        result = prover.rule(
            "w-chain-after",
            implies(embed(path[0].source), relabel(prover.consequent(result), prover.consequent(tail).body)),
            result,
            tail,
        )
    return result


def _adjust(
    prover: _Prover, emitter: _Emitter, source: Formula, step: int, action: Action, q: Process
) -> int:
    """Respell the residual and the output payload as requested, when the
    requested spelling has a congruence proof."""
    wanted = _target_formula(action, embed(q), emitter.weak)
    modality = prover.consequent(step)
    if isinstance(action, Out) and not alpha_equal(modality.payload, wanted.payload):
        try:
            implication = prover.congruence(modality.payload, wanted.payload)
        except GenerationError:
            logger.debug("keeping the derived payload spelling")
            return step
        step = prover.rule(
            emitter.schema("dia-out-payload"),
            implies(source, dataclasses.replace(modality, payload=wanted.payload)),
            step,
            implication,
        )
        modality = prover.consequent(step)
    if not alpha_equal(modality.body, wanted.body):
        try:
            implication = prover.congruence(modality.body, wanted.body)
        except GenerationError:
            logger.debug("keeping the derived residual spelling")
            return step
        step = emitter.rebody(source, step, wanted.body, implication)
    return step


def prove_transition(
    p: Process, action: Action, q: Process, weak: bool = False, *, fuel: int = 8
) -> Proof:
    """A proof of ``<action>embed(q)`` (``<<action>>`` when ``weak``) from ``embed(p)``.

    The conclusion is spelled as ``q`` and ``action`` are when the respelling
    has a congruence proof, and as the source is otherwise. In the strong mode
    a tau-step under a restriction has no axiom and is not provable.
    """
    if not p.closed:
        raise InputError("prove_transition requires a closed process")
    work = freshen_bound(p, action.payload.free_names if isinstance(action, In) else frozenset())
    plans = _weak_plans(work, action, q, fuel) if weak else _strong_plans(work, action, q)
    failure: Optional[GenerationError] = None
    found = False
    for plan in itertools.islice(plans, MAX_ATTEMPTS):
        found = True
        try:
            proof = _assemble(p, work, action, q, plan, weak)
        except GenerationError as error:
            logger.debug("derivation rejected: %s", error)
            failure = error
            continue
        logger.debug("transition proof with %d step(s)", len(proof.steps))
        return proof
    if not found:
        arrow = "=>" if weak else "->"
        raise GenerationError(f"'{action}' {arrow} is not a transition to the requested target")
    raise GenerationError(f"no derivation of the transition can be replayed: {failure}")
