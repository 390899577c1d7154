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

"""Proof objects and the checking kernel.

A proof is a numbered list of steps, each justified by a premise, an axiom
instance, a propositional tautology, modus ponens, a rule of the catalogue,
fixpoint induction, or a syntactic side-condition discharge. Nothing is
searched for: every step's formula is checked against its justification.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from ..errors import InputError
from ..logic import (
    TOP,
    And,
    Bot,
    Dialect,
    Formula,
    FreshName,
    Neq,
    NoBound,
    Not,
    NotFree,
    Top,
    alpha_equal,
    alpha_normal,
    as_iff,
    as_implication,
    conjunction,
    implies,
    in_dialect,
)
from .catalogue import (
    AxiomSchema,
    Binding,
    RuleSchema,
    has_no_bound,
    not_free,
    occurs_free,
    same_process,
    schema,
)

logger = logging.getLogger(__name__)

MAX_ATOMS = 16


@dataclass(frozen=True)
class Sequent:
    premises: tuple[Formula, ...]
    conclusion: Formula
    dialect: Dialect = Dialect.SL


@dataclass(frozen=True)
class Premise:
    index: int


@dataclass(frozen=True)
class Axiom:
    schema: str
    bindings: Mapping[str, Binding]


@dataclass(frozen=True)
class Taut:
    cited: tuple[int, ...] = ()


@dataclass(frozen=True)
class MP:
    first: int
    second: int


@dataclass(frozen=True)
class Rule:
    rule: str
    premises: tuple[int, ...]


@dataclass(frozen=True)
class MuInd:
    premise: int


@dataclass(frozen=True)
class Fresh:
    pass


Justification = Union[Premise, Axiom, Taut, MP, Rule, MuInd, Fresh]


@dataclass(frozen=True)
class Step:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Proof:
    goal: Sequent
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class ProofReport:
    accepted: bool
    step: Optional[int] = None
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "result": "accept" if self.accepted else "reject",
            "step": self.step,
            "reason": self.reason or None,
        }

    def __str__(self) -> str:
        if self.accepted:
            return "accept"
        return f"reject at step {self.step}: {self.reason}"


class _Reject(Exception):
    pass


# ---- tautologies -------------------------------------------------------------


def _atoms(a: Formula, found: dict[Formula, Formula]) -> None:
    match a:
        case Top() | Bot() | Neq():
            return
        case Not(body):
            _atoms(body, found)
        case And(left, right):
            _atoms(left, found)
            _atoms(right, found)
        case _:
            found.setdefault(alpha_normal(a), a)


def _evaluate(a: Formula, valuation: Mapping[Formula, bool]) -> bool:
    match a:
        case Top():
            return True
        case Bot():
            return False
        case Neq(left, right):
            return left != right
        case Not(body):
            return not _evaluate(body, valuation)
        case And(left, right):
            return _evaluate(left, valuation) and _evaluate(right, valuation)
    return valuation[alpha_normal(a)]


def tautology(a: Formula) -> bool:
    """Truth-table validity of ``a`` over its non-propositional subformulas.

    Subformulas equal up to bound renaming are the same atom; ``a != b`` on
    concrete names is a constant.
    """
    found: dict[Formula, Formula] = {}
    _atoms(a, found)
    if len(found) > MAX_ATOMS:
        raise InputError(f"tautology check over {len(found)} atoms exceeds the limit of {MAX_ATOMS}")
    keys = list(found)
    for values in itertools.product((False, True), repeat=len(keys)):
        if not _evaluate(a, dict(zip(keys, values))):
            return False
    return True


# ---- side-condition discharge ------------------------------------------------


def dischargeable(a: Formula) -> bool:
    """``a`` is one of the side-condition shapes that hold syntactically."""
    if isinstance(a, Top):
        return True
    if isinstance(a, Neq):
        return a.left != a.right
    pair = as_iff(a)
    if pair is not None:
        return _discharge_iff(*pair)
    pair = as_implication(a)
    if pair is not None:
        guarded, right = pair
        if isinstance(right, Not) and isinstance(right.body, NotFree) and right.body.body == TOP:
            return occurs_free(right.body.name, guarded)
        return False
    if isinstance(a, And):
        return dischargeable(a.left) and dischargeable(a.right)
    return False


def _discharge_iff(left: Formula, right: Formula) -> bool:
    """``(- a)B``, ``(~-)B`` or ``(N x)B`` against ``B``, read on the closed
    process ``B`` spells; such a ``B`` denotes one congruence class, so a
    name it does not have free can be chosen fresh. Two spellings of one
    closed process up to bound renaming are equivalent for the same reason."""
    if same_process(left, right):
        return True
    match left:
        case NoBound(body):
            return alpha_equal(body, right) and has_no_bound(right)
        case And(NotFree(name, first), NoBound(second)):
            return (
                alpha_equal(first, right)
                and alpha_equal(second, right)
                and not_free(name, right)
                and has_no_bound(right)
            )
        case FreshName(name, body):
            return alpha_equal(body, right) and not_free(name, right)
    names = []
    while isinstance(left, NotFree):
        names.append(left.name)
        left = left.body
    if not alpha_equal(left, right):
        return False
    return all(not_free(name, right) for name in names)


# ---- checking ----------------------------------------------------------------


class _Checker:
    def __init__(self, proof: Proof):
        self.goal = proof.goal
        self.steps = proof.steps
        self.formulas: list[Formula] = []
        self.depends: list[bool] = []

    def run(self) -> ProofReport:
        if not self.steps:
            return ProofReport(False, None, "the proof has no steps")
        for number, step in enumerate(self.steps, start=1):
            try:
                self._check_dialect(step.formula)
                self.depends.append(self._check(number, step))
            except _Reject as reason:
                logger.debug("step %d rejected: %s", number, reason)
                return ProofReport(False, number, str(reason))
            except InputError as error:
                logger.debug("step %d rejected: %s", number, error)
                return ProofReport(False, number, str(error))
            self.formulas.append(step.formula)
            logger.debug("step %d accepted", number)
        if not alpha_equal(self.formulas[-1], self.goal.conclusion):
            return ProofReport(
                False, len(self.steps), "the last step does not prove the goal conclusion"
            )
        return ProofReport(True)

    def _check_dialect(self, a: Formula) -> None:
        if not in_dialect(a, self.goal.dialect):
            raise _Reject(f"formula is outside {self.goal.dialect.value.upper()}")

    def _cite(self, number: int, cited: int) -> Formula:
        if not 1 <= cited < number:
            raise _Reject(f"step {cited} is not an earlier step")
        return self.formulas[cited - 1]

    def _check(self, number: int, step: Step) -> bool:
        """Validate one step; returns whether it depends on the premises."""
        formula, why = step.formula, step.justification
        match why:
            case Premise(index):
                if not 1 <= index <= len(self.goal.premises):
                    raise _Reject(f"there is no premise {index}")
                if not alpha_equal(formula, self.goal.premises[index - 1]):
                    raise _Reject(f"formula differs from premise {index}")
                return True
            case Axiom(name, bindings):
                found = schema(name)
                if not isinstance(found, AxiomSchema):
                    raise _Reject(f"'{name}' is a rule, not an axiom")
                self._require_dialect(found)
                if not alpha_equal(formula, found.instantiate(bindings)):
                    raise _Reject(f"formula is not the instance of {name} for these bindings")
                return False
            case Taut(cited):
                known = [self._cite(number, i) for i in cited]
                if not tautology(implies(conjunction(known), formula) if known else formula):
                    raise _Reject("not a propositional consequence of the cited steps")
                return any(self.depends[i - 1] for i in cited)
            case MP(first, second):
                return self._modus_ponens(number, formula, first, second)
            case Rule(name, premises):
                return self._rule(number, formula, schema(name), premises)
            case MuInd(premise):
                return self._rule(number, formula, schema("mu-ind"), (premise,))
            case Fresh():
                if not dischargeable(formula):
                    raise _Reject("not a side condition that holds syntactically")
                return False
        raise _Reject(f"unknown justification {why!r}")

    def _require_dialect(self, found: Union[AxiomSchema, RuleSchema]) -> None:
        if self.goal.dialect not in found.dialects:
            raise _Reject(f"{found.id} is not part of {self.goal.dialect.value.upper()}")

    def _modus_ponens(self, number: int, formula: Formula, first: int, second: int) -> bool:
        a, b = self._cite(number, first), self._cite(number, second)
        for antecedent, implication in ((a, b), (b, a)):
            pair = as_implication(implication)
            if pair and alpha_equal(pair[0], antecedent) and alpha_equal(pair[1], formula):
                return self.depends[first - 1] or self.depends[second - 1]
        raise _Reject(f"steps {first} and {second} do not combine by modus ponens to this formula")

    def _rule(
        self, number: int, formula: Formula, found: Union[AxiomSchema, RuleSchema], cited: Sequence[int]
    ) -> bool:
        if not isinstance(found, RuleSchema):
            raise _Reject(f"'{found.id}' is an axiom, not a rule")
        self._require_dialect(found)
        if len(cited) != len(found.premises):
            raise _Reject(f"{found.id} takes {len(found.premises)} premise(s), got {len(cited)}")
        premises = [self._cite(number, i) for i in cited]
        for position in found.closed:
            if self.depends[cited[position] - 1]:
                raise _Reject(f"premise {cited[position]} of {found.id} must not use hypotheses")
        problem = found.match(premises, formula)
        if problem is not None and found.guardable and self._guarded(found, premises, formula) is None:
            problem = None
        if problem is not None:
            raise _Reject(f"{found.id}: {problem}")
        return any(self.depends[cited[i] - 1] for i in range(len(cited)) if i not in found.closed)

    @staticmethod
    def _guarded(found: RuleSchema, premises: Sequence[Formula], formula: Formula) -> Optional[str]:
        """Retry ``H -> F, ... |- H -> F'`` as ``F, ... |- F'``; ``None`` on success."""
        first, goal = as_implication(premises[0]), as_implication(formula)
        if first is None or goal is None or not alpha_equal(first[0], goal[0]):
            return "premise and conclusion do not share a guard"
        return found.match([first[1], *premises[1:]], goal[1])


def check_proof(proof: Proof) -> ProofReport:
    """Accept ``proof`` or name the first step that does not validate."""
    return _Checker(proof).run()
