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

"""The axiom and rule tables of the strong, weak and fixpoint inference systems.

One schema per table line. Axioms are templates in the concrete formula
grammar whose metavariables are plugged syntactically; rules are checked by
matching their premises against the claimed conclusion.

Metavariable sorts follow their spelling: ``A B C`` formulas, ``X Y U``
variables, ``a b c x`` names, ``bs cs`` name lists and ``alpha`` a modality.
Derived metavariables (``D E H M``) are computed from the others.
"""

from __future__ import annotations

import dataclasses
import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Optional, Protocol, Sequence, Union

from ..errors import InputError, SideConditionError
from ..logic import (
    BOT,
    TOP,
    And,
    BoxIn,
    DiaOut,
    DiaTau,
    Dialect,
    Formula,
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
    WeakOut,
    alpha_equal,
    as_implication,
    as_process,
    conjunction,
    formula_subst,
    iff,
    implies,
    monotone_in,
    or_,
    parse_formula,
    positive_in,
    substitute_formula,
    unfold,
)
from ..logic.formulas import STRONG_MODALITIES, WEAK_MODALITIES
from ..process import Process, alpha_equivalent, normalize

logger = logging.getLogger(__name__)

FORMULA, NAME, VAR, NAMES, LABEL = "formula", "name", "var", "names", "label"

SORTS = {
    "A": FORMULA,
    "B": FORMULA,
    "C": FORMULA,
    "X": VAR,
    "Y": VAR,
    "U": VAR,
    "a": NAME,
    "b": NAME,
    "c": NAME,
    "x": NAME,
    "bs": NAMES,
    "cs": NAMES,
    "alpha": LABEL,
}

Binding = Union[Formula, str, tuple[str, ...]]
Bindings = Mapping[str, Binding]

ALL = frozenset(Dialect)
STRONG = frozenset({Dialect.SL, Dialect.MUSL})
WEAK = frozenset({Dialect.WL})
FIXPOINT = frozenset({Dialect.MUSL})

_NAME_RE = re.compile(r"[a-z][A-Za-z0-9_']*")
_VAR_RE = re.compile(r"[A-Z][A-Za-z0-9_']*")


class Picker(Protocol):
    """Random source used to build sample instances of rules."""

    def formula(self) -> Formula: ...

    def name(self) -> str: ...

    def var(self) -> str: ...

    def label(self, weak: bool) -> Formula: ...


@dataclass(frozen=True)
class Metavar:
    name: str
    sort: str


@dataclass(frozen=True)
class SideCondition:
    text: str
    holds: Callable[[Bindings], bool] = field(compare=False, repr=False)


@dataclass(frozen=True)
class AxiomSchema:
    id: str
    group: str
    dialects: frozenset[Dialect]
    metavars: tuple[Metavar, ...]
    template: str
    derived: Mapping[str, Callable[[Bindings], Formula]] = field(
        default_factory=dict, compare=False, repr=False
    )
    side_conditions: tuple[SideCondition, ...] = ()
    sampled: bool = True
    process_metas: bool = False
    note: str = ""

    kind = "axiom"

    def instantiate(self, bindings: Bindings) -> Formula:
        env = dict(check_bindings(self.id, self.metavars, bindings))
        for name, compute in self.derived.items():
            env[name] = compute(env)
        for condition in self.side_conditions:
            if not condition.holds(env):
                raise SideConditionError(self.id, condition.text)
        return plug(_template(self.template), env)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "group": self.group,
            "dialects": sorted(d.value for d in self.dialects),
            "metavariables": {m.name: m.sort for m in self.metavars},
            "template": self.template,
            "side_conditions": [c.text for c in self.side_conditions],
            "sampled": self.sampled,
        }


RuleMatcher = Callable[[Sequence[Formula], Formula], Optional[str]]


@dataclass(frozen=True)
class RuleSchema:
    """``premises |- conclusion``; positions listed in ``closed`` must be
    proved without hypotheses. A rule whose first premise is not closed also
    accepts that premise and the conclusion under a common guard ``H -> .``."""

    id: str
    group: str
    dialects: frozenset[Dialect]
    premises: tuple[str, ...]
    conclusion: str
    match: RuleMatcher = field(compare=False, repr=False)
    closed: tuple[int, ...] = (1,)
    sample: Optional[Callable[[Picker], Formula]] = field(default=None, compare=False, repr=False)
    note: str = ""

    kind = "rule"

    @property
    def sampled(self) -> bool:
        return self.sample is not None

    @property
    def guardable(self) -> bool:
        return 0 not in self.closed

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "group": self.group,
            "dialects": sorted(d.value for d in self.dialects),
            "premises": list(self.premises),
            "conclusion": self.conclusion,
            "sampled": self.sampled,
        }


Schema = Union[AxiomSchema, RuleSchema]


# ---- templates ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _template(text: str) -> Formula:
    return parse_formula(text, source="<catalogue>")


def plug(a: Formula, env: Bindings) -> Formula:
    """Replace metavariables in ``a`` without renaming anything."""
    if isinstance(a, PropVar):
        value = env.get(a.var)
        if isinstance(value, Formula):
            return value
        return PropVar(value) if isinstance(value, str) else a
    changes = {}
    for f in dataclasses.fields(a):
        if f.name == "hint":
            continue
        value = getattr(a, f.name)
        if isinstance(value, Formula):
            changes[f.name] = plug(value, env)
        elif isinstance(value, str) and isinstance(env.get(value), str):
            changes[f.name] = env[value]
    return dataclasses.replace(a, **changes) if changes else a


def check_bindings(schema: str, metavars: Sequence[Metavar], bindings: Bindings) -> Bindings:
    expected = {m.name: m.sort for m in metavars}
    extra = sorted(set(bindings) - set(expected))
    if extra:
        raise InputError(f"{schema}: unknown metavariable(s) {', '.join(extra)}")
    missing = [m.name for m in metavars if m.name not in bindings]
    if missing:
        raise InputError(f"{schema}: missing binding(s) for {', '.join(missing)}")
    for name, sort in expected.items():
        value = bindings[name]
        if not _fits(value, sort):
            raise InputError(f"{schema}: '{name}' expects a {sort}, got {value!r}")
    return bindings


def _fits(value: Binding, sort: str) -> bool:
    if sort == FORMULA:
        return isinstance(value, Formula)
    if sort == NAME:
        return isinstance(value, str) and bool(_NAME_RE.fullmatch(value))
    if sort == VAR:
        return isinstance(value, str) and bool(_VAR_RE.fullmatch(value))
    if sort == NAMES:
        return isinstance(value, tuple) and all(
            isinstance(n, str) and _NAME_RE.fullmatch(n) for n in value
        )
    if sort == LABEL:
        return isinstance(value, STRONG_MODALITIES + WEAK_MODALITIES)
    return False


def relabel(label: Formula, body: Formula) -> Formula:
    """The modality ``label`` with its continuation replaced by ``body``."""
    return dataclasses.replace(label, body=body)


def reveal_chain(names: Sequence[str], body: Formula) -> Formula:
    """``b1 @ ... bn @ body``."""
    for name in reversed(names):
        body = Reveal(name, body)
    return body


def not_free_chain(names: Sequence[str], body: Formula) -> Formula:
    """``(- b1)...(- bn)body``."""
    for name in reversed(names):
        body = NotFree(name, body)
    return body


# ---- side conditions ---------------------------------------------------------


def distinct(*names: str) -> SideCondition:
    def holds(env: Bindings) -> bool:
        return all(env[left] != env[right] for left, right in _pairs(names))

    return SideCondition(" != ".join(names), holds)


def _pairs(names: Sequence[str]):
    return [(left, right) for i, left in enumerate(names) for right in names[i + 1 :]]


def not_in_list(name: str, names: str) -> SideCondition:
    return SideCondition(
        f"{name} not in {names}", lambda env: env[name] not in env[names]
    )


def not_free_in(name: str, formula: str) -> SideCondition:
    """``(- a)B <-> B`` read syntactically."""
    return SideCondition(
        f"(- {name}){formula} <-> {formula}",
        lambda env: not_free(env[name], env[formula]),
    )


def all_not_free_in(names: str, formula: str) -> SideCondition:
    return SideCondition(
        f"(- {names}){formula} <-> {formula}",
        lambda env: all(not_free(n, env[formula]) for n in env[names]),
    )


def bound_free(formula: str) -> SideCondition:
    """``(~-)B <-> B``: ``B`` spells a process without restrictions up to congruence."""
    return SideCondition(f"(~-){formula} <-> {formula}", lambda env: has_no_bound(env[formula]))


def occurs_in(name: str, formula: str) -> SideCondition:
    """``B -> not (- b)T``: ``B`` spells a process with ``b`` free."""
    return SideCondition(
        f"{formula} -> not (- {name})T", lambda env: occurs_free(env[name], env[formula])
    )


def process_shaped(formula: str) -> SideCondition:
    return SideCondition(
        f"{formula} is a process", lambda env: closed_process(env[formula]) is not None
    )


def fresh_for(new: str, old: str, formula: str) -> SideCondition:
    """The renaming ``new`` for ``old`` does not merge ``new`` with a free occurrence."""

    def holds(env: Bindings) -> bool:
        if env[new] == env[old]:
            return True
        body = env[formula]
        occurs = body.free_names if SORTS[new] == NAME else body.free_vars
        return env[new] not in occurs

    return SideCondition(f"{new} fresh for {formula}", holds)


def strong_label(name: str) -> SideCondition:
    return SideCondition(
        f"{name} is a strong label", lambda env: isinstance(env[name], STRONG_MODALITIES)
    )


def weak_label(name: str) -> SideCondition:
    return SideCondition(
        f"{name} is a weak label", lambda env: isinstance(env[name], WEAK_MODALITIES)
    )


def closed_process(a: Formula) -> Optional[Process]:
    """The closed process ``a`` spells, if any; such formulas denote one
    congruence class."""
    process = as_process(a)
    return process if process is not None and process.closed else None


def not_free(name: str, a: Formula) -> bool:
    """``(- name)a <-> a`` holds syntactically."""
    process = closed_process(a)
    return process is not None and name not in process.free_names


def same_process(a: Formula, b: Formula) -> bool:
    """``a <-> b`` holds syntactically: both spell one closed process up to
    renaming of restricted names and input variables."""
    left, right = closed_process(a), closed_process(b)
    return left is not None and right is not None and alpha_equivalent(left, right)


def occurs_free(name: str, a: Formula) -> bool:
    process = closed_process(a)
    return process is not None and name in process.free_names


def has_no_bound(a: Formula) -> bool:
    """``(~-)a <-> a`` holds syntactically."""
    process = closed_process(a)
    return process is not None and not normalize(process).process.bound_names


# ---- rule matchers -----------------------------------------------------------


def _position(cls, get, put, *, covariant: bool = True) -> RuleMatcher:
    """Monotonicity in one position of the first premise."""

    def match(premises: Sequence[Formula], conclusion: Formula) -> Optional[str]:
        first, implication = premises
        if not isinstance(first, cls):
            return "first premise has the wrong shape"
        pair = as_implication(implication)
        if pair is None:
            return "second premise is not an implication"
        low, high = pair if covariant else (pair[1], pair[0])
        if not alpha_equal(get(first), low):
            return "implication premise does not start from the rewritten position"
        if not alpha_equal(conclusion, put(first, high)):
            return "conclusion does not match the rewritten premise"
        return None

    return match


def _body(cls) -> RuleMatcher:
    return _position(
        cls, lambda f: f.body, lambda f, new: dataclasses.replace(f, body=new)
    )


def _payload(cls, *, covariant: bool) -> RuleMatcher:
    return _position(
        cls,
        lambda f: f.payload,
        lambda f, new: dataclasses.replace(f, payload=new),
        covariant=covariant,
    )


def _par_mono(premises: Sequence[Formula], conclusion: Formula) -> Optional[str]:
    pair, goal = as_implication(premises[0]), as_implication(conclusion)
    if pair is None or goal is None:
        return "premise and conclusion must be implications"
    left, right = goal
    if not (isinstance(left, Par) and isinstance(right, Par)):
        return "conclusion must compare two compositions"
    if not (alpha_equal(left.left, pair[0]) and alpha_equal(right.left, pair[1])):
        return "conclusion does not extend the premise"
    if not alpha_equal(left.right, right.right):
        return "the added component differs on the two sides"
    return None


def _chain_after(premises: Sequence[Formula], conclusion: Formula) -> Optional[str]:
    first, implication = premises
    if not isinstance(first, WEAK_MODALITIES):
        return "first premise must be a weak modality"
    pair = as_implication(implication)
    if pair is None or not isinstance(pair[1], WeakEps):
        return "second premise must end in <<eps>>"
    if not alpha_equal(first.body, pair[0]):
        return "implication premise does not start from the continuation"
    if not alpha_equal(conclusion, relabel(first, pair[1].body)):
        return "conclusion does not match"
    return None


def _chain_before(premises: Sequence[Formula], conclusion: Formula) -> Optional[str]:
    first, implication = premises
    if not isinstance(first, WeakEps):
        return "first premise must be <<eps>>A"
    pair = as_implication(implication)
    if pair is None or not isinstance(pair[1], WEAK_MODALITIES):
        return "second premise must end in a weak modality"
    if not alpha_equal(first.body, pair[0]):
        return "implication premise does not start from the continuation"
    if not alpha_equal(conclusion, pair[1]):
        return "conclusion does not match"
    return None


def _mu_induction(premises: Sequence[Formula], conclusion: Formula) -> Optional[str]:
    pair, goal = as_implication(premises[0]), as_implication(conclusion)
    if pair is None or goal is None or not isinstance(goal[0], Mu):
        return "expected A(B) -> B and mu X.A(X) -> B"
    fixpoint, bound = goal
    if not monotone_in(fixpoint.binder, fixpoint.body):
        return f"{fixpoint.binder} is not monotone in the fixpoint body"
    if not alpha_equal(bound, pair[1]):
        return "the bound differs between premise and conclusion"
    if not alpha_equal(pair[0], substitute_formula(fixpoint.body, fixpoint.binder, bound)):
        return "premise is not the fixpoint body applied to the bound"
    return None


# ---- rule samplers -----------------------------------------------------------


def _weaken(pick: Picker, make: Callable[[Formula], Formula]) -> Formula:
    """``make(A) -> make(A or C)`` for a covariant position."""
    a = pick.formula()
    return implies(make(a), make(or_(a, pick.formula())))


def _strengthen(pick: Picker, make: Callable[[Formula], Formula]) -> Formula:
    """``make(B) -> make(B and C)`` for a contravariant position."""
    b = pick.formula()
    return implies(make(b), make(And(b, pick.formula())))


def _label_sample(weak: bool):
    def sample(pick: Picker) -> Formula:
        label = pick.label(weak)
        return _weaken(pick, lambda body: relabel(label, body))

    return sample


def _in_prefix_sample(pick: Picker) -> Formula:
    a, x = pick.name(), pick.var()
    return _weaken(pick, lambda body: InPrefix(a, x, body))


def _out_sample(pick: Picker, *, payload: bool) -> Formula:
    a, other = pick.name(), pick.formula()
    if payload:
        return _weaken(pick, lambda f: OutPrefix(a, f, other))
    return _weaken(pick, lambda f: OutPrefix(a, other, f))


def _modal_payload_sample(pick: Picker, cls, *, covariant: bool) -> Formula:
    a, body = pick.name(), pick.formula()
    vary = _weaken if covariant else _strengthen
    return vary(pick, lambda f: cls(a, f, body))


def _adjoint_sample(pick: Picker, cls) -> Formula:
    a = pick.name()
    if cls is InAdjoint:
        x = pick.var()
        return _weaken(pick, lambda f: InAdjoint(f, a, x))
    return _weaken(pick, lambda f: OutAdjoint(f, a))


def _name_body_sample(pick: Picker, cls) -> Formula:
    a = pick.name()
    return _weaken(pick, lambda f: cls(a, f))


def _par_sample(pick: Picker) -> Formula:
    a, c = pick.formula(), pick.formula()
    return implies(Par(a, c), Par(or_(a, pick.formula()), c))


def _chain_sample(pick: Picker, *, after: bool) -> Formula:
    """The conclusion follows from the first premise once ``A`` is chosen so
    that the implication premise is an instance of ``A -> A``."""
    label, b = pick.label(True), pick.formula()
    if after:
        return implies(relabel(label, WeakEps(b)), relabel(label, b))
    return implies(WeakEps(relabel(label, b)), relabel(label, b))


def _mu_sample(pick: Picker) -> Formula:
    x = pick.var()
    return implies(Mu(x, or_(pick.formula(), DiaTau(PropVar(x)))), TOP)


# ---- the tables --------------------------------------------------------------


def _metas(spec: str) -> tuple[Metavar, ...]:
    return tuple(Metavar(name, SORTS[name]) for name in spec.split())


def _ax(
    id: str,
    group: str,
    template: str,
    metas: str,
    dialects: frozenset[Dialect] = ALL,
    **options,
) -> AxiomSchema:
    conditions = options.pop("conditions", ())
    return AxiomSchema(
        id, group, dialects, _metas(metas), template, side_conditions=tuple(conditions), **options
    )


def _rule(
    id: str,
    group: str,
    premises: str,
    conclusion: str,
    match: RuleMatcher,
    dialects: frozenset[Dialect] = ALL,
    **options,
) -> RuleSchema:
    return RuleSchema(
        id, group, dialects, tuple(p.strip() for p in premises.split(";")), conclusion, match,
        **options,
    )


def _bot_label(env: Bindings) -> Formula:
    return relabel(env["alpha"], BOT)


def _out_side(env: Bindings) -> Formula:
    return And(
        iff(not_free_chain(env["bs"], env["B"]), env["B"]),
        iff(NoBound(env["C"]), env["C"]),
    )


def _res_out_side(env: Bindings) -> Formula:
    parts: list[Formula] = [Neq(env["a"], b) for b in env["bs"]]
    parts += [
        Neq(env["a"], env["c"]),
        iff(NotFree(env["a"], env["B"]), env["B"]),
        iff(NoBound(env["B"]), env["B"]),
    ]
    return conjunction(parts)


def _open_side(env: Bindings) -> Formula:
    parts: list[Formula] = [Neq(env["a"], env["b"])]
    parts += [Neq(env["b"], c) for c in env["cs"]]
    parts += [
        implies(env["B"], Not(NotFree(env["b"], TOP))),
        iff(NoBound(env["B"]), env["B"]),
    ]
    return conjunction(parts)


_OUT_DERIVED = {
    "H": _out_side,
    "D": lambda env: reveal_chain(env["bs"], env["C"]),
}
_COM_DERIVED = {
    "H": _out_side,
    "D": lambda env: reveal_chain(env["bs"], env["C"]),
    "E": lambda env: reveal_chain(env["bs"], Par(env["A"], env["B"])),
}
_RES_OUT_DERIVED = {
    "H": _res_out_side,
    "D": lambda env: reveal_chain(env["bs"], env["B"]),
}
_OPEN_DERIVED = {
    "H": _open_side,
    "D": lambda env: reveal_chain(env["cs"], env["B"]),
    "E": lambda env: Reveal(env["b"], reveal_chain(env["cs"], env["B"])),
}
_OUT_CONDITIONS = (all_not_free_in("bs", "B"), bound_free("C"))
_RES_OUT_CONDITIONS = (
    not_in_list("a", "bs"),
    distinct("a", "c"),
    not_free_in("a", "B"),
    bound_free("B"),
)
_OPEN_CONDITIONS = (
    distinct("a", "b"),
    not_in_list("b", "cs"),
    occurs_in("b", "B"),
    bound_free("B"),
)
_UNSATISFIABLE_PAYLOAD = "vacuous when B is unsatisfiable; the checker never refutes it"


_BOTTOM = [
    _ax(
        "bot-dia",
        "bottom",
        "D -> F",
        "alpha",
        STRONG,
        derived={"D": _bot_label},
        conditions=[strong_label("alpha")],
    ),
    _ax("bot-in-prefix", "bottom", "in a(X).F -> F", "a X"),
    _ax("bot-out-cont", "bottom", "out a<T>.F -> F", "a"),
    _ax("bot-out-payload", "bottom", "out a<F>.T -> F", "a"),
    _ax("bot-in-adjoint", "bottom", r"F \ in a(X) -> F", "a X"),
    _ax("bot-out-adjoint", "bottom", r"F \ out a -> F", "a"),
    _ax("bot-par", "bottom", "A | F -> F", "A"),
    _ax(
        "bot-guarantee-right",
        "bottom",
        "A |> F -> F",
        "A",
        note="invalid when A is unsatisfiable; the checker never refutes it",
    ),
    _ax(
        "bot-guarantee-left",
        "bottom",
        "F |> A -> F",
        "A",
        note="F |> A holds everywhere, so the line is invalid as printed; "
        "the checker never refutes it",
    ),
    _ax("bot-reveal", "bottom", "a @ F -> F", "a"),
    _ax("bot-hide", "bottom", "F / a -> F", "a"),
    _ax("bot-not-free", "bottom", "(- a)F -> F", "a"),
    _ax("bot-fresh-name", "bottom", "(N x)F -> F", "x"),
    _ax("bot-no-bound", "bottom", "(~-)F -> F", ""),
    _ax("bot-fresh-var", "bottom", "(NV X)F -> F", "X"),
]

_STRUCTURAL = [
    _ax("par-comm", "structural", "A | B <-> B | A", "A B"),
    _ax("par-assoc", "structural", "(A | B) | C <-> A | (B | C)", "A B C"),
    _ax("par-unit", "structural", "A | 0 <-> A", "A"),
    _ax("res-nil", "structural", "a @ 0 <-> 0", "a"),
    _ax("res-swap", "structural", "a @ b @ A <-> b @ a @ A", "a b A"),
    _ax("scope-ext", "structural", "a @ ((- a)A | B) <-> (- a)A | a @ B", "a A B"),
    _ax(
        "reveal-alpha",
        "structural",
        "a @ A -> (N b) b @ D",
        "a b A",
        derived={"D": lambda env: formula_subst(env["A"], env["a"], env["b"])},
        conditions=[fresh_for("b", "a", "A")],
    ),
    _ax(
        "input-alpha",
        "structural",
        "in a(X).A -> (NV Y) in a(Y).D",
        "a X Y A",
        derived={"D": lambda env: formula_subst(env["A"], env["X"], env["Y"])},
        conditions=[fresh_for("Y", "X", "A")],
    ),
    _ax("not-free-nil", "structural", "(- a)0 <-> 0", "a"),
]

_NOT_FREE = [
    _ax("not-free-var", "not-free", "(- a)X <-> X", "a X"),
    _ax("not-free-in-subject", "not-free", "(- a)in a(X).A <-> F", "a X A"),
    _ax("not-free-out-subject", "not-free", "(- a)out a<B>.A <-> F", "a A B"),
    _ax(
        "not-free-in",
        "not-free",
        "a != b -> ((- a)in b(X).A <-> in b(X).(- a)A)",
        "a b X A",
        conditions=[distinct("a", "b")],
    ),
    _ax(
        "not-free-out",
        "not-free",
        "a != b -> ((- a)out b<B>.A <-> out b<(- a)B>.(- a)A)",
        "a b A B",
        conditions=[distinct("a", "b")],
    ),
    _ax("not-free-par", "not-free", "(- a)A | (- a)B <-> (- a)(A | B)", "a A B"),
    _ax(
        "not-free-swap",
        "not-free",
        "a != b -> ((- a)(- b)A <-> (- b)(- a)A)",
        "a b A",
        conditions=[distinct("a", "b")],
    ),
    _ax(
        "not-free-res",
        "not-free",
        "a != b -> ((- a)b @ A <-> b @ (- a)A)",
        "a b A",
        conditions=[distinct("a", "b")],
    ),
    _ax(
        "not-free-reveal",
        "not-free",
        "(- a)T -> (- a)a @ A",
        "a A",
        sampled=False,
        note="refuted by A = F on any process without a free; excluded from sampling",
    ),
]

_NO_BOUND = [
    _ax("no-bound-nil", "no-bound", "(~-)0 <-> 0", ""),
    _ax("no-bound-var", "no-bound", "(~-)X <-> X", "X"),
    _ax("no-bound-in", "no-bound", "(~-)in a(X).A <-> in a(X).(~-)A", "a X A"),
    _ax("no-bound-out", "no-bound", "(~-)out a<B>.A <-> out a<(~-)B>.(~-)A", "a A B"),
    _ax("no-bound-par", "no-bound", "(~-)A | (~-)B <-> (~-)(A | B)", "A B"),
    _ax(
        "no-bound-reveal",
        "no-bound",
        "(~-)a @ A -> F",
        "a A",
        sampled=False,
        note="0 satisfies (~-)a @ 0 because a @ 0 <-> 0; excluded from sampling",
    ),
]

_FRESH_NAME = [
    _ax("fresh-name-nil", "fresh-name", "(N x)0 <-> 0", "x"),
    _ax("fresh-name-var", "fresh-name", "(N x)X <-> X", "x X"),
    _ax(
        "fresh-name-in",
        "fresh-name",
        "(N x)in a(X).A <-> in a(X).(N x)(x != a and A)",
        "x a X A",
        conditions=[distinct("x", "a")],
    ),
    _ax(
        "fresh-name-out",
        "fresh-name",
        "(N x)out a<B>.A -> out a<(N x)(x != a and B)>.(N x)(x != a and A)",
        "x a A B",
        conditions=[distinct("x", "a")],
    ),
    _ax("fresh-name-par", "fresh-name", "(N x)(A | B) -> (N x)A | (N x)B", "x A B"),
    _ax(
        "fresh-name-reveal",
        "fresh-name",
        "(N x)(x != a and a @ A) -> a @ (N x)A",
        "x a A",
        conditions=[distinct("x", "a")],
    ),
]

_FRESH_VAR = [
    _ax("fresh-var-nil", "fresh-var", "(NV X)0 <-> 0", "X"),
    _ax(
        "fresh-var-var",
        "fresh-var",
        "(NV X)X -> Y",
        "X Y",
        sampled=False,
        note="free Y without a stated side condition; excluded from sampling",
    ),
    _ax(
        "fresh-var-in",
        "fresh-var",
        "(NV X)in a(Y).A <-> in a(Y).(NV X)A",
        "X a Y A",
        conditions=[distinct("X", "Y")],
    ),
    _ax("fresh-var-out", "fresh-var", "(NV X)out a<B>.A -> out a<(NV X)B>.(NV X)A", "X a A B"),
    _ax("fresh-var-par", "fresh-var", "(NV X)(A | B) -> (NV X)A | (NV X)B", "X A B"),
    _ax("fresh-var-reveal", "fresh-var", "(NV X)a @ A <-> a @ (NV X)A", "X a A"),
]

_ADJOINT = [
    _ax("in-adjoint-elim", "adjoint", r"in a(X).(A \ in a(X)) -> A", "a X A"),
    _ax("in-adjoint-intro", "adjoint", r"A -> (in a(X).A) \ in a(X)", "a X A"),
    _ax("out-adjoint-elim", "adjoint", r"out a<A \ out a>.0 -> A", "a A"),
    _ax("out-adjoint-intro", "adjoint", r"A -> (out a<A>.0) \ out a", "a A"),
    _ax("guarantee-elim", "adjoint", "A | (A |> B) -> B", "A B"),
    _ax("guarantee-intro", "adjoint", "A -> (B |> A | B)", "A B"),
    _ax("hide-elim", "adjoint", "a @ (A / a) -> A", "a A"),
    _ax("hide-intro", "adjoint", "A -> (a @ A) / a", "a A"),
]

_RULES = [
    _rule(
        "dia-mono",
        "rule",
        "<alpha>A; A -> B",
        "<alpha>B",
        _body(STRONG_MODALITIES),
        STRONG,
        sample=_label_sample(False),
    ),
    _rule(
        "in-mono",
        "rule",
        "in a(X).A; A -> B",
        "in a(X).B",
        _body(InPrefix),
        sample=lambda pick: _in_prefix_sample(pick),
    ),
    _rule(
        "out-mono",
        "rule",
        "out a<C>.A; A -> B",
        "out a<C>.B",
        _body(OutPrefix),
        sample=lambda pick: _out_sample(pick, payload=False),
    ),
    _rule(
        "out-payload-mono",
        "rule",
        "out a<B>.A; B -> C",
        "out a<C>.A",
        _payload(OutPrefix, covariant=True),
        sample=lambda pick: _out_sample(pick, payload=True),
    ),
    _rule(
        "dia-out-payload",
        "rule",
        "<'a<B>>A; B -> C",
        "<'a<C>>A",
        _payload(DiaOut, covariant=True),
        STRONG,
        sample=lambda pick: _modal_payload_sample(pick, DiaOut, covariant=True),
        note="written with C -> B; used covariantly, which is the sound reading",
    ),
    _rule(
        "box-in-payload",
        "rule",
        "<a[B]>A; C -> B",
        "<a[C]>A",
        _payload(BoxIn, covariant=False),
        STRONG,
        sample=lambda pick: _modal_payload_sample(pick, BoxIn, covariant=False),
    ),
    _rule(
        "in-adjoint-mono",
        "rule",
        r"A \ in a(X); A -> B",
        r"B \ in a(X)",
        _body(InAdjoint),
        sample=lambda pick: _adjoint_sample(pick, InAdjoint),
    ),
    _rule(
        "out-adjoint-mono",
        "rule",
        r"A \ out a; A -> B",
        r"B \ out a",
        _body(OutAdjoint),
        sample=lambda pick: _adjoint_sample(pick, OutAdjoint),
    ),
    _rule(
        "par-mono",
        "rule",
        "A -> B",
        "A | C -> B | C",
        _par_mono,
        closed=(0,),
        sample=lambda pick: _par_sample(pick),
    ),
    _rule(
        "reveal-mono",
        "rule",
        "a @ A; A -> B",
        "a @ B",
        _body(Reveal),
        sample=lambda pick: _name_body_sample(pick, Reveal),
    ),
    _rule(
        "not-free-mono",
        "rule",
        "(- a)A; A -> B",
        "(- a)B",
        _body(NotFree),
        sample=lambda pick: _name_body_sample(pick, NotFree),
    ),
    _rule(
        "no-bound-mono",
        "rule",
        "(~-)A; A -> B",
        "(~-)B",
        _body(NoBound),
        sample=lambda pick: _weaken(pick, NoBound),
    ),
]

_TRANSITIONS = [
    _ax("out-intro", "transition", "out a<B>.A -> <'a<B>>A", "a A B", STRONG),
    _ax(
        "in-intro",
        "transition",
        "in a(U).A and ((~-)B <-> B) -> <a[B]>D",
        "a U A B",
        STRONG,
        derived={"D": lambda env: formula_subst(env["A"], env["U"], env["B"])},
        conditions=[bound_free("B")],
        process_metas=True,
        note="sound for process-shaped A; sampled with process-shaped bodies",
    ),
    _ax("tau-par", "transition", "<tau>A | B -> <tau>(A | B)", "A B", STRONG),
    _ax("in-par", "transition", "<a<C>>A | B -> <a<C>>(A | B)", "a A B C", STRONG),
    _ax(
        "out-par",
        "transition",
        "H -> (<'a<D>>A | B -> <'a<D>>(A | B))",
        "a bs A B C",
        STRONG,
        derived=_OUT_DERIVED,
        conditions=_OUT_CONDITIONS,
    ),
    _ax(
        "com",
        "transition",
        "H -> (<'a<D>>A | <a[C]>B -> <tau>E)",
        "a bs A B C",
        STRONG,
        derived=_COM_DERIVED,
        conditions=_OUT_CONDITIONS,
    ),
    _ax(
        "res-in",
        "transition",
        "a != b and ((- a)B <-> B) and ((~-)B <-> B) -> (a @ <b<B>>A -> <b<B>>a @ A)",
        "a b A B",
        STRONG,
        conditions=[distinct("a", "b"), not_free_in("a", "B"), bound_free("B")],
    ),
    _ax(
        "res-out",
        "transition",
        "H -> (a @ <'c<D>>A -> <'c<D>>a @ A)",
        "a c bs A B",
        STRONG,
        derived=_RES_OUT_DERIVED,
        conditions=_RES_OUT_CONDITIONS,
    ),
    _ax(
        "open",
        "transition",
        "H -> (b @ <'a<D>>A -> <'a<E>>A)",
        "a b cs A B",
        STRONG,
        derived=_OPEN_DERIVED,
        conditions=_OPEN_CONDITIONS,
    ),
    _ax(
        "box-to-dia",
        "transition",
        "<a[B]>A -> <a<B>>A",
        "a A B",
        STRONG,
        note=_UNSATISFIABLE_PAYLOAD,
    ),
    _ax(
        "dia-to-box",
        "transition",
        "<a<B>>A -> <a[B]>A",
        "a A B",
        STRONG,
        conditions=[process_shaped("B")],
    ),
]

_WEAK = [
    _ax(
        "w-bot",
        "weak",
        "D -> F",
        "alpha",
        WEAK,
        derived={"D": _bot_label},
        conditions=[weak_label("alpha")],
    ),
    _rule(
        "w-dia-mono",
        "weak",
        "<<alpha>>A; A -> B",
        "<<alpha>>B",
        _body(WEAK_MODALITIES),
        WEAK,
        sample=_label_sample(True),
    ),
    _rule(
        "w-chain-after",
        "weak",
        "<<alpha>>A; A -> <<eps>>B",
        "<<alpha>>B",
        _chain_after,
        WEAK,
        sample=lambda pick: _chain_sample(pick, after=True),
    ),
    _rule(
        "w-chain-before",
        "weak",
        "<<eps>>A; A -> <<alpha>>B",
        "<<alpha>>B",
        _chain_before,
        WEAK,
        sample=lambda pick: _chain_sample(pick, after=False),
    ),
    _rule(
        "w-out-payload",
        "weak",
        "<<'a<B>>>A; B -> C",
        "<<'a<C>>>A",
        _payload(WeakOut, covariant=True),
        WEAK,
        sample=lambda pick: _modal_payload_sample(pick, WeakOut, covariant=True),
        note="written with C -> B; used covariantly, which is the sound reading",
    ),
    _rule(
        "w-box-in-payload",
        "weak",
        "<<a[B]>>>A; C -> B",
        "<<a[C]>>>A",
        _payload(WeakBoxIn, covariant=False),
        WEAK,
        sample=lambda pick: _modal_payload_sample(pick, WeakBoxIn, covariant=False),
    ),
    _ax("w-out-intro", "weak", "out a<B>.A -> <<'a<B>>>A", "a A B", WEAK),
    _ax(
        "w-in-intro",
        "weak",
        "in a(U).A and ((~-)B <-> B) -> <<a[B]>>>D",
        "a U A B",
        WEAK,
        derived={"D": lambda env: formula_subst(env["A"], env["U"], env["B"])},
        conditions=[bound_free("B")],
        process_metas=True,
        note="sound for process-shaped A; sampled with process-shaped bodies",
    ),
    _ax("w-eps-par", "weak", "<<eps>>A | B -> <<eps>>(A | B)", "A B", WEAK),
    _ax("w-in-par", "weak", "<<a<C>>>A | B -> <<a<C>>>(A | B)", "a A B C", WEAK),
    _ax(
        "w-out-par",
        "weak",
        "H -> (<<'a<D>>>A | B -> <<'a<D>>>(A | B))",
        "a bs A B C",
        WEAK,
        derived=_OUT_DERIVED,
        conditions=_OUT_CONDITIONS,
    ),
    _ax(
        "w-com",
        "weak",
        "H -> (<<'a<D>>>A | <<a[C]>>>B -> <<eps>>E)",
        "a bs A B C",
        WEAK,
        derived=_COM_DERIVED,
        conditions=_OUT_CONDITIONS,
    ),
    _ax("w-res-eps", "weak", "a @ <<eps>>A -> <<eps>>a @ A", "a A", WEAK),
    _ax(
        "w-res-in",
        "weak",
        "a != b and ((- a)B and (~-)B <-> B) -> (a @ <<b<B>>>A -> <<b<B>>>a @ A)",
        "a b A B",
        WEAK,
        conditions=[distinct("a", "b"), not_free_in("a", "B"), bound_free("B")],
    ),
    _ax(
        "w-res-out",
        "weak",
        "H -> (a @ <<'c<D>>>A -> <<'c<D>>>a @ A)",
        "a c bs A B",
        WEAK,
        derived=_RES_OUT_DERIVED,
        conditions=_RES_OUT_CONDITIONS,
    ),
    _ax(
        "w-open",
        "weak",
        "H -> (b @ <<'a<D>>>A -> <<'a<E>>>A)",
        "a b cs A B",
        WEAK,
        derived=_OPEN_DERIVED,
        conditions=_OPEN_CONDITIONS,
    ),
    _ax(
        "w-box-to-dia",
        "weak",
        "<<a[B]>>>A -> <<a<B>>>A",
        "a A B",
        WEAK,
        note=_UNSATISFIABLE_PAYLOAD,
    ),
    _ax(
        "w-dia-to-box",
        "weak",
        "<<a<B>>>A -> <<a[B]>>>A",
        "a A B",
        WEAK,
        conditions=[process_shaped("B")],
    ),
]

_FIXPOINT = [
    _ax(
        "mu-unfold",
        "fixpoint",
        "D -> M",
        "X A",
        FIXPOINT,
        derived={
            "M": lambda env: Mu(env["X"], env["A"]),
            "D": lambda env: unfold(Mu(env["X"], env["A"])),
        },
        conditions=[
            SideCondition("X positive in A", lambda env: positive_in(env["X"], env["A"]))
        ],
    ),
    _rule(
        "mu-ind",
        "fixpoint",
        "A(B) -> B",
        "mu X.A(X) -> B",
        _mu_induction,
        FIXPOINT,
        closed=(0,),
        sample=lambda pick: _mu_sample(pick),
    ),
]

CATALOGUE: dict[str, Schema] = {
    s.id: s
    for s in (
        _BOTTOM
        + _STRUCTURAL
        + _NOT_FREE
        + _NO_BOUND
        + _FRESH_NAME
        + _FRESH_VAR
        + _ADJOINT
        + _RULES
        + _TRANSITIONS
        + _WEAK
        + _FIXPOINT
    )
}

GROUPS = tuple(dict.fromkeys(s.group for s in CATALOGUE.values()))


def schema(id: str) -> Schema:
    try:
        return CATALOGUE[id]
    except KeyError:
        raise InputError(f"unknown axiom or rule '{id}'") from None


def axiom(id: str) -> AxiomSchema:
    found = schema(id)
    if not isinstance(found, AxiomSchema):
        raise InputError(f"'{id}' is a rule, not an axiom")
    return found


def rule(id: str) -> RuleSchema:
    found = schema(id)
    if not isinstance(found, RuleSchema):
        raise InputError(f"'{id}' is an axiom, not a rule")
    return found


def instantiate_axiom(id: str, bindings: Bindings) -> Formula:
    """The instance of axiom ``id``; raises ``SideConditionError`` when a
    side condition fails on ``bindings``."""
    return axiom(id).instantiate(bindings)


def schemas_for(dialect: Dialect) -> list[Schema]:
    return [s for s in CATALOGUE.values() if dialect in s.dialects]
