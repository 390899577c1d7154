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

"""Line-oriented proof scripts.

::

    # comment
    dialect: musl
    premise: A
    goal: A | 0
    1: A BY premise(1)
    2: A | 0 <-> A BY axiom(par-unit; A := A)
    3: A | 0 BY taut(1, 2)

Justifications: ``premise(k)``, ``axiom(id; m := v, ...)``, ``taut``,
``taut(i, j, ...)``, ``mp(i, j)``, ``rule(id; i[, j])``, ``muind(i)`` and
``fresh``. Name lists are written ``[b c]``; a label binding is the modality
alone, ``alpha := <'a<0>>``.
"""

from __future__ import annotations

import logging
import re
from typing import Optional

from ..errors import InputError, ParseError
from ..logic import TOP, Dialect, Formula, parse_formula, show_formula
from ..logic.formulas import STRONG_MODALITIES, WEAK_MODALITIES
from .catalogue import FORMULA, LABEL, NAME, NAMES, SORTS, VAR, Binding
from .kernel import MP, Axiom, Fresh, MuInd, Premise, Proof, Rule, Sequent, Step, Taut

logger = logging.getLogger(__name__)

_STEP = re.compile(r"\s*(\d+)\s*:\s*")
_HEADER = re.compile(r"\s*(dialect|premise|goal)\s*:\s*")
_JUSTIFICATIONS = [
    (re.compile(r"premise\((\d+)\)"), lambda m: Premise(int(m[1]))),
    (re.compile(r"taut(?:\(([\d,\s]*)\))?"), lambda m: Taut(_numbers(m[1] or ""))),
    (re.compile(r"mp\((\d+)\s*,\s*(\d+)\)"), lambda m: MP(int(m[1]), int(m[2]))),
    (re.compile(r"rule\(([\w-]+)\s*;\s*([\d,\s]+)\)"), lambda m: Rule(m[1], _numbers(m[2]))),
    (re.compile(r"muind\((\d+)\)"), lambda m: MuInd(int(m[1]))),
    (re.compile(r"fresh"), lambda m: Fresh()),
]
_AXIOM = re.compile(r"axiom\(([\w-]+)\s*(?:;(.*))?\)")
_NAME = re.compile(r"[a-z][A-Za-z0-9_']*")
_VAR = re.compile(r"[A-Z][A-Za-z0-9_']*")


def _numbers(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.replace(",", " ").split())


class _Reader:
    def __init__(self, text: str, source: str):
        self.text = text
        self.source = source
        self.line = 0

    def error(self, message: str, column: int = 1) -> ParseError:
        return ParseError(message, source=self.source, line=self.line, column=column)

    def formula(self, text: str, column: int) -> Formula:
        try:
            return parse_formula(text, source=self.source)
        except ParseError as exc:
            raise exc.with_source(self.source, self.line - 1, column - 1) from None

    def read(self) -> Proof:
        dialect = Dialect.SL
        premises: list[Formula] = []
        goal: Optional[Formula] = None
        steps: list[Step] = []
        for self.line, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.rstrip()
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            header = _HEADER.match(line)
            if header:
                if steps:
                    raise self.error(f"'{header[1]}' must come before the steps")
                value, column = line[header.end() :], header.end() + 1
                if header[1] == "dialect":
                    dialect = self.dialect(value.strip(), column)
                elif header[1] == "premise":
                    premises.append(self.formula(value, column))
                else:
                    goal = self.formula(value, column)
                continue
            step = _STEP.match(line)
            if step is None:
                raise self.error("expected 'dialect:', 'premise:', 'goal:' or a numbered step")
            if int(step[1]) != len(steps) + 1:
                raise self.error(f"expected step {len(steps) + 1}, found step {step[1]}")
            steps.append(self.step(line, step.end()))
        if goal is None:
            raise self.error("the script has no 'goal:' line")
        return Proof(Sequent(tuple(premises), goal, dialect), tuple(steps))

    def dialect(self, value: str, column: int) -> Dialect:
        try:
            return Dialect(value.lower())
        except ValueError:
            raise self.error(f"unknown dialect '{value}'", column) from None

    def step(self, line: str, start: int) -> Step:
        cut = line.rfind(" BY ")
        if cut < start:
            raise self.error("step has no ' BY ' justification", start + 1)
        formula = self.formula(line[start:cut], start + 1)
        return Step(formula, self.justification(line[cut + 4 :].strip(), cut + 5))

    def justification(self, text: str, column: int):
        axiom = _AXIOM.fullmatch(text)
        if axiom:
            offset = column + (axiom.start(2) if axiom[2] is not None else 0)
            return Axiom(axiom[1], self.bindings(axiom[2] or "", offset))
        for pattern, build in _JUSTIFICATIONS:
            match = pattern.fullmatch(text)
            if match:
                return build(match)
        raise self.error(f"unrecognised justification '{text}'", column)

    def bindings(self, text: str, column: int) -> dict[str, Binding]:
        result: dict[str, Binding] = {}
        position = 0
        for part in text.split(","):
            if not part.strip():
                position += len(part) + 1
                continue
            name, sep, value = part.partition(":=")
            name = name.strip()
            if not sep:
                raise self.error(f"binding '{part.strip()}' has no ':='", column + position)
            if name in result:
                raise self.error(f"'{name}' is bound twice", column + position)
            leading = len(value) - len(value.lstrip())
            value_column = column + position + len(part) - len(value) + leading
            result[name] = self.binding(name, value.strip(), value_column)
            position += len(part) + 1
        return result

    def binding(self, name: str, value: str, column: int) -> Binding:
        sort = SORTS.get(name)
        if sort is None:
            raise self.error(f"'{name}' is not a metavariable", column)
        if sort == FORMULA:
            return self.formula(value, column)
        if sort == NAME and _NAME.fullmatch(value):
            return value
        if sort == VAR and _VAR.fullmatch(value):
            return value
        if sort == NAMES and value.startswith("[") and value.endswith("]"):
            names = tuple(value[1:-1].split())
            if all(_NAME.fullmatch(n) for n in names):
                return names
        if sort == LABEL:
            label = self.formula(value + " T", column)
            if isinstance(label, STRONG_MODALITIES + WEAK_MODALITIES) and label.body == TOP:
                return label
        raise self.error(f"'{value}' is not a valid {sort} for '{name}'", column)


def parse_script(text: str, *, source: str = "<script>") -> Proof:
    """Read a proof script; positions in errors refer to ``source``."""
    proof = _Reader(text, source).read()
    logger.debug("%s: read %d step(s)", source, len(proof.steps))
    return proof


# ---- rendering ---------------------------------------------------------------


def _render_binding(name: str, value: Binding) -> str:
    if isinstance(value, tuple):
        return "[" + " ".join(value) + "]"
    if isinstance(value, str):
        return value
    if SORTS.get(name) == LABEL:
        return show_formula(value).removesuffix("T")
    return show_formula(value)


def _render_justification(why) -> str:
    match why:
        case Premise(index):
            return f"premise({index})"
        case Axiom(schema, bindings):
            if not bindings:
                return f"axiom({schema})"
            pairs = ", ".join(f"{k} := {_render_binding(k, v)}" for k, v in bindings.items())
            return f"axiom({schema}; {pairs})"
        case Taut(cited):
            return f"taut({', '.join(map(str, cited))})" if cited else "taut"
        case MP(first, second):
            return f"mp({first}, {second})"
        case Rule(rule, premises):
            return f"rule({rule}; {', '.join(map(str, premises))})"
        case MuInd(premise):
            return f"muind({premise})"
        case Fresh():
            return "fresh"
    raise InputError(f"cannot render justification {why!r}")


def render_script(proof: Proof, comment: str = "") -> str:
    """The script text of ``proof``; ``parse_script`` reads it back."""
    lines = [f"# {line}" for line in comment.splitlines()]
    lines.append(f"dialect: {proof.goal.dialect.value}")
    lines.extend(f"premise: {show_formula(p)}" for p in proof.goal.premises)
    lines.append(f"goal: {show_formula(proof.goal.conclusion)}")
    for number, step in enumerate(proof.steps, start=1):
        lines.append(
            f"{number}: {show_formula(step.formula)} BY {_render_justification(step.justification)}"
        )
    return "\n".join(lines) + "\n"
