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

"""Readers for the text fixtures shipped in this package directory."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Optional, Union

from ..errors import InputError, ParseError
from ..logic import Formula, parse_formula, show_formula
from ..process import Process, parse_process, show

logger = logging.getLogger(__name__)

CORPUS_DIR = Path(__file__).resolve().parent
PAIRS_FILE = CORPUS_DIR / "pairs.txt"
REFINEMENT_FILE = CORPUS_DIR / "refinement.txt"
ALPHA_FILE = CORPUS_DIR / "alpha.txt"

Expectation = Literal["equivalent", "distinguishable"]


@dataclass(frozen=True)
class CuratedPair:
    expected: Expectation
    p: Process
    q: Process
    line: int

    def to_json(self) -> dict:
        return {"expected": self.expected, "p": show(self.p), "q": show(self.q)}


@dataclass(frozen=True)
class Refinement:
    """A process and two formulas with ``process |= spec`` and ``spec -> refines``."""

    process: Process
    spec: Formula
    refines: Formula

    def to_json(self) -> dict:
        return {
            "process": show(self.process),
            "spec": show_formula(self.spec),
            "refines": show_formula(self.refines),
        }


def corpus_path(name: Union[str, Path]) -> Path:
    """``name`` inside the packaged corpus; a leading ``corpus/`` is accepted."""
    path = Path(name)
    if path.parts and path.parts[0] == "corpus":
        path = Path(*path.parts[1:])
    return CORPUS_DIR / path


def _lines(path: Path):
    for number, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _parsed(parse, text: str, path: Path, line: int):
    try:
        return parse(text, source=str(path))
    except ParseError as exc:
        raise exc.with_source(str(path), line - 1) from None


def _pair(text: str, path: Path, line: int) -> tuple[Process, Process]:
    left, sep, right = text.partition("~")
    if not sep:
        raise InputError(f"{path}:{line}: expected '<p> ~ <q>'")
    return (
        _parsed(parse_process, left.strip(), path, line),
        _parsed(parse_process, right.strip(), path, line),
    )


def load_pairs(path: Optional[Path] = None) -> list[CuratedPair]:
    path = path or PAIRS_FILE
    pairs = []
    for number, line in _lines(path):
        expected, sep, rest = line.partition(":")
        expected = expected.strip()
        if not sep or expected not in ("equivalent", "distinguishable"):
            raise InputError(f"{path}:{number}: expected 'equivalent:' or 'distinguishable:'")
        p, q = _pair(rest, path, number)
        pairs.append(CuratedPair(expected, p, q, number))
    logger.debug("loaded %d curated pair(s) from %s", len(pairs), path)
    return pairs


def load_alpha(path: Optional[Path] = None) -> list[tuple[Process, Process]]:
    path = path or ALPHA_FILE
    return [_pair(line, path, number) for number, line in _lines(path)]


def load_refinement(path: Optional[Path] = None) -> Refinement:
    path = path or REFINEMENT_FILE
    fields: dict[str, tuple[str, int]] = {}
    for number, line in _lines(path):
        key, sep, value = line.partition(":")
        if not sep or key.strip() not in ("process", "spec", "refines"):
            raise InputError(f"{path}:{number}: expected 'process:', 'spec:' or 'refines:'")
        fields[key.strip()] = (value.strip(), number)
    missing = {"process", "spec", "refines"} - set(fields)
    if missing:
        raise InputError(f"{path}: missing {', '.join(sorted(missing))}")

    def read(key: str, parse):
        text, number = fields[key]
        return _parsed(parse, text, path, number)

    return Refinement(
        read("process", parse_process), read("spec", parse_formula), read("refines", parse_formula)
    )
