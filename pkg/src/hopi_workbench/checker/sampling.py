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

"""Validity sampling: instances of a catalogue line checked on random processes.

A ``fails`` verdict on any instance refutes the line and raises
``SoundnessViolation``; ``unknown`` verdicts are counted, never hidden.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from ..corpus.generate import TermGenerator
from ..errors import InputError, SideConditionError, SoundnessViolation
from ..logic import Dialect, Formula, embed, show_formula
from ..process import Process, show
from ..proofs.catalogue import FORMULA, LABEL, NAME, NAMES, VAR, AxiomSchema, Schema, schema
from .budget import DEFAULT_BUDGET, Budget
from .engine import check

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 20
PROCESS_SIZE = 3


@dataclass(frozen=True)
class Refutation:
    instance: Formula
    process: Process

    def to_json(self) -> dict:
        return {"instance": show_formula(self.instance), "process": show(self.process)}


@dataclass
class SamplingReport:
    schema: str
    trials: int
    sampled: bool = True
    instances: int = 0
    checks: int = 0
    holds: int = 0
    unknown: int = 0
    rejected_bindings: int = 0
    refutation: Optional[Refutation] = None
    examples: list[str] = field(default_factory=list)

    @property
    def fails(self) -> int:
        return 0 if self.refutation is None else 1

    def to_json(self, budget: Optional[Budget] = None) -> dict:
        return {
            "schema": self.schema,
            "sampled": self.sampled,
            "trials": self.trials,
            "instances": self.instances,
            "checks": self.checks,
            "holds": self.holds,
            "unknown": self.unknown,
            "fails": self.fails,
            "rejected_bindings": self.rejected_bindings,
            "refutation": None if self.refutation is None else self.refutation.to_json(),
            "budget": (budget or DEFAULT_BUDGET).to_json(),
        }


class _Instances:
    """Random bindings for one schema; rules come with their own sampler."""

    def __init__(self, found: Schema, generator: TermGenerator):
        self.schema = found
        self.generator = generator

    def build(self, report: SamplingReport) -> Optional[Formula]:
        for _ in range(MAX_ATTEMPTS):
            try:
                if isinstance(self.schema, AxiomSchema):
                    return self.schema.instantiate(self._bindings())
                return self.schema.sample(self.generator)
            except SideConditionError as error:
                report.rejected_bindings += 1
                logger.debug("rejected bindings: %s", error)
        return None

    def _bindings(self) -> dict:
        gen = self.generator
        bindings: dict = {}
        variables: list[str] = []
        weak = Dialect.WL in self.schema.dialects and Dialect.SL not in self.schema.dialects
        for meta in self.schema.metavars:
            if meta.sort == NAME:
                bindings[meta.name] = gen.name()
            elif meta.sort == VAR:
                bindings[meta.name] = gen.var()
                variables.append(bindings[meta.name])
            elif meta.sort == NAMES:
                bindings[meta.name] = gen.names_list()
            elif meta.sort == LABEL:
                bindings[meta.name] = gen.label(weak)
        for meta in self.schema.metavars:
            if meta.sort == FORMULA:
                bindings[meta.name] = self._formula(variables, weak)
        return bindings

    def _formula(self, variables: list[str], weak: bool) -> Formula:
        gen = self.generator
        if self.schema.process_metas:
            closed = not variables or gen.random.random() < 0.5
            return embed(gen.process(PROCESS_SIZE, closed=closed, variables=variables or None))
        if gen.random.random() < 0.5:
            return embed(gen.process(PROCESS_SIZE))
        return gen.formula(dialect=Dialect.WL if weak else _dialect(self.schema))


def _dialect(found: Schema) -> Dialect:
    if Dialect.SL in found.dialects:
        return Dialect.SL
    return next(iter(found.dialects))


def validity_sample(
    schema_id: str,
    trials: int = 50,
    budget: Budget = DEFAULT_BUDGET,
    *,
    seed: int = 0,
    processes: int = 2,
) -> SamplingReport:
    """Check ``trials`` random instances of a catalogue line, each on
    ``processes`` random closed processes."""
    found = schema(schema_id)
    report = SamplingReport(found.id, trials, sampled=found.sampled)
    if not found.sampled:
        logger.warning("%s is excluded from validity sampling: %s", found.id, found.note or "")
        return report
    generator = TermGenerator(seed, dialect=_dialect(found))
    instances = _Instances(found, generator)
    for _ in range(trials):
        instance = instances.build(report)
        if instance is None:
            continue
        report.instances += 1
        if len(report.examples) < 3:
            report.examples.append(show_formula(instance))
        _check_instance(report, instance, generator, processes, budget)
    logger.debug(
        "%s: %d instance(s), %d holds, %d unknown",
        found.id,
        report.instances,
        report.holds,
        report.unknown,
    )
    return report


def spot_check(
    a: Formula,
    trials: int = 20,
    budget: Budget = DEFAULT_BUDGET,
    *,
    seed: int = 0,
    label: str = "<formula>",
) -> SamplingReport:
    """Check one formula on ``trials`` random closed processes."""
    report = SamplingReport(label, trials, instances=1, examples=[show_formula(a)])
    _check_instance(report, a, TermGenerator(seed), trials, budget)
    return report


def _check_instance(
    report: SamplingReport,
    instance: Formula,
    generator: TermGenerator,
    processes: int,
    budget: Budget,
) -> None:
    for _ in range(processes):
        p = generator.process(PROCESS_SIZE)
        try:
            verdict = check(p, instance, budget)
        except InputError as error:
            logger.debug("instance not checkable: %s", error)
            continue
        report.checks += 1
        if verdict.fails:
            report.refutation = Refutation(instance, p)
            raise SoundnessViolation(report)
        if verdict.holds:
            report.holds += 1
        else:
            report.unknown += 1
