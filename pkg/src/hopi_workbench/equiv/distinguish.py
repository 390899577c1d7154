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

"""Distinguishing formulas of the sublogic L.

Formulas are enumerated by size from the barb formulas upwards, closing
under negation, conjunction, ``<tau>`` and guarantees whose left operand
spells a process of the candidate pool. The first formula on which the two
processes get opposite definite verdicts is the witness.
"""

import itertools
import logging
from typing import Iterable, Iterator

from ..checker import DEFAULT_BUDGET, Budget, CandidatePool, check
from ..errors import InputError
from ..logic import And, DiaTau, Formula, Guarantee, Not, barb_formula, embed, show_formula
from ..process import Process, fresh_name, show
from .report import EquivReport, Result

logger = logging.getLogger(__name__)

DEFAULT_SIZE_BOUND = 6
BARB_SIZE = 3


def l_formulas(names: Iterable[str], guards: list[Formula], size_bound: int) -> Iterator[Formula]:
    """Formulas of L up to ``size_bound`` constructors, smallest first."""
    names = sorted(set(names))
    layers: dict[int, list[Formula]] = {}
    for size in range(1, size_bound + 1):
        layer: list[Formula] = []
        if size == BARB_SIZE:
            for name in names:
                layer.append(barb_formula(name, True))
                layer.append(barb_formula(name, False))
        for smaller in layers.get(size - 1, []):
            layer.append(Not(smaller))
            layer.append(DiaTau(smaller))
        for left_size in range(BARB_SIZE, size - BARB_SIZE):
            right_size = size - 1 - left_size
            if right_size < left_size:
                break
            pairs = itertools.product(layers.get(left_size, []), layers.get(right_size, []))
            for left, right in pairs:
                if left_size < right_size or show_formula(left) < show_formula(right):
                    layer.append(And(left, right))
        for guard in guards:
            for body in layers.get(size - 1 - guard.size, []):
                layer.append(Guarantee(guard, body))
        layers[size] = layer
        yield from layer


def distinguish_l(
    p: Process,
    q: Process,
    size_bound: int = DEFAULT_SIZE_BOUND,
    budget: Budget = DEFAULT_BUDGET,
) -> EquivReport:
    """The first L formula, by size, that holds of ``p`` and fails on ``q``.

    A formula that fails on ``p`` and holds of ``q`` is reported negated.
    """
    if not p.closed or not q.closed:
        raise InputError("distinguishing formulas are searched for closed processes only")
    bounds = {"size_bound": size_bound, "budget": budget.to_json()}
    names = p.free_names | q.free_names
    names = names | {fresh_name(names, "z")}
    pool = CandidatePool(budget, [p, q], [])
    guards = [embed(e) for e in pool.members if e.size <= size_bound - 1 - BARB_SIZE]
    searched = 0
    for formula in l_formulas(names, guards, size_bound):
        searched += 1
        left = check(p, formula, budget)
        if not left.definite:
            continue
        right = check(q, formula, budget)
        if not right.definite or left.outcome is right.outcome:
            continue
        witness = formula if left.holds else Not(formula)
        logger.debug("distinguished %s and %s after %d formula(s)", show(p), show(q), searched)
        return EquivReport(Result.DISTINGUISHED, bounds, formula=witness)
    logger.debug("no distinction among %d formula(s)", searched)
    return EquivReport(Result.NONE_FOUND, bounds)


def recheck(p: Process, q: Process, report: EquivReport, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Whether a formula witness holds of ``p`` and fails on ``q``."""
    if report.formula is None:
        return False
    first = check(p, report.formula, budget)
    second = check(q, report.formula, budget)
    return first.holds and second.fails
