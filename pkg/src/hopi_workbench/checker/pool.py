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

"""Deterministic candidate pool for payload and guarantee quantifiers."""

import logging
from typing import Iterable

from ..logic import Formula, as_process, walk
from ..process import Process, canonical_key, enumerate_processes, fresh_name, normalize, subterms
from .budget import Budget

logger = logging.getLogger(__name__)


class CandidatePool:
    """Closed subterms of the inputs followed by generated restriction-free
    terms, deduplicated up to structural congruence and capped at
    ``budget.pool_size``."""

    def __init__(self, budget: Budget, processes: Iterable[Process], formulas: Iterable[Formula]):
        self.budget = budget
        processes = list(processes)
        formulas = list(formulas)
        names: set[str] = set()
        seeds: list[Process] = []
        for p in processes:
            names |= p.free_names
            seeds.extend(subterms(p))
        for a in formulas:
            names |= a.free_names
            for sub in walk(a):
                shaped = as_process(sub)
                if shaped is not None:
                    seeds.extend(subterms(shaped))
        self.names = tuple(sorted(names)) + (fresh_name(names, "z"),)
        self._members = self._build(seeds)
        logger.debug(
            "candidate pool: %d terms over names %s", len(self._members), ", ".join(self.names)
        )

    def _build(self, seeds: list[Process]) -> list[Process]:
        limit = self.budget.pool_size
        seen: set[str] = set()
        members: list[Process] = []

        def offer(p: Process) -> bool:
            if len(members) >= limit:
                return False
            if p.closed:
                key = canonical_key(p)
                if key not in seen:
                    seen.add(key)
                    members.append(normalize(p).process)
            return True

        for p in seeds:
            if not offer(p):
                return members
        if self.budget.payload_depth > 0:
            for p in enumerate_processes(
                self.names, (), self.budget.payload_depth, closed=True, restrictions=False
            ):
                if not offer(p):
                    break
        return members

    @property
    def members(self) -> list[Process]:
        return list(self._members)

    def payloads(self) -> list[Process]:
        """Members without bound names, the only ones an input can receive."""
        return [p for p in self._members if not p.bound_names]

    def __len__(self) -> int:
        return len(self._members)
