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

"""Canonical forms for structural congruence.

At every spatial level the term is flattened into a multiset of threads
(inputs, outputs, variables) under a set of restrictions. Unused
restrictions are erased; each remaining restriction is pushed down to the
connected group of threads that share it. Groups are printed with
traversal-indexed labels (``n0, n1, ...`` for names, ``X0, X1, ...`` for
variables) and sorted by their printed form, so two terms are congruent
exactly when their canonical forms print identically.

Labelling a group with ``k`` restrictions minimizes over the ``k!`` label
assignments. Above ``MAX_CERTIFIED_BINDERS`` the first-occurrence order is
used instead and the result is flagged as uncertified.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .substitution import rename_name, substitute
from .syntax import show
from .terms import (
    NIL,
    UNUSED,
    Input,
    Name,
    Nil,
    Output,
    Par,
    Process,
    ProcVar,
    Res,
    Var,
    par_of,
    res_of,
)

logger = logging.getLogger(__name__)

MAX_CERTIFIED_BINDERS = 6


@dataclass(frozen=True)
class CanonicalProcess:
    process: Process
    certified: bool = True

    @property
    def key(self) -> str:
        return show(self.process)

    def __str__(self) -> str:
        return self.key


class _Canonicalizer:
    def __init__(self, name_prefix: str, var_prefix: str):
        self.name_prefix = name_prefix
        self.var_prefix = var_prefix
        self.certified = True
        self._memo: dict[tuple[str, int, int], Process] = {}
        self._counter = itertools.count()

    def _internal(self) -> Name:
        # '#' is outside the NAME alphabet, so internal ids never clash.
        return f"#{next(self._counter)}"

    def level(self, p: Process, d: int, v: int) -> Process:
        """Canonical form of a spatial level; new name labels start at ``d``,
        new variable labels at ``v``."""
        memo_key = (show(p), d, v)
        cached = self._memo.get(memo_key)
        if cached is not None:
            return cached

        binders: list[Name] = []
        threads: list[Process] = []
        self._flatten(p, binders, threads)

        # union-find over threads sharing a restricted name
        parent = list(range(len(threads)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        owner: dict[Name, int] = {}
        for index, thread in enumerate(threads):
            for name in thread.free_names:
                if name in binders:
                    if name in owner:
                        parent[find(index)] = find(owner[name])
                    else:
                        owner[name] = index

        groups: dict[int, list[int]] = {}
        for index in range(len(threads)):
            groups.setdefault(find(index), []).append(index)

        canonical: list[Process] = []
        for members in groups.values():
            group_threads = [threads[i] for i in members]
            group_names = [b for b in binders if b in owner and find(owner[b]) == find(members[0])]
            canonical.append(self._group(group_threads, group_names, d, v))

        result = par_of(sorted(canonical, key=show))
        self._memo[memo_key] = result
        return result

    def _flatten(self, p: Process, binders: list[Name], threads: list[Process]) -> None:
        match p:
            case Nil():
                return
            case Par(left, right):
                self._flatten(left, binders, threads)
                self._flatten(right, binders, threads)
            case Res(binder, body):
                internal = self._internal()
                binders.append(internal)
                self._flatten(rename_name(body, binder, internal), binders, threads)
            case _:
                threads.append(p)

    def _group(self, threads: list[Process], names: list[Name], d: int, v: int) -> Process:
        k = len(names)
        labels = [f"{self.name_prefix}{d + i}" for i in range(k)]
        if k > MAX_CERTIFIED_BINDERS:
            self.certified = False
            logger.warning(
                "%d restrictions in one group; using first-occurrence order (uncertified)", k
            )
            orders: Iterable[tuple[Name, ...]] = [tuple(names)]
        else:
            orders = itertools.permutations(names)

        best: Optional[tuple[str, ...]] = None
        best_threads: list[Process] = []
        for order in orders:
            renamed = []
            for thread in threads:
                for internal, label in zip(order, labels):
                    thread = rename_name(thread, internal, label)
                renamed.append(self.thread(thread, d + k, v))
            renamed.sort(key=show)
            candidate = tuple(show(t) for t in renamed)
            if best is None or candidate < best:
                best, best_threads = candidate, renamed
        return res_of(labels, par_of(best_threads))

    def thread(self, p: Process, d: int, v: int) -> Process:
        match p:
            case Input(subject, binder, body):
                if binder == UNUSED or binder not in body.free_vars:
                    return Input(subject, UNUSED, self.level(body, d, v))
                label = f"{self.var_prefix}{v}"
                body = substitute(body, binder, Var(label))
                return Input(subject, label, self.level(body, d, v + 1))
            case Output(subject, payload, cont):
                return Output(subject, self.level(payload, d, v), self.level(cont, d, v))
        return p


def _prefixes(processes: Iterable[Process]) -> tuple[str, str]:
    free_names: set[Name] = set()
    free_vars: set[ProcVar] = set()
    for p in processes:
        free_names |= p.free_names
        free_vars |= p.free_vars

    def choose(base: str, taken: set[str]) -> str:
        prefix = base
        while any(re.fullmatch(re.escape(prefix) + r"\d+", t) for t in taken):
            prefix += base[-1]
        return prefix

    return choose("n", free_names), choose("X", free_vars)


def normalize(p: Process, *, _also: Iterable[Process] = ()) -> CanonicalProcess:
    """Canonical representative of the structural-congruence class of ``p``."""
    canonicalizer = _Canonicalizer(*_prefixes([p, *_also]))
    process = canonicalizer.level(p, 0, 0)
    return CanonicalProcess(process, canonicalizer.certified)


def canonical_key(p: Process) -> str:
    return normalize(p).key


def congruent(p: Process, q: Process) -> bool:
    """``p == q`` up to the structural congruence axioms and alpha-conversion."""
    if p.free_names != q.free_names or p.free_vars != q.free_vars:
        return False
    return normalize(p, _also=[q]).key == normalize(q, _also=[p]).key


def standard_form(p: Process) -> Process:
    """The canonical layout of ``p`` with the original binder spellings.

    Same component order and restriction placement as ``normalize``, but
    each restriction keeps the name it had in ``p`` (made unique first), so
    proofs can relate ``p`` to it without an alpha step. Only the top level
    is rearranged; inputs and outputs are left untouched.
    """
    from .substitution import freshen_bound

    p = freshen_bound(p)
    binders: list[Name] = []
    threads: list[Process] = []
    _collect(p, binders, threads)
    used = [b for b in binders if any(b in t.free_names for t in threads)]

    canonicalizer = _Canonicalizer(*_prefixes([p]))
    keyed = [(show(canonicalizer.level(t, 0, 0)), t) for t in threads]

    parent = list(range(len(threads)))

    def find(i: int) -> int:
        while parent[i] != i:
            i = parent[i]
        return i

    for name in used:
        holders = [i for i, t in enumerate(threads) if name in t.free_names]
        for other in holders[1:]:
            parent[find(other)] = find(holders[0])

    groups: dict[int, list[int]] = {}
    for index in range(len(threads)):
        groups.setdefault(find(index), []).append(index)

    result = []
    for members in groups.values():
        member_threads = sorted((keyed[i] for i in members), key=lambda item: item[0])
        names = [b for b in used if any(b in threads[i].free_names for i in members)]
        body = par_of(t for _, t in member_threads)
        group = res_of(names, body)
        result.append((canonical_key(group), group))
    result.sort(key=lambda item: item[0])
    return par_of(g for _, g in result)


def _collect(p: Process, binders: list[Name], threads: list[Process]) -> None:
    match p:
        case Nil():
            return
        case Par(left, right):
            _collect(left, binders, threads)
            _collect(right, binders, threads)
        case Res(binder, body):
            binders.append(binder)
            _collect(body, binders, threads)
        case _:
            threads.append(p)


def map_threads(p: Process, fn: Callable[[Process], Process]) -> Process:
    """Apply ``fn`` to every thread of the top spatial level of ``p``."""
    match p:
        case Par(left, right):
            return Par(map_threads(left, fn), map_threads(right, fn))
        case Res(binder, body):
            return Res(binder, map_threads(body, fn))
        case Nil():
            return NIL
    return fn(p)
