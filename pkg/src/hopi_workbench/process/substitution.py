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

"""Capture-avoiding substitution, renaming and alpha-equivalence on processes."""

from typing import Optional

from .terms import (
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
    fresh_name,
    fresh_var,
)


def substitute(p: Process, u: ProcVar, e: Process) -> Process:
    """``P{E/U}``: replace free occurrences of ``u`` by ``e``.

    Input binders that would capture a free variable of ``e`` and restriction
    binders that would capture a free name of ``e`` are freshened first.
    """
    if u not in p.free_vars:
        return p
    match p:
        case Var():
            return e
        case Input(subject, binder, body):
            if binder in e.free_vars:
                renamed = fresh_var(e.free_vars | body.free_vars | body.bound_vars | {u}, binder)
                body = substitute(body, binder, Var(renamed))
                binder = renamed
            return Input(subject, binder, substitute(body, u, e))
        case Output(subject, payload, cont):
            return Output(subject, substitute(payload, u, e), substitute(cont, u, e))
        case Par(left, right):
            return Par(substitute(left, u, e), substitute(right, u, e))
        case Res(binder, body):
            if binder in e.free_names:
                renamed = fresh_name(e.free_names | body.names, binder)
                body = rename_name(body, binder, renamed)
                binder = renamed
            return Res(binder, substitute(body, u, e))
    return p


def rename_var(p: Process, old: ProcVar, new: ProcVar) -> Process:
    return substitute(p, old, Var(new))


def rename_name(p: Process, old: Name, new: Name) -> Process:
    """``P{new/old}`` on free occurrences of the name ``old``."""
    if old == new or old not in p.free_names:
        return p
    match p:
        case Input(subject, binder, body):
            return Input(new if subject == old else subject, binder, rename_name(body, old, new))
        case Output(subject, payload, cont):
            return Output(
                new if subject == old else subject,
                rename_name(payload, old, new),
                rename_name(cont, old, new),
            )
        case Par(left, right):
            return Par(rename_name(left, old, new), rename_name(right, old, new))
        case Res(binder, body):
            if binder == new:
                renamed = fresh_name(body.names | {old, new}, binder)
                body = rename_name(body, binder, renamed)
                binder = renamed
            return Res(binder, rename_name(body, old, new))
    return p


def freshen_bound(p: Process, avoid: frozenset[Name] = frozenset()) -> Process:
    """Alpha-rename restriction binders so that every one is distinct from
    every other binder, from the free names of ``p`` and from ``avoid``.

    Original spellings are kept where they are already unique.
    """
    used = set(p.free_names) | set(avoid)

    def walk(q: Process) -> Process:
        match q:
            case Input(subject, binder, body):
                return Input(subject, binder, walk(body))
            case Output(subject, payload, cont):
                return Output(subject, walk(payload), walk(cont))
            case Par(left, right):
                left = walk(left)
                return Par(left, walk(right))
            case Res(binder, body):
                if binder in used:
                    renamed = fresh_name(used | body.names, binder)
                    body = rename_name(body, binder, renamed)
                    binder = renamed
                used.add(binder)
                return Res(binder, walk(body))
        return q

    return walk(p)


def alpha_equivalent(p: Process, q: Process) -> bool:
    """Equality up to renaming of bound names and bound variables."""
    return _alpha(p, q, {}, {}, {}, {}, 0)


def _alpha(
    p: Process,
    q: Process,
    names_p: dict[Name, int],
    names_q: dict[Name, int],
    vars_p: dict[ProcVar, int],
    vars_q: dict[ProcVar, int],
    level: int,
) -> bool:
    def same_name(a: Name, b: Name) -> bool:
        return _lookup(names_p, a) == _lookup(names_q, b) and (a in names_p or a == b)

    match p, q:
        case Nil(), Nil():
            return True
        case Var(x), Var(y):
            return _lookup(vars_p, x) == _lookup(vars_q, y) and (x in vars_p or x == y)
        case Input(a, x, body_p), Input(b, y, body_q):
            if not same_name(a, b):
                return False
            inner_p = _bind(vars_p, x, level)
            inner_q = _bind(vars_q, y, level)
            return _alpha(body_p, body_q, names_p, names_q, inner_p, inner_q, level + 1)
        case Output(a, e_p, c_p), Output(b, e_q, c_q):
            return (
                same_name(a, b)
                and _alpha(e_p, e_q, names_p, names_q, vars_p, vars_q, level)
                and _alpha(c_p, c_q, names_p, names_q, vars_p, vars_q, level)
            )
        case Par(l_p, r_p), Par(l_q, r_q):
            return _alpha(l_p, l_q, names_p, names_q, vars_p, vars_q, level) and _alpha(
                r_p, r_q, names_p, names_q, vars_p, vars_q, level
            )
        case Res(a, body_p), Res(b, body_q):
            return _alpha(
                body_p,
                body_q,
                {**names_p, a: level},
                {**names_q, b: level},
                vars_p,
                vars_q,
                level + 1,
            )
    return False


def _lookup(env: dict, key: str) -> Optional[int]:
    return env.get(key)


def _bind(env: dict[ProcVar, int], binder: ProcVar, level: int) -> dict[ProcVar, int]:
    if binder == UNUSED:
        return env
    return {**env, binder: level}
