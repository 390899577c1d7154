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

"""Concrete process syntax: a lark LALR grammar and the matching printer.

``show(parse_process(text))`` re-parses to an alpha-equivalent term, and the
printer only emits parentheses the grammar needs.
"""

import logging
from functools import lru_cache

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput

from ..errors import ParseError
from .terms import NIL, UNUSED, Input, Nil, Output, Par, Process, Res, Var

logger = logging.getLogger(__name__)

PROCESS_GRAMMAR = r"""
?start: par

?par: par "|" prefixed   -> parallel
    | prefixed

?prefixed: NAME "(" VAR ")" "." prefixed   -> input
         | NAME "<" par ">" "." prefixed   -> output
         | NAME "." prefixed               -> bare_input
         | "(" "nu" NAME ")" prefixed      -> restriction
         | atom

?atom: "0"            -> nil
     | VAR            -> var
     | "(" par ")"

NAME: /[a-z][A-Za-z0-9_']*/
VAR: /[A-Z][A-Za-z0-9_']*/

%import common.WS
%ignore WS
"""


@v_args(inline=True)
class _ToProcess(Transformer):
    def parallel(self, left, right):
        return Par(left, right)

    def input(self, subject, binder, body):
        return Input(str(subject), str(binder), body)

    def output(self, subject, payload, cont):
        return Output(str(subject), payload, cont)

    def bare_input(self, subject, body):
        return Input(str(subject), UNUSED, body)

    def restriction(self, binder, body):
        return Res(str(binder), body)

    def nil(self):
        return NIL

    def var(self, name):
        return Var(str(name))


@lru_cache(maxsize=None)
def _parser() -> Lark:
    return Lark(PROCESS_GRAMMAR, parser="lalr", transformer=_ToProcess())


def parse_error(text: str, exc: UnexpectedInput, source: str, what: str) -> ParseError:
    """Turn a lark failure into a positioned ``ParseError``."""
    if isinstance(exc, UnexpectedEOF) or getattr(exc, "line", -1) < 1:
        lines = text.split("\n")
        line, column = len(lines), len(lines[-1]) + 1
        message = f"unexpected end of {what}"
        context = ""
    else:
        line, column = exc.line, exc.column
        token = getattr(exc, "token", None)
        if token is not None:
            message = f"unexpected token {str(token)!r} in {what}"
        else:
            message = f"unexpected character in {what}"
        context = exc.get_context(text)
    return ParseError(message, source=source, line=line, column=column, context=context)


def parse_process(text: str, *, source: str = "<arg>") -> Process:
    """Parse the concrete process grammar.

    Open terms are legal; their free variables are only reported at INFO.
    """
    try:
        process = _parser().parse(text)
    except UnexpectedInput as exc:
        raise parse_error(text, exc, source, "process") from None
    if process.free_vars:
        logger.info("open process term, free variables: %s", ", ".join(sorted(process.free_vars)))
    return process


# ---- printer -----------------------------------------------------------------


def show(p: Process) -> str:
    """Print ``p`` in the concrete grammar with minimal parentheses."""
    if isinstance(p, Par):
        return f"{show(p.left)} | {_show_prefixed(p.right)}"
    return _show_prefixed(p)


def _show_prefixed(p: Process) -> str:
    match p:
        case Nil():
            return "0"
        case Var(name):
            return name
        case Input(subject, binder, body):
            head = subject if binder == UNUSED else f"{subject}({binder})"
            return f"{head}.{_show_prefixed(body)}"
        case Output(subject, payload, cont):
            return f"{subject}<{show(payload)}>.{_show_prefixed(cont)}"
        case Res(binder, body):
            return f"(nu {binder}){_show_prefixed(body)}"
        case Par():
            return f"({show(p)})"
    raise TypeError(f"not a process: {p!r}")
