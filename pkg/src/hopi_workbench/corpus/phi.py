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

"""The output-chain formula family behind the incompleteness argument.

``phi(n)`` asks for ``n`` consecutive outputs on ``a`` whose ``i``-th
payload is a chain of ``i - 1`` bare ``b`` prefixes. Every finite prefix of
the family has a model, while a model of ``phi(n)`` needs prefix depth of at
least ``n``, so no single process satisfies the whole family.
"""

from dataclasses import dataclass

from ..errors import InputError
from ..logic import TOP, Formula, OutPrefix, embed, show_formula
from ..process import NIL, UNUSED, Input, Output, Process, depth, show

CHANNEL = "a"
PAYLOAD_CHANNEL = "b"


@dataclass(frozen=True)
class PhiInstance:
    index: int
    formula: Formula
    witness: Process

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "formula": show_formula(self.formula),
            "witness": show(self.witness),
            "depth": depth(self.witness),
        }


def b_chain(length: int) -> Process:
    """``b.b. ... .b.0`` with ``length`` prefixes."""
    result: Process = NIL
    for _ in range(length):
        result = Input(PAYLOAD_CHANNEL, UNUSED, result)
    return result


def phi_family(n: int) -> PhiInstance:
    if n < 1:
        raise InputError("the formula family starts at n = 1")
    formula: Formula = TOP
    witness: Process = NIL
    for i in range(n, 0, -1):
        payload = b_chain(i - 1)
        formula = OutPrefix(CHANNEL, embed(payload), formula)
        witness = Output(CHANNEL, payload, witness)
    return PhiInstance(n, formula, witness)
