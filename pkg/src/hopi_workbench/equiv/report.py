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

import enum
from dataclasses import dataclass, field
from typing import Any, Optional

from ..logic import Formula, show_formula


class Result(str, enum.Enum):
    DISTINGUISHED = "distinguished"
    NONE_FOUND = "none-found"


@dataclass(frozen=True)
class EquivReport:
    """Outcome of a bounded comparison.

    ``none-found`` only means that no distinction exists within ``bounds``.
    A distinction carries either a ``formula`` that holds of the first
    process and fails on the second, or the game ``trace`` that wins it.
    """

    result: Result
    bounds: dict[str, Any] = field(default_factory=dict)
    formula: Optional[Formula] = None
    trace: tuple[str, ...] = ()

    @property
    def distinguished(self) -> bool:
        return self.result is Result.DISTINGUISHED

    def to_json(self) -> dict:
        return {
            "result": self.result.value,
            "formula": None if self.formula is None else show_formula(self.formula),
            "trace": list(self.trace),
            "bounds": self.bounds,
        }

    def __str__(self) -> str:
        if not self.distinguished:
            return "no distinction found within the bounds"
        if self.formula is not None:
            return f"distinguished by {show_formula(self.formula)}"
        return "distinguished:\n  " + "\n  ".join(self.trace)
