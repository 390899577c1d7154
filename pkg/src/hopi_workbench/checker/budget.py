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

"""Search budgets for the unbounded quantifications of the satisfaction relation."""

import dataclasses
import logging
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from ..errors import BudgetError

logger = logging.getLogger(__name__)

BUDGET_ENV = "HOPI_BUDGET"


@dataclass(frozen=True)
class Budget:
    """``payload_depth`` bounds generated payloads and contexts (constructors),
    ``pool_size`` the candidate pool, ``tau_fuel`` weak closures and
    ``mu_fuel`` fixpoint unfoldings."""

    payload_depth: int = 3
    pool_size: int = 64
    tau_fuel: int = 8
    mu_fuel: int = 8

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise BudgetError(f"budget '{f.name}' must be a non-negative integer")

    def to_json(self) -> dict:
        return dataclasses.asdict(self)

    def override(self, spec: Optional[str]) -> "Budget":
        """Apply a ``key=value,...`` specification on top of this budget."""
        if not spec or not spec.strip():
            return self
        known = {f.name for f in dataclasses.fields(self)}
        changes: dict[str, int] = {}
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            key, sep, value = item.partition("=")
            key = key.strip().replace("-", "_")
            if not sep:
                raise BudgetError(f"budget entry '{item}' is not of the form key=value")
            if key not in known:
                raise BudgetError(
                    f"unknown budget key '{key}' (expected one of: {', '.join(sorted(known))})"
                )
            try:
                number = int(value.strip())
            except ValueError:
                raise BudgetError(f"budget '{key}' must be an integer, got '{value}'") from None
            if number < 0:
                raise BudgetError(f"budget '{key}' must be non-negative")
            changes[key] = number
        return dataclasses.replace(self, **changes)


DEFAULT_BUDGET = Budget()


def parse_budget(spec: Optional[str], environ: Optional[Mapping[str, str]] = None) -> Budget:
    """Defaults, then ``HOPI_BUDGET``, then ``spec``."""
    environ = os.environ if environ is None else environ
    budget = DEFAULT_BUDGET
    from_env = environ.get(BUDGET_ENV)
    if from_env:
        logger.debug("applying %s=%s", BUDGET_ENV, from_env)
        budget = budget.override(from_env)
    return budget.override(spec)
