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

"""Three-valued model checking of processes against formulas."""

from .budget import BUDGET_ENV, DEFAULT_BUDGET, Budget, parse_budget
from .engine import (
    UNKNOWN,
    Outcome,
    RefinementReport,
    Verdict,
    check,
    conj,
    fails,
    holds,
    refines,
)
from .pool import CandidatePool
from .sampling import Refutation, SamplingReport, spot_check, validity_sample

__all__ = [
    "BUDGET_ENV",
    "DEFAULT_BUDGET",
    "UNKNOWN",
    "Budget",
    "CandidatePool",
    "Outcome",
    "RefinementReport",
    "Refutation",
    "SamplingReport",
    "Verdict",
    "check",
    "conj",
    "fails",
    "holds",
    "parse_budget",
    "refines",
    "spot_check",
    "validity_sample",
]
