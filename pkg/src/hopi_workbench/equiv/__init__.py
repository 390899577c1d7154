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

from .distinguish import DEFAULT_SIZE_BOUND, distinguish_l, l_formulas, recheck
from .games import DEFAULT_BREADTH, DEFAULT_DEPTH, Kind, Strength, bisim_bounded, receiving_contexts
from .report import EquivReport, Result

__all__ = [
    "DEFAULT_BREADTH",
    "DEFAULT_DEPTH",
    "DEFAULT_SIZE_BOUND",
    "EquivReport",
    "Kind",
    "Result",
    "Strength",
    "bisim_bounded",
    "distinguish_l",
    "l_formulas",
    "receiving_contexts",
    "recheck",
]
