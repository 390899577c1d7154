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

"""Did-you-mean suggestions for mistyped ``hopi`` subcommands."""

from typing import Iterable


def levenshtein_distance(s1: str, s2: str) -> int:
    """Case-insensitive Levenshtein distance."""
    s1 = s1.lower()
    s2 = s2.lower()

    if len(s1) < len(s2):
        return levenshtein_distance(s2, s1)

    if len(s2) == 0:
        return len(s1)

    previous_row = range(len(s2) + 1)
    for i, c1 in enumerate(s1):
        current_row = [i + 1]
        for j, c2 in enumerate(s2):
            insertions = previous_row[j + 1] + 1
            deletions = current_row[j] + 1
            substitutions = previous_row[j] + (c1 != c2)
            current_row.append(min(insertions, deletions, substitutions))
        previous_row = current_row

    return previous_row[-1]


def suggest(invalid_value: str, valid_options: Iterable[str], limit: int = 2) -> list[str]:
    """Up to ``limit`` options within edit distance 2 of ``invalid_value``, closest first."""
    distances = sorted(
        ((option, levenshtein_distance(invalid_value, option)) for option in valid_options),
        key=lambda x: x[1],
    )
    return [option for option, dist in distances[:limit] if dist <= 2]
