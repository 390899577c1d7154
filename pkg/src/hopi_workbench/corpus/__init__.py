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

"""Curated fixtures and seeded term generators."""

from .fixtures import (
    CORPUS_DIR,
    CuratedPair,
    Refinement,
    corpus_path,
    load_alpha,
    load_pairs,
    load_refinement,
)
from .generate import TermGenerator, generate, generate_many
from .phi import PhiInstance, b_chain, phi_family

__all__ = [
    "CORPUS_DIR",
    "CuratedPair",
    "PhiInstance",
    "Refinement",
    "TermGenerator",
    "b_chain",
    "corpus_path",
    "generate",
    "generate_many",
    "load_alpha",
    "load_pairs",
    "load_refinement",
    "phi_family",
]
