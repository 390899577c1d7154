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

"""Axiom catalogue, proof kernel, proof scripts and proof generators."""

from .catalogue import (
    CATALOGUE,
    GROUPS,
    AxiomSchema,
    Metavar,
    Picker,
    RuleSchema,
    SideCondition,
    axiom,
    instantiate_axiom,
    rule,
    schema,
    schemas_for,
)
from .generators import prove_congruence, prove_transition
from .kernel import (
    MP,
    Axiom,
    Fresh,
    MuInd,
    Premise,
    Proof,
    ProofReport,
    Rule,
    Sequent,
    Step,
    Taut,
    check_proof,
    dischargeable,
    tautology,
)
from .script import parse_script, render_script

__all__ = [
    "CATALOGUE",
    "GROUPS",
    "MP",
    "Axiom",
    "AxiomSchema",
    "Fresh",
    "Metavar",
    "MuInd",
    "Picker",
    "Premise",
    "Proof",
    "ProofReport",
    "Rule",
    "RuleSchema",
    "Sequent",
    "SideCondition",
    "Step",
    "Taut",
    "axiom",
    "check_proof",
    "dischargeable",
    "instantiate_axiom",
    "parse_script",
    "prove_congruence",
    "prove_transition",
    "render_script",
    "rule",
    "schema",
    "schemas_for",
    "tautology",
]
