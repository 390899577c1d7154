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

from .formulas import (
    BOT,
    TOP,
    ZERO,
    And,
    Bot,
    BoxIn,
    DiaIn,
    DiaOut,
    DiaTau,
    Dialect,
    Formula,
    FreshName,
    FreshVar,
    Guarantee,
    Hide,
    InAdjoint,
    InPrefix,
    Mu,
    Neq,
    NoBound,
    Not,
    NotFree,
    OutAdjoint,
    OutPrefix,
    Par,
    PropVar,
    Reveal,
    Top,
    WeakBoxIn,
    WeakEps,
    WeakIn,
    WeakOut,
    Zero,
    as_iff,
    as_implication,
    bang,
    conjunction,
    dialect_of,
    forall_continuation_output,
    forall_payload_output,
    hidden_name,
    hidden_var,
    iff,
    implies,
    in_dialect,
    monotone_in,
    name_occurs,
    or_,
    positive_in,
    walk,
)
from .subst import (
    alpha_equal,
    alpha_normal,
    approximant,
    formula_subst,
    rename_formula_name,
    rename_formula_var,
    substitute_formula,
    unfold,
)
from .syntax import parse_formula, show_formula
from .translate import (
    SublogicL,
    action_formula,
    as_process,
    barb_formula,
    embed,
    in_sublogic_l,
    translate_tps,
    translate_twm,
    weak_action_formula,
)

__all__ = [
    "BOT",
    "TOP",
    "ZERO",
    "And",
    "Bot",
    "BoxIn",
    "DiaIn",
    "DiaOut",
    "DiaTau",
    "Dialect",
    "Formula",
    "FreshName",
    "FreshVar",
    "Guarantee",
    "Hide",
    "InAdjoint",
    "InPrefix",
    "Mu",
    "Neq",
    "NoBound",
    "Not",
    "NotFree",
    "OutAdjoint",
    "OutPrefix",
    "Par",
    "PropVar",
    "Reveal",
    "SublogicL",
    "Top",
    "WeakBoxIn",
    "WeakEps",
    "WeakIn",
    "WeakOut",
    "Zero",
    "action_formula",
    "alpha_equal",
    "alpha_normal",
    "approximant",
    "as_iff",
    "as_implication",
    "as_process",
    "bang",
    "barb_formula",
    "conjunction",
    "dialect_of",
    "embed",
    "formula_subst",
    "forall_continuation_output",
    "forall_payload_output",
    "hidden_name",
    "hidden_var",
    "iff",
    "implies",
    "in_dialect",
    "in_sublogic_l",
    "monotone_in",
    "name_occurs",
    "or_",
    "parse_formula",
    "positive_in",
    "rename_formula_name",
    "rename_formula_var",
    "show_formula",
    "substitute_formula",
    "translate_tps",
    "translate_twm",
    "unfold",
    "walk",
    "weak_action_formula",
]
