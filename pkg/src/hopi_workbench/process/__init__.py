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

from .congruence import CanonicalProcess, canonical_key, congruent, normalize, standard_form
from .substitution import alpha_equivalent, freshen_bound, rename_name, rename_var, substitute
from .syntax import parse_process, show
from .terms import (
    NIL,
    UNUSED,
    Input,
    Name,
    Nil,
    Output,
    Par,
    Process,
    ProcVar,
    Res,
    Var,
    components,
    depth,
    enumerate_processes,
    fresh_name,
    fresh_var,
    par_of,
    replication_encode,
    res_of,
    subterms,
)

__all__ = [
    "NIL",
    "UNUSED",
    "CanonicalProcess",
    "Input",
    "Name",
    "Nil",
    "Output",
    "Par",
    "ProcVar",
    "Process",
    "Res",
    "Var",
    "alpha_equivalent",
    "canonical_key",
    "components",
    "congruent",
    "depth",
    "enumerate_processes",
    "fresh_name",
    "fresh_var",
    "freshen_bound",
    "normalize",
    "par_of",
    "parse_process",
    "rename_name",
    "rename_var",
    "replication_encode",
    "res_of",
    "show",
    "standard_form",
    "substitute",
    "subterms",
]
