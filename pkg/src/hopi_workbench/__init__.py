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

"""Workbench for the higher-order pi-calculus and its spatial logics.

The subpackages are layered: ``process`` (terms, parsing, structural
congruence), ``lts`` (transitions), ``logic`` (formulas, dialects,
translations), ``checker`` (budgeted three-valued model checking),
``proofs`` (axiom catalogue, proof kernel, generators), ``equiv``
(distinguishing formulas and bisimulation games) and ``corpus`` (fixtures and
generators). The ``hopi`` command is built in :mod:`hopi_workbench.cli`.

.. autosummary::
    :toctree: _autosummary

    cli
    version
"""

import importlib.metadata

__title__ = "hopi_workbench"

try:
    __version__ = importlib.metadata.version("hopi-workbench")
except importlib.metadata.PackageNotFoundError:
    __version__ = "0.0.0+local"
