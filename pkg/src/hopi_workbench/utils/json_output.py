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

"""The ``--json`` document every ``hopi`` command prints.

A document carries ``schema_version``, ``command`` and ``exit_code`` ahead of
the command's own fields: a verdict with its budget for ``check``, a proof
report for ``prove`` and ``verify-proof``, per-line sampling reports for
``validity-sample``, or an ``error`` object (type, message and, for parse
errors, the source position) when the command failed.
The packaged JSON schemas describe each shape; version 1 only ever gains
fields.
"""

from __future__ import annotations

import json
from typing import Any

SCHEMA_VERSION = 1


def wrap(payload: dict[str, Any]) -> dict[str, Any]:
    """``payload`` with ``schema_version`` as its first key."""
    return {"schema_version": SCHEMA_VERSION, **payload}


def dumps(payload: dict[str, Any]) -> str:
    """The indented document for ``payload``; formulas and processes are
    kept as printed, non-ASCII included."""
    return json.dumps(wrap(payload), indent=2, ensure_ascii=False)
