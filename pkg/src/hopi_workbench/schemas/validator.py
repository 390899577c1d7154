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

"""Validation of ``--json`` documents against the packaged JSON Schemas.

Requires the ``schemas`` extra (``jsonschema`` and ``referencing``); without
it :func:`validate_report` skips validation.
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional

logger = logging.getLogger(__name__)

SCHEMA_DIR = Path(__file__).resolve().parent
BASE_SCHEMA_PATH = SCHEMA_DIR / "report.schema.json"

# Commands with a dedicated schema; every other command is checked against the base.
COMMAND_SCHEMAS = {
    "check": "check",
    "equiv": "equiv",
    "verify-proof": "proof",
    "prove": "proof",
    "validity-sample": "sampling",
}


def schema_path(command: Optional[str], failed: bool = False) -> Path:
    """Error documents of every command follow the base schema."""
    name = "report" if failed else COMMAND_SCHEMAS.get(command or "", "report")
    return SCHEMA_DIR / f"{name}.schema.json"


@lru_cache(maxsize=None)
def _validator(path: Path):
    from jsonschema import Draft202012Validator
    from referencing import Registry
    from referencing.jsonschema import DRAFT202012

    base_schema = json.loads(BASE_SCHEMA_PATH.read_text())
    registry = Registry().with_resource(
        base_schema["$id"], DRAFT202012.create_resource(base_schema)
    )
    return Draft202012Validator(json.loads(path.read_text()), registry=registry)


def validate_json(document: dict[str, Any]) -> tuple[bool, Any]:
    """Validate a full document (``schema_version`` included).

    Returns ``(True, "valid")`` or ``(False, error)``.
    """
    import jsonschema

    validator = _validator(schema_path(document.get("command"), "error" in document))
    try:
        validator.validate(document)
    except jsonschema.exceptions.ValidationError as err:
        return False, err
    return True, "valid"


def validate_report(document: dict[str, Any]) -> None:
    """Log a WARNING when ``document`` does not match its schema."""
    try:
        valid, detail = validate_json(document)
    except ImportError:
        logger.debug("jsonschema is not installed; skipping report validation")
        return
    if not valid:
        logger.warning("report does not match its JSON schema: %s", detail.message)
