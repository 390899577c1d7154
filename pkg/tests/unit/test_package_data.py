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

"""Smoke tests for installed package data and metadata.

These catch a ``pyproject.toml`` that drops files an installed wheel must
ship: the ``py.typed`` marker, the logging configuration, the report JSON
schemas and the curated corpus. They also pin the ``hopi`` console script
and its ``hopi-workbench`` package-name alias.
"""

from __future__ import annotations

import importlib.resources
import re
import sys
from pathlib import Path

import pytest

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover - exercised only on Python 3.10
    import tomli as tomllib

REQUIRED_SCHEMAS = {
    "report.schema.json",
    "check.schema.json",
    "equiv.schema.json",
    "proof.schema.json",
    "sampling.schema.json",
}

REQUIRED_CORPUS_FILES = {
    "pairs.txt",
    "alpha.txt",
    "refinement.txt",
    "appendix_f.proof",
}

PYPROJECT = Path(__file__).resolve().parents[2] / "pyproject.toml"
README = Path(__file__).resolve().parents[2] / "README.md"


def _pyproject() -> dict:
    if not PYPROJECT.exists():
        pytest.skip(f"pyproject.toml not found at {PYPROJECT}")
    return tomllib.loads(PYPROJECT.read_text())


# ---- bundled package data ---------------------------------------------------


def test_py_typed_marker_is_shipped():
    assert importlib.resources.files("hopi_workbench").joinpath("py.typed").is_file()


def test_logging_config_is_shipped():
    assert importlib.resources.files("hopi_workbench").joinpath("logging.json").is_file()


def test_report_schemas_are_packaged():
    schemas = {
        path.name
        for path in importlib.resources.files("hopi_workbench.schemas").iterdir()
        if path.name.endswith(".schema.json")
    }
    missing = REQUIRED_SCHEMAS - schemas
    assert not missing, f"missing report schemas: {missing}"


def test_corpus_files_are_packaged():
    files = {path.name for path in importlib.resources.files("hopi_workbench.corpus").iterdir()}
    missing = REQUIRED_CORPUS_FILES - files
    assert not missing, f"missing corpus files: {missing}"


def test_readme_links_are_absolute():
    if not README.exists():
        pytest.skip(f"README.md not found at {README}")
    relative = [
        target
        for target in re.findall(r"(?<!!)\[[^\]]+\]\(([^)]+)\)", README.read_text())
        if not target.startswith(("#", "http://", "https://", "mailto:"))
    ]
    assert not relative, f"README has relative links: {relative}"


# ---- pyproject.toml declarations --------------------------------------------


def test_pyproject_declares_expected_console_scripts():
    declared = _pyproject().get("project", {}).get("scripts", {})
    assert declared == {
        "hopi": "hopi_workbench.__main__:main",
        "hopi-workbench": "hopi_workbench.__main__:main",
    }, declared


def test_pyproject_targets_supported_python_versions():
    assert ">=3.10" in _pyproject()["project"]["requires-python"]
    assert sys.version_info >= (3, 10)


def _dep_names(specs: list[str]) -> set[str]:
    return {re.split(r"[\s\[<>=(]", spec, maxsplit=1)[0] for spec in specs}


def test_pyproject_runtime_dependencies():
    assert _dep_names(_pyproject()["project"]["dependencies"]) == {"lark"}


def test_pyproject_schemas_extra_bundles_validator_deps():
    extras = _pyproject()["project"].get("optional-dependencies", {})
    assert _dep_names(extras["schemas"]) == {"jsonschema", "referencing"}
    jsonschema_spec = next(spec for spec in extras["schemas"] if spec.startswith("jsonschema"))
    assert ">=4.18" in jsonschema_spec
