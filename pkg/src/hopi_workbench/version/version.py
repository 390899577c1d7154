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
import argparse
import importlib.metadata
import sys
from pathlib import Path

from hopi_workbench import __version__
from hopi_workbench.commands.common import EXIT_OK, add_json_flag, emit
from hopi_workbench.commands.registry import help_for

PACKAGE_NAME = "hopi-workbench"


def get_package_version() -> str:
    try:
        return importlib.metadata.version(PACKAGE_NAME)
    except importlib.metadata.PackageNotFoundError:
        return __version__


def collect_version_info() -> dict:
    """Return the version fields shared by the prose and JSON renderers."""
    return {
        "package": PACKAGE_NAME,
        "version": get_package_version(),
        "python": sys.version.split()[0],
        "executable": str(Path(sys.argv[0]).resolve()),
        "module": str(Path(__file__).resolve()),
    }


def register_version_parser(cli, subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("version", help=help_for("version"))
    add_json_flag(parser)
    parser.set_defaults(func=execute_version_command)
    return parser


def execute_version_command(args: argparse.Namespace) -> int:
    info = collect_version_info()
    lines = [
        f"Package:     {info['package']}",
        f"Version:     {info['version']}",
        f"Python:      {info['python']}",
        f"Executable:  {info['executable']}",
        f"Module:      {info['module']}",
    ]
    return emit(args, info, EXIT_OK, lines)
