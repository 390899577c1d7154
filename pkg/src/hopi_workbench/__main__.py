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
"""Entry point of ``hopi`` and ``python -m hopi_workbench``.

The process exits with the command's code: 0 for a verdict that holds or an
accepted proof, 1 for a failing verdict or a rejected proof, 2 for an
unknown verdict, 3 for bad input and 4 for an internal error; an interrupt
exits with 130.
"""

import json
import logging
import logging.config
import sys
from pathlib import Path
from typing import Optional, Union

LOG_CONFIG_FILENAME = "logging.json"


def set_up_logging(level: Optional[str], config_path: Union[str, Path] = LOG_CONFIG_FILENAME):
    """Configure logging from the packaged ``logging.json``.

    Args:
        level (str): Root level from ``--log-level``; ``None`` keeps the file's level.
        config_path (str): A ``logging.json`` that overrides the packaged one when it exists.
    """
    # Default log config path
    log_config_path = Path(__file__).absolute().parent / LOG_CONFIG_FILENAME

    config_path = Path(config_path)

    # A logging config file in the current folder overrides the packaged one
    if config_path.exists():
        log_config_path = config_path

    config_dict = json.loads(log_config_path.read_bytes())

    if level is not None and "root" in config_dict:
        config_dict["root"]["level"] = level
    logging.config.dictConfig(config_dict)


def _dispatch(argv: Optional[list[str]]) -> int:
    if argv is None:
        argv = sys.argv
    argv = list(argv)

    from .cli import WorkbenchCLI, script_name_of

    cli = WorkbenchCLI(script_name=script_name_of(argv))
    args = cli.parse_args(argv)

    set_up_logging(args.log_level)

    return cli.execute(args)


def main(argv: Optional[list[str]] = None):
    try:
        code = _dispatch(argv)
    except KeyboardInterrupt:
        raise SystemExit(130) from None
    raise SystemExit(code)


if __name__ == "__main__":
    main()
