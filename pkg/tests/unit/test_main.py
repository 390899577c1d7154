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

import json
import tempfile
from pathlib import Path
from unittest.mock import MagicMock, patch

import pytest

from hopi_workbench.__main__ import main, set_up_logging


class TestSetUpLogging:
    def test_set_up_logging_with_default_config(self):
        mock_config = {
            "version": 1,
            "disable_existing_loggers": False,
            "root": {"level": "WARNING"},
        }

        mock_path = MagicMock()
        mock_path.read_bytes = lambda: json.dumps(mock_config).encode()

        with patch("hopi_workbench.__main__.Path") as mock_path_class:
            mock_path_class.return_value.absolute.return_value.parent.__truediv__.return_value = (
                mock_path
            )
            mock_path_class.return_value.exists.return_value = False

            with patch("logging.config.dictConfig") as mock_dict_config:
                set_up_logging(None)
                mock_dict_config.assert_called_once_with(mock_config)

    def test_set_up_logging_with_level_override(self):
        mock_config = {
            "version": 1,
            "disable_existing_loggers": False,
            "root": {"level": "WARNING"},
        }

        mock_path = MagicMock()
        mock_path.read_bytes = lambda: json.dumps(mock_config).encode()

        with patch("hopi_workbench.__main__.Path") as mock_path_class:
            mock_path_class.return_value.absolute.return_value.parent.__truediv__.return_value = (
                mock_path
            )
            mock_path_class.return_value.exists.return_value = False

            with patch("logging.config.dictConfig") as mock_dict_config:
                set_up_logging("DEBUG")
                config = mock_dict_config.call_args.args[0]
                assert config["root"]["level"] == "DEBUG"

    def test_set_up_logging_with_custom_config_path(self):
        mock_config = {
            "version": 1,
            "disable_existing_loggers": False,
            "root": {"level": "ERROR"},
        }

        with tempfile.NamedTemporaryFile(mode="w", suffix=".json", delete=False) as temp_file:
            temp_path = Path(temp_file.name)
            json.dump(mock_config, temp_file)

        try:
            with patch("logging.config.dictConfig") as mock_dict_config:
                set_up_logging(None, temp_path)
                mock_dict_config.assert_called_once_with(mock_config)
        finally:
            temp_path.unlink()

    def test_set_up_logging_no_root_in_config(self, tmp_path):
        mock_config = {"version": 1, "disable_existing_loggers": False}
        config_path = tmp_path / "logging.json"
        config_path.write_text(json.dumps(mock_config))

        with patch("logging.config.dictConfig") as mock_dict_config:
            set_up_logging("DEBUG", config_path)
            mock_dict_config.assert_called_once_with(mock_config)

    def test_packaged_config_is_loadable(self):
        with patch("logging.config.dictConfig") as mock_dict_config:
            set_up_logging("INFO", "definitely-not-here.json")
        config = mock_dict_config.call_args.args[0]
        assert config["root"]["level"] == "INFO"


class TestMain:
    def test_main_exits_with_handler_code(self):
        with patch("hopi_workbench.__main__.set_up_logging") as mock_logging:
            with pytest.raises(SystemExit) as excinfo:
                main(["hopi", "congruent", "-p", "(nu a)0", "-q", "0"])
        assert excinfo.value.code == 0
        mock_logging.assert_called_once_with(None)

    def test_main_passes_log_level(self):
        with patch("hopi_workbench.__main__.set_up_logging") as mock_logging:
            with pytest.raises(SystemExit):
                main(["hopi", "--log-level", "debug", "congruent", "-p", "0", "-q", "0"])
        mock_logging.assert_called_once_with("DEBUG")

    def test_main_reads_sys_argv_when_none_given(self):
        with patch("sys.argv", ["hopi", "congruent", "-p", "a<0>.0", "-q", "0"]):
            with patch("hopi_workbench.__main__.set_up_logging"):
                with pytest.raises(SystemExit) as excinfo:
                    main(None)
        assert excinfo.value.code == 1

    def test_main_maps_keyboard_interrupt(self):
        with patch("hopi_workbench.__main__._dispatch", side_effect=KeyboardInterrupt):
            with pytest.raises(SystemExit) as excinfo:
                main(["hopi", "version"])
        assert excinfo.value.code == 130

    def test_main_sets_up_logging_before_executing(self):
        call_order = []

        def mock_set_up_logging(level):
            call_order.append("set_up_logging")

        def mock_execute(args):
            call_order.append("execute")
            return 0

        with patch("hopi_workbench.__main__.set_up_logging", side_effect=mock_set_up_logging):
            with patch("hopi_workbench.cli.WorkbenchCLI.execute", side_effect=mock_execute):
                with pytest.raises(SystemExit):
                    main(["hopi", "version"])
        assert call_order == ["set_up_logging", "execute"]

    def test_main_usage_error_does_not_set_up_logging(self):
        with patch("hopi_workbench.__main__.set_up_logging") as mock_logging:
            with pytest.raises(SystemExit) as excinfo:
                main(["hopi", "chekc"])
        assert excinfo.value.code == 3
        mock_logging.assert_not_called()
