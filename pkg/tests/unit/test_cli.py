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

"""End-to-end tests of the ``hopi`` command surface.

Each test drives :func:`hopi_workbench.__main__.main` with a full argv and
pins the exit code contract: 0 holds/accept/none-found, 1
fails/reject/distinguished, 2 unknown, 3 input error, 4 internal error.
"""

from __future__ import annotations

import json
from unittest.mock import patch

import pytest

from hopi_workbench.__main__ import main

SMALL_SCRIPT = """\
dialect: sl
premise: A
goal: A | 0
1: A BY premise(1)
2: A | 0 <-> A BY axiom(par-unit; A := A)
3: A | 0 BY taut(1, 2)
"""


@pytest.fixture(autouse=True)
def _plain_output(monkeypatch):
    monkeypatch.delenv("FORCE_COLOR", raising=False)
    monkeypatch.setenv("NO_COLOR", "1")


def run(capsys, *args: str) -> tuple[int, str, str]:
    with pytest.raises(SystemExit) as excinfo:
        main(["hopi", *args])
    captured = capsys.readouterr()
    return excinfo.value.code, captured.out, captured.err


def run_json(capsys, *args: str) -> tuple[int, dict]:
    code, out, _ = run(capsys, *args, "--json")
    document = json.loads(out)
    assert document["schema_version"] == 1
    assert document["exit_code"] == code
    return code, document


# ---- acceptance commands -----------------------------------------------------


def test_check_output_barb_holds(capsys):
    code, out, _ = run(capsys, "check", "-p", "a<0>.0", "-f", "<'a<T>>T")
    assert code == 0
    assert "HOLDS" in out


def test_check_fails_exits_one(capsys):
    code, out, _ = run(capsys, "check", "-p", "0", "-f", "T |> <tau>T")
    assert code == 1
    assert "FAILS" in out


def test_check_json_document(capsys):
    code, document = run_json(
        capsys, "check", "-p", "a<0>.0 | a(X).X", "-f", "mu X.(0 or <tau>X)"
    )
    assert code == 0
    assert document["command"] == "check"
    assert document["verdict"] == "holds"
    assert set(document["budget"]) == {"payload_depth", "pool_size", "tau_fuel", "mu_fuel"}


def test_congruent_restriction_of_nil(capsys):
    code, out, _ = run(capsys, "congruent", "-p", "(nu a)0", "-q", "0")
    assert code == 0
    assert "congruent" in out


def test_congruent_rejects_different_processes(capsys):
    code, document = run_json(capsys, "congruent", "-p", "a<0>.0", "-q", "0")
    assert code == 1
    assert document["congruent"] is False


def test_congruent_alpha_variants(capsys):
    code, _, _ = run(
        capsys, "congruent", "-p", "(nu b)(a<b(U).U>.0)", "-q", "(nu c)(a<c(U).U>.0)"
    )
    assert code == 0


def test_verify_packaged_proof(capsys):
    code, out, _ = run(capsys, "verify-proof", "corpus/appendix_f.proof")
    assert code == 0
    assert "accept" in out


def test_verify_proof_file(tmp_path, capsys):
    script = tmp_path / "small.proof"
    script.write_text(SMALL_SCRIPT)
    code, document = run_json(capsys, "verify-proof", str(script))
    assert code == 0
    assert document["result"] == "accept"
    assert document["steps"] == 3


def test_verify_proof_rejects_wrong_step(tmp_path, capsys):
    script = tmp_path / "bad.proof"
    script.write_text(SMALL_SCRIPT.replace("A | 0 <-> A BY", "A | A <-> A BY"))
    code, document = run_json(capsys, "verify-proof", str(script))
    assert code == 1
    assert document["result"] == "reject"
    assert document["step"] == 2


def test_verify_proof_missing_file(capsys):
    code, _, err = run(capsys, "verify-proof", "no-such.proof")
    assert code == 3
    assert "no such proof script" in err


# ---- input handling ------------------------------------------------------------


def test_typo_suggests_command(capsys):
    code, _, err = run(capsys, "chekc")
    assert code == 3
    assert "Did you mean:" in err
    assert "hopi check" in err


def test_missing_required_flag_is_an_input_error(capsys):
    code, _, _ = run(capsys, "check", "-p", "0")
    assert code == 3


def test_parse_error_reports_location(capsys):
    code, _, err = run(capsys, "check", "-p", "a<0", "-f", "T")
    assert code == 3
    assert "ERROR:" in err


def test_parse_error_json_document(capsys):
    code, document = run_json(capsys, "check", "-p", "a<0", "-f", "T")
    assert code == 3
    assert document["error"]["type"] == "ParseError"
    assert document["error"]["source"] == "<arg>"


def test_open_process_is_an_input_error(capsys):
    code, _, err = run(capsys, "check", "-p", "a<0>.X", "-f", "T")
    assert code == 3
    assert "ERROR:" in err


def test_arguments_read_from_files(tmp_path, capsys):
    process = tmp_path / "p.hopi"
    process.write_text("a<0>.0\n")
    formula = tmp_path / "a.formula"
    formula.write_text("<'a<T>>T\n")
    code, _, _ = run(capsys, "check", "-p", f"@{process}", "-f", f"@{formula}")
    assert code == 0


def test_unreadable_argument_file(tmp_path, capsys):
    code, _, err = run(capsys, "check", "-p", f"@{tmp_path / 'missing'}", "-f", "T")
    assert code == 3
    assert "cannot read" in err


def test_malformed_budget_is_an_input_error(capsys, monkeypatch):
    monkeypatch.setenv("HOPI_BUDGET", "tau_fuel=lots")
    code, _, _ = run(capsys, "check", "-p", "0", "-f", "T")
    assert code == 3


def test_dialect_flag_rejects_formulas_outside_it(capsys):
    code, _, _ = run(capsys, "check", "-p", "0", "-f", "<tau>T", "--dialect", "wl")
    assert code == 3


def test_internal_error_exits_four(capsys):
    with patch(
        "hopi_workbench.commands.processes.congruent", side_effect=RuntimeError("boom")
    ):
        code, _, err = run(capsys, "congruent", "-p", "0", "-q", "0")
    assert code == 4
    assert "internal error" in err


# ---- processes ---------------------------------------------------------------


def test_normalize(capsys):
    code, document = run_json(capsys, "normalize", "-p", "0 | a<0>.0")
    assert code == 0
    assert document["normal_form"] == "a<0>.0"
    assert document["certified"] is True


def test_step_lists_transitions(capsys):
    code, document = run_json(capsys, "step", "-p", "a<0>.0 | a(X).X")
    assert code == 0
    kinds = sorted(t["action"]["kind"] for t in document["transitions"])
    assert kinds == ["out", "tau"]


def test_step_input_requires_subject(capsys):
    code, _, err = run(capsys, "step", "-p", "a(X).X", "--action", "in")
    assert code == 3
    assert "--subject" in err


def test_reach_finds_tau_path(capsys):
    code, document = run_json(capsys, "reach", "-p", "(nu a)(a<0>.0 | a(X).X)", "-q", "0")
    assert code == 0
    assert len(document["path"]) == 2


def test_reach_without_path(capsys):
    code, _, _ = run(capsys, "reach", "-p", "a<0>.0", "-q", "0")
    assert code == 1


def test_barbs(capsys):
    code, out, _ = run(capsys, "barbs", "-p", "a<0>.0 | b(X).X")
    assert code == 0
    assert set(out.split()) == {"'a", "b"}


# ---- logic -------------------------------------------------------------------


def test_translate_tps(capsys):
    code, document = run_json(capsys, "translate", "tps", "-p", "a<0>.0")
    assert code == 0
    assert document["input"] == "a<0>.0"
    assert document["dialect"] == "sl"


def test_translate_rejects_the_wrong_input(capsys):
    code, _, _ = run(capsys, "translate", "tps", "-f", "T")
    assert code == 3


# ---- proofs ------------------------------------------------------------------


def test_prove_congruence(capsys):
    code, document = run_json(capsys, "prove", "congruence", "-p", "a<0>.0 | 0", "-q", "a<0>.0")
    assert code == 0
    assert document["result"] == "accept"
    assert "goal:" in document["script"]


def test_prove_congruence_of_different_processes(capsys):
    code, document = run_json(capsys, "prove", "congruence", "-p", "a<0>.0", "-q", "0")
    assert code == 1
    assert document["result"] == "reject"


def test_prove_transition_writes_script(tmp_path, capsys):
    output = tmp_path / "out.proof"
    code, _, _ = run(
        capsys,
        "prove",
        "transition",
        "-p",
        "a<0>.0",
        "-q",
        "0",
        "--action",
        "out",
        "--subject",
        "a",
        "-o",
        str(output),
    )
    assert code == 0
    assert run(capsys, "verify-proof", str(output))[0] == 0


def test_prove_help_names_the_restriction_limit(capsys):
    code, out, _ = run(capsys, "prove", "--help")
    assert code == 0
    assert "restriction" in out
    assert "--weak" in out


def test_prove_strong_tau_under_restriction_is_rejected(capsys):
    args = ("prove", "transition", "-p", "(nu c)(c<0>.0 | c(X).a<0>.0)", "-q", "a<0>.0")
    code, document = run_json(capsys, *args, "--action", "tau")
    assert code == 1
    assert "use the weak mode" in document["reason"]
    code, document = run_json(capsys, *args, "--action", "tau", "--weak")
    assert code == 0
    assert document["result"] == "accept"


def test_validity_sample(capsys):
    code, document = run_json(
        capsys, "validity-sample", "--schema", "par-comm", "--schema", "out-intro", "--trials", "5"
    )
    assert code == 0
    assert [r["schema"] for r in document["reports"]] == ["par-comm", "out-intro"]


def test_validity_sample_unknown_line(capsys):
    code, _, _ = run(capsys, "validity-sample", "--schema", "no-such-axiom")
    assert code == 3


# ---- equivalences and corpus -------------------------------------------------


def test_equiv_distinguishes_with_formula(capsys):
    code, out, _ = run(capsys, "equiv", "-p", "a<0>.0", "-q", "0")
    assert code == 1
    assert "<'a<T>>T" in out


def test_equiv_weak_barbed_game(capsys):
    code, document = run_json(
        capsys,
        "equiv",
        "-p",
        "(nu a)(a<0>.0 | a(X).X)",
        "-q",
        "0",
        "--method",
        "barbed",
        "--strength",
        "weak",
    )
    assert code == 0
    assert document["result"] == "none-found"


def test_phi_demo(capsys):
    code, document = run_json(capsys, "phi-demo", "-n", "3", "--exhaustive", "2")
    assert code == 0
    assert [row["index"] for row in document["instances"]] == [1, 2, 3]
    assert document["instances"][2]["verdicts"] == ["holds"] * 3 + ["fails"]
    assert document["exhaustive"]["satisfying"] == []


def test_generate_is_reproducible(capsys):
    first = run(capsys, "generate", "--seed", "11", "--count", "3")
    second = run(capsys, "generate", "--seed", "11", "--count", "3")
    assert first[0] == 0
    assert first[1] == second[1]
    assert len(first[1].splitlines()) == 3


def test_version_json(capsys):
    code, document = run_json(capsys, "version")
    assert code == 0
    assert document["package"] == "hopi-workbench"
