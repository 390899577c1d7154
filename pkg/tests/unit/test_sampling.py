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

"""Budgets and validity sampling of the axiom catalogue."""

from __future__ import annotations

import pytest

from hopi_workbench.checker import (
    BUDGET_ENV,
    DEFAULT_BUDGET,
    Budget,
    parse_budget,
    spot_check,
    validity_sample,
)
from hopi_workbench.errors import BudgetError, InputError, SoundnessViolation
from hopi_workbench.logic import parse_formula
from hopi_workbench.proofs import CATALOGUE

# ---- budgets -----------------------------------------------------------------


def test_parse_budget_defaults():
    assert parse_budget(None, environ={}) == DEFAULT_BUDGET
    assert parse_budget("", environ={}) == DEFAULT_BUDGET


def test_parse_budget_applies_environment_then_flag():
    environ = {BUDGET_ENV: "tau_fuel=2,mu_fuel=3"}
    budget = parse_budget("mu-fuel=5", environ=environ)
    assert budget == Budget(tau_fuel=2, mu_fuel=5)


def test_parse_budget_reads_process_environment(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "pool_size=7")
    assert parse_budget(None).pool_size == 7


@pytest.mark.parametrize("spec", ["bogus=1", "tau_fuel", "tau_fuel=-1", "tau_fuel=many"])
def test_parse_budget_rejects_malformed_entries(spec):
    with pytest.raises(BudgetError):
        parse_budget(spec, environ={})


def test_budget_error_is_an_input_error():
    with pytest.raises(InputError):
        Budget(tau_fuel=-1)


def test_budget_to_json_lists_every_bound():
    assert set(DEFAULT_BUDGET.to_json()) == {"payload_depth", "pool_size", "tau_fuel", "mu_fuel"}


# ---- validity sampling -------------------------------------------------------


@pytest.mark.parametrize("schema_id", ["par-comm", "out-intro", "guarantee-elim"])
def test_sampled_axioms_are_never_refuted(schema_id, small_budget):
    report = validity_sample(schema_id, trials=10, budget=small_budget, seed=7)
    assert report.fails == 0
    assert report.refutation is None
    assert report.instances > 0
    assert report.checks == report.holds + report.unknown


def test_sampling_is_deterministic_for_a_seed(small_budget):
    first = validity_sample("par-assoc", trials=5, budget=small_budget, seed=3)
    second = validity_sample("par-assoc", trials=5, budget=small_budget, seed=3)
    assert first.examples == second.examples
    assert first.to_json(small_budget) == second.to_json(small_budget)


def test_sampling_report_json(small_budget):
    document = validity_sample("par-unit", trials=3, budget=small_budget).to_json(small_budget)
    assert document["schema"] == "par-unit"
    assert document["fails"] == 0
    assert document["refutation"] is None
    assert document["budget"] == small_budget.to_json()


def test_unsampled_schema_reports_without_checking(caplog):
    unsampled = [s.id for s in CATALOGUE.values() if not s.sampled]
    if not unsampled:
        pytest.skip("every catalogue line is sampled")
    report = validity_sample(unsampled[0], trials=5)
    assert not report.sampled
    assert report.checks == 0


def test_unknown_schema_is_an_input_error():
    with pytest.raises(InputError):
        validity_sample("no-such-axiom", trials=1)


def test_spot_check_refutes_unsatisfiable_formula(small_budget):
    formula = parse_formula("not T")
    with pytest.raises(SoundnessViolation) as excinfo:
        spot_check(formula, trials=3, budget=small_budget)
    refutation = excinfo.value.report.refutation
    assert refutation.instance == formula
    assert "not T" in str(excinfo.value)


def test_spot_check_accepts_valid_formula(small_budget):
    report = spot_check(parse_formula("T or 0"), trials=5, budget=small_budget)
    assert report.fails == 0
    assert report.holds == 5
