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

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopi_workbench.checker import (
    DEFAULT_BUDGET,
    Budget,
    CandidatePool,
    Outcome,
    check,
    refines,
)
from hopi_workbench.corpus import TermGenerator, load_refinement
from hopi_workbench.errors import DialectError, InputError
from hopi_workbench.logic import Dialect, Not, parse_formula
from hopi_workbench.process import enumerate_processes, parse_process, show

HANDSHAKE = "(nu c)(c<0>.0 | c(X).a<0>.0)"

# Formulas whose every quantifier ranges over finitely many congruence classes.
EXACT_FRAGMENT = [
    "T",
    "F",
    "0",
    "not 0",
    "<tau>T",
    "<tau>0",
    "<'a<0>>T",
    "<'a<T>>0",
    "<'a<not 0>>T",
    "<a<0>>T",
    "<a<0>><tau>T",
    "<a<a<0>.0>><'a<0>>T",
    "0 | 0",
    "not 0 | not 0",
    "<'a<T>>T | <a<0>>T",
    "a @ 0",
    "a @ <'a<T>>T",
    "(N x) x @ (<x<0>>T | <'x<T>>T)",
    "(N x) x @ not 0",
    "a != b and not a != a",
    "<tau>T and not <tau><tau>T",
]


def p(text: str):
    return parse_process(text)


def f(text: str):
    return parse_formula(text)


# ---- reference verdicts ------------------------------------------------------


@pytest.mark.parametrize(
    "process, formula, expected",
    [
        ("a<0>.0", "<'a<0>>T", Outcome.HOLDS),
        ("a<0>.0", "<'a<T>>T", Outcome.HOLDS),
        ("0", "<'a<T>>T", Outcome.FAILS),
        ("0", "T |> <tau>T", Outcome.FAILS),
        ("a(X).X", "(out a<0>.0) |> <tau>T", Outcome.HOLDS),
        ("a<0>.0 | a(X).X", "mu X.(0 or <tau>X)", Outcome.HOLDS),
        ("a<0>.0", "mu X.(0 or <tau>X)", Outcome.FAILS),
        ("a(X).X", "<a[0]>0", Outcome.HOLDS),
        ("a.0 | b.0", "<a<0>>T | <b<0>>T", Outcome.HOLDS),
        ("(nu a)a<0>.0", "(- a)T", Outcome.HOLDS),
        ("a<0>.0", "(- a)T", Outcome.FAILS),
        ("(nu a)a.0", "(~-)T", Outcome.FAILS),
        ("a.0", "in a. 0", Outcome.HOLDS),
        ("a(X).b<X>.0", "in a(Y). out b<Y>. 0", Outcome.HOLDS),
        ("0", "(out a<0>.0) \\ out b", Outcome.FAILS),
        ("a<0>.0", "a @ T", Outcome.FAILS),
    ],
)
def test_reference_verdicts(process, formula, expected):
    verdict = check(p(process), f(formula))
    assert verdict.outcome is expected


def test_weak_modalities_look_through_tau():
    assert check(p(HANDSHAKE), f("<<'a<T>>>T")).holds
    assert check(p(HANDSHAKE), f("<'a<T>>T")).fails
    assert check(p(HANDSHAKE), f("<<eps>>(<'a<T>>T)")).holds


def test_failed_guarantee_names_the_counterexample():
    verdict = check(p("0"), f("T |> <tau>T"))
    assert verdict.fails
    assert verdict.witness.startswith("Q = ")


def test_verdict_json_carries_budget():
    document = check(p("a<0>.0"), f("<'a<0>>T")).to_json()
    assert document["verdict"] == "holds"
    assert document["budget"] == DEFAULT_BUDGET.to_json()
    assert document["budget_hit"] is False


def test_check_rejects_open_process():
    with pytest.raises(InputError):
        check(p("a<0>.X"), f("T"))


def test_check_enforces_requested_dialect():
    with pytest.raises(DialectError):
        check(p("0"), f("<<eps>>T"), dialect=Dialect.SL)
    assert check(p("0"), f("<<eps>>0"), dialect=Dialect.WL).holds


def test_refinement_fixture():
    fixture = load_refinement()
    assert check(fixture.process, fixture.spec).holds
    report = refines(fixture.spec, fixture.refines, [fixture.process])
    assert report.counterexample is None
    assert report.checked == 1


def test_refines_returns_first_counterexample():
    report = refines(f("T"), f("0"), [p("0"), p("a.0"), p("b.0")])
    assert report.counterexample == p("a.0")
    assert report.verdict.fails


def test_candidate_pool_is_capped_and_closed(small_budget):
    pool = CandidatePool(small_budget, [p("a<b.0>.0")], [f("<c<0>>T")])
    assert 0 < len(pool) <= small_budget.pool_size
    assert all(member.closed for member in pool.members)
    assert {"a", "b", "c"} <= set(pool.names)
    assert all(not member.bound_names for member in pool.payloads())


# ---- exact fragment against the clause definitions ---------------------------


def _agrees_with_definitions(terms, sat_oracle):
    for formula_text in EXACT_FRAGMENT:
        formula = f(formula_text)
        for term in terms:
            verdict = check(term, formula)
            assert verdict.definite, (show(term), formula_text)
            assert verdict.holds == sat_oracle(term, formula), (show(term), formula_text)


def test_exact_fragment_matches_definitions(sat_oracle):
    terms = list(enumerate_processes(("a",), ("X",), 3, closed=True))
    _agrees_with_definitions(terms, sat_oracle)


@pytest.mark.slow
def test_exact_fragment_matches_definitions_on_larger_terms(sat_oracle):
    terms = list(enumerate_processes(("a", "b"), ("X",), 4, closed=True))
    _agrees_with_definitions(terms, sat_oracle)


# ---- properties --------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_negation_flips_definite_verdicts(seed):
    generator = TermGenerator(seed)
    term = generator.process(3)
    formula = generator.formula(4)
    budget = Budget(payload_depth=2, pool_size=16, tau_fuel=4, mu_fuel=4)
    positive = check(term, formula, budget)
    negative = check(term, Not(formula), budget)
    if positive.definite and negative.definite:
        assert positive.holds != negative.holds
