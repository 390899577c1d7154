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

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopi_workbench.checker import check
from hopi_workbench.corpus import TermGenerator, corpus_path, generate_many
from hopi_workbench.errors import GenerationError, InputError, ParseError, SideConditionError
from hopi_workbench.logic import Dialect, action_formula, alpha_equal, embed, parse_formula
from hopi_workbench.lts import In, Out, Query, Tau, input_subjects, step, weak_transitions
from hopi_workbench.process import NIL, canonical_key, congruent, parse_process, standard_form
from hopi_workbench.proofs import (
    CATALOGUE,
    GROUPS,
    Axiom,
    AxiomSchema,
    RuleSchema,
    axiom,
    check_proof,
    instantiate_axiom,
    parse_script,
    prove_congruence,
    prove_transition,
    render_script,
    rule,
    schema,
    schemas_for,
    tautology,
)

processes = st.integers(min_value=0, max_value=10**6).map(lambda s: TermGenerator(s).process(5))

SMALL_SCRIPT = """\
dialect: sl
premise: A
goal: A | 0
1: A BY premise(1)
2: A | 0 <-> A BY axiom(par-unit; A := A)
3: A | 0 BY taut(1, 2)
"""


def p(text: str):
    return parse_process(text)


def f(text: str):
    return parse_formula(text)


def packaged_script_text() -> str:
    return corpus_path("corpus/appendix_f.proof").read_text()


# ---- catalogue ---------------------------------------------------------------


def test_catalogue_groups_are_consistent():
    assert "structural" in GROUPS
    for found in CATALOGUE.values():
        assert found.group in GROUPS
        assert found.dialects


def test_schema_lookup():
    assert isinstance(axiom("par-comm"), AxiomSchema)
    assert isinstance(rule("par-mono"), RuleSchema)
    with pytest.raises(InputError):
        rule("par-comm")
    with pytest.raises(InputError):
        axiom("par-mono")
    with pytest.raises(InputError):
        schema("no-such-line")


def test_instantiate_axiom():
    instance = instantiate_axiom("par-comm", {"A": f("0"), "B": f("T")})
    assert alpha_equal(instance, f("0 | T <-> T | 0"))


def test_instantiate_axiom_checks_side_conditions():
    with pytest.raises(SideConditionError) as excinfo:
        instantiate_axiom("reveal-alpha", {"a": "a", "b": "c", "A": f("<'c<T>>T")})
    assert excinfo.value.schema == "reveal-alpha"


def test_schemas_for_dialect():
    weak = {s.id for s in schemas_for(Dialect.WL)}
    strong = {s.id for s in schemas_for(Dialect.SL)}
    assert "out-intro" in strong and "out-intro" not in weak
    assert "par-comm" in strong and "par-comm" in weak


def test_schema_json_describes_the_line():
    document = axiom("par-unit").to_json()
    assert document["kind"] == "axiom"
    assert document["template"] == "A | 0 <-> A"


def test_tautology():
    assert tautology(f("A or not A"))
    assert tautology(f("<tau>T -> <tau>T"))
    assert not tautology(f("A -> B"))


# ---- kernel and scripts ------------------------------------------------------


def test_small_script_is_accepted():
    report = check_proof(parse_script(SMALL_SCRIPT))
    assert report.accepted
    assert report.to_json() == {"result": "accept", "step": None, "reason": None}


def test_unjustified_step_is_rejected():
    script = SMALL_SCRIPT.replace("2: A | 0 <-> A BY", "2: A | 0 <-> T BY")
    report = check_proof(parse_script(script))
    assert not report.accepted
    assert report.step == 2
    assert "par-unit" in report.reason


def test_forward_citation_is_rejected():
    script = SMALL_SCRIPT.replace("taut(1, 2)", "taut(1, 3)")
    report = check_proof(parse_script(script))
    assert not report.accepted
    assert report.step == 3


def test_last_step_must_prove_goal():
    script = SMALL_SCRIPT.replace("goal: A | 0", "goal: 0 | A")
    report = check_proof(parse_script(script))
    assert not report.accepted
    assert "goal" in report.reason


def test_axiom_outside_goal_dialect_is_rejected():
    script = "dialect: wl\ngoal: out a<0>.0 -> <'a<0>>0\n1: out a<0>.0 -> <'a<0>>0 BY axiom(out-intro; a := a, A := 0, B := 0)\n"
    report = check_proof(parse_script(script))
    assert not report.accepted
    assert report.step == 1


def test_packaged_bang_proof_is_accepted():
    proof = parse_script(packaged_script_text(), source="appendix_f.proof")
    assert proof.goal.dialect is Dialect.MUSL
    assert check_proof(proof).accepted


def test_tampered_bang_proof_is_rejected():
    text = packaged_script_text().replace("par-comm; A := A, B := !A", "par-comm; A := !A, B := A")
    report = check_proof(parse_script(text))
    assert not report.accepted
    assert report.step == 5


def test_rendered_script_reads_back():
    proof = parse_script(packaged_script_text())
    again = parse_script(render_script(proof, comment="regenerated"))
    assert len(again.steps) == len(proof.steps)
    assert check_proof(again).accepted


@pytest.mark.parametrize(
    "script, line",
    [
        ("1: T BY taut\n", 1),
        ("goal: T\n2: T BY taut\n", 2),
        ("goal: T\n1: T\n", 2),
        ("goal: T\n1: T BY guesswork\n", 2),
        ("dialect: modal\ngoal: T\n", 1),
        ("goal: T\n1: T BY taut\ngoal: 0\n", 3),
        ("goal: T\n1: A BY axiom(par-unit; Q := A)\n", 2),
    ],
)
def test_malformed_scripts(script, line):
    with pytest.raises(ParseError) as excinfo:
        parse_script(script, source="broken.proof")
    assert excinfo.value.source == "broken.proof"
    assert excinfo.value.line == line


# ---- generators --------------------------------------------------------------


@pytest.mark.parametrize(
    "left, right",
    [
        ("a<0>.0 | 0", "a<0>.0"),
        ("(nu a)0", "0"),
        ("a.0 | b.0", "b.0 | a.0"),
        ("(nu a)(a.0 | b.0)", "(nu a)a.0 | b.0"),
        ("(nu a)(nu b)(a.0 | b.0)", "(nu b)(nu a)(b.0 | a.0)"),
        ("(nu b)(a<b(U).U>.0)", "(nu c)(a<c(U).U>.0)"),
        ("(nu a)a.0 | (nu a)a.0", "(nu a)a.0 | (nu a)a.0"),
        ("(nu a)(nu a)a.0", "(nu a)a.0"),
        ("(nu a)(a.0 | (nu a)a.0)", "(nu b)b.0 | (nu c)c.0"),
        ("(nu a)a.0 | (nu b)b.0", "(nu b)b.0 | (nu a)a.0"),
        ("a(X).(nu b)b.X", "a(X).(nu c)c.X"),
        ("a(X).((nu b)b.0 | (nu c)c.X)", "a(X).(nu c)(nu b)(c.X | b.0)"),
        ("(nu a)(a.0 | a(X).(nu a)a.X)", "(nu b)(b.0 | b(X).(nu c)c.X)"),
    ],
)
def test_prove_congruence(left, right):
    proof = prove_congruence(p(left), p(right))
    assert proof.goal.premises == (embed(p(left)),)
    assert proof.goal.conclusion == embed(p(right))
    assert check_proof(proof).accepted


def test_prove_congruence_rejects_incongruent_processes():
    with pytest.raises(GenerationError):
        prove_congruence(p("a.0"), p("b.0"))


def test_identical_processes_need_no_rewriting():
    term = p("(nu a)a.0 | (nu a)a.0")
    proof = prove_congruence(term, term)
    assert len(proof.steps) == 2
    assert check_proof(proof).accepted


def test_extrusion_inside_an_input_body():
    proof = prove_congruence(
        p("a(X).((nu b)b.0 | (nu c)c.X)"), p("a(X).(nu c)(nu b)(c.X | b.0)")
    )
    assert check_proof(proof).accepted
    laws = {s.justification.schema for s in proof.steps if isinstance(s.justification, Axiom)}
    assert "not-free-res" in laws


@pytest.mark.parametrize(
    "source, action, target",
    [
        ("a<0>.0", Out("a", (), NIL), "0"),
        ("a<b.0>.c.0 | d.0", Out("a", (), p("b.0")), "c.0 | d.0"),
        ("a(X).(X | X)", In("a", p("b.0")), "b.0 | b.0"),
        ("a<0>.0 | a(X).X", Tau(), "0"),
    ],
)
def test_prove_strong_transition(source, action, target):
    proof = prove_transition(p(source), action, p(target))
    assert check_proof(proof).accepted


def test_prove_weak_transition():
    proof = prove_transition(
        p("(nu c)(c<0>.0 | c(X).a<0>.0)"), Out("a", (), NIL), NIL, weak=True
    )
    assert proof.goal.dialect is Dialect.WL
    assert check_proof(proof).accepted


def test_prove_transition_extruding_a_restricted_name():
    [t] = step(p("(nu b)a<b.0>.0"), Query.out())
    proof = prove_transition(t.source, t.action, t.target)
    assert check_proof(proof).accepted


@pytest.mark.parametrize("source", ["(nu a)(a<0>.0 | a(X).X)", "(nu c)(c<0>.0 | c(X).a<0>.0)"])
def test_strong_tau_under_restriction_needs_the_weak_mode(source):
    transitions = step(p(source), Query.tau())
    assert transitions
    for t in transitions:
        with pytest.raises(
            GenerationError,
            match="a tau-step under a restriction has no strong axiom; use the weak mode",
        ):
            prove_transition(t.source, t.action, t.target)
        assert check_proof(prove_transition(t.source, t.action, t.target, weak=True)).accepted


def test_prove_transition_rejects_non_transition():
    with pytest.raises(GenerationError):
        prove_transition(p("a<0>.0"), Out("b", (), NIL), NIL)
    with pytest.raises(InputError):
        prove_transition(p("a<0>.X"), Out("a", (), NIL), p("X"))


@settings(max_examples=25, deadline=None)
@given(processes)
def test_congruence_proofs_for_generated_terms(term):
    proof = prove_congruence(term, standard_form(term))
    assert check_proof(proof).accepted


def test_fixpoint_induction_needs_a_monotone_body():
    script = (
        "dialect: musl\n"
        "goal: (mu X.(X |> 0)) -> T\n"
        "1: (T |> 0) -> T BY taut\n"
        "2: (mu X.(X |> 0)) -> T BY muind(1)\n"
    )
    report = check_proof(parse_script(script))
    assert not report.accepted
    assert report.step == 2
    assert "not monotone" in report.reason
    monotone = script.replace("X |> 0", "0 |> X").replace("T |> 0", "0 |> T")
    assert check_proof(parse_script(monotone)).accepted


# ---- generated round trips ---------------------------------------------------

# Derivations that have no strong axiom, or whose payload keeps a restriction
# after extrusion, are the only transitions allowed to fail.
KNOWN_GAPS = ("tau-step under a restriction", "(~-)")


def _congruent_pairs(count: int) -> list:
    first_seen: dict[str, object] = {}
    pairs = []
    for term in generate_many(41, "process", 5, 3000):
        key = canonical_key(term)
        other = first_seen.setdefault(key, term)
        if other != term:
            pairs.append((other, term))
    for term in generate_many(42, "process", 6, count):
        pairs.append((term, standard_form(term)))
    return random.Random(43).sample(pairs, count)


def _sampled_transitions(weak: bool, count: int) -> list:
    found = []
    for term in generate_many(44, "process", 6, 400):
        queries = [Query.tau(), Query.out()]
        queries += [Query.input(subject, NIL) for subject in input_subjects(term)]
        for query in queries:
            if weak:
                candidates, _ = weak_transitions(term, query, 4)
            else:
                candidates = step(term, query)
            found += [
                t
                for t in candidates
                if not (weak and isinstance(t.action, Tau) and congruent(t.target, term))
            ]
    assert len(found) >= count
    return random.Random(45).sample(found, count)


@pytest.mark.slow
def test_sampled_congruent_pairs_have_checked_proofs():
    for left, right in _congruent_pairs(100):
        proof = prove_congruence(left, right)
        assert check_proof(proof).accepted, (str(left), str(right))


@pytest.mark.slow
@pytest.mark.parametrize("weak", [False, True], ids=["strong", "weak"])
def test_sampled_transitions_have_checked_proofs(weak):
    proved = 0
    for t in _sampled_transitions(weak, 100):
        if not weak:
            assert check(t.source, action_formula(t.action, embed(t.target))).holds
        try:
            proof = prove_transition(t.source, t.action, t.target, weak)
        except GenerationError as error:
            assert any(gap in str(error) for gap in KNOWN_GAPS), str(error)
            continue
        assert check_proof(proof).accepted, (str(t.source), str(t.action), str(t.target))
        proved += 1
    assert proved >= 25
