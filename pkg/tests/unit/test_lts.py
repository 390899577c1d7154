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

from hopi_workbench.corpus import TermGenerator
from hopi_workbench.errors import InputError
from hopi_workbench.lts import (
    Barb,
    In,
    Out,
    Query,
    Tau,
    barbs,
    step,
    tau_path,
    weak_reach,
    weak_transitions,
)
from hopi_workbench.corpus import generate_many
from hopi_workbench.process import (
    NIL,
    Par,
    canonical_key,
    congruent,
    parse_process,
    replication_encode,
    standard_form,
)

processes = st.integers(min_value=0, max_value=10**6).map(lambda s: TermGenerator(s).process(5))


def p(text: str):
    return parse_process(text)


HANDSHAKE = "(nu c)(c<0>.0 | c(X).a<0>.0)"


# ---- strong transitions ------------------------------------------------------


def test_output_transition():
    [t] = step(p("a<b.0>.c.0"), Query.out())
    assert t.action == Out("a", (), p("b.0"))
    assert congruent(t.target, p("c.0"))
    assert str(t.action) == "'a<b.0>"


def test_output_on_restricted_channel_is_not_observable():
    assert step(p("(nu a)a<0>.0"), Query.out()) == []


def test_output_extrudes_restricted_payload_names():
    [t] = step(p("(nu b)a<b.0>.b<0>.0"), Query.out())
    assert t.action.subject == "a"
    assert len(t.action.extruded) == 1
    (name,) = t.action.extruded
    assert name in t.action.payload.free_names
    assert name in t.target.free_names


def test_input_transition_substitutes_payload():
    [t] = step(p("a(X).(X | X)"), Query.input("a", p("b.0")))
    assert t.action == In("a", p("b.0"))
    assert congruent(t.target, p("b.0 | b.0"))


def test_input_on_other_channel_has_no_transition():
    assert step(p("a(X).X"), Query.input("b", NIL)) == []


def test_input_payload_with_bound_names_is_rejected():
    with pytest.raises(InputError):
        step(p("a(X).X"), Query.input("a", p("(nu c)c.0")))


def test_communication():
    [t] = step(p("a<0>.0 | a(X).X"), Query.tau())
    assert t.action == Tau()
    assert congruent(t.target, NIL)


def test_communication_extrudes_scope_to_receiver():
    [t] = step(p("(nu b)a<b.0>.0 | a(X).X"), Query.tau())
    assert congruent(t.target, p("(nu b)b.0"))


def test_communication_under_restriction():
    [t] = step(p(HANDSHAKE), Query.tau())
    assert congruent(t.target, p("a<0>.0"))


def test_targets_are_deduplicated_up_to_congruence():
    transitions = step(p("a<0>.0 | a<0>.0 | a(X).X"), Query.tau())
    assert len(transitions) == 1


def test_step_requires_closed_process():
    with pytest.raises(InputError):
        step(p("a<0>.X"), Query.out())


def test_unknown_query_kind():
    with pytest.raises(InputError):
        step(NIL, Query("sideways"))


# ---- barbs and weak closure --------------------------------------------------


def test_strong_barbs():
    assert barbs(p("a<0>.0 | b(X).X")) == [Barb("a", True), Barb("b", False)]
    assert [str(b) for b in barbs(p("a<0>.0 | b(X).X"))] == ["'a", "b"]


def test_weak_barbs_look_through_tau():
    assert barbs(p(HANDSHAKE)) == []
    assert barbs(p(HANDSHAKE), weak=True) == [Barb("a", True)]


def test_weak_reach():
    reach = weak_reach(p(HANDSHAKE), 8)
    assert not reach.truncated
    keys = {canonical_key(s) for s in reach.states}
    assert keys == {canonical_key(p(HANDSHAKE)), canonical_key(p("a<0>.0"))}


def test_weak_reach_reports_truncation():
    reach = weak_reach(p("a<0>.0 | a(X).X"), 0)
    assert reach.truncated
    assert len(reach.states) == 1


def test_tau_path():
    path = tau_path(p(HANDSHAKE), p("a<0>.0"), 8)
    assert path is not None
    assert len(path) == 2
    assert tau_path(p(HANDSHAKE), p("b.0"), 8) is None


def test_weak_output_transition():
    found, truncated = weak_transitions(p(HANDSHAKE), Query.out(), 8)
    assert not truncated
    assert [t.action for t in found] == [Out("a", (), NIL)]
    assert congruent(found[0].target, NIL)


def test_weak_tau_is_the_epsilon_closure():
    found, _ = weak_transitions(p(HANDSHAKE), Query.tau(), 8)
    assert len(found) == 2


# ---- properties --------------------------------------------------------------


def _targets(term, query):
    return {(str(t.action), canonical_key(t.target)) for t in step(term, query)}


@settings(max_examples=50, deadline=None)
@given(processes)
def test_transitions_are_invariant_under_congruence(term):
    other = standard_form(term)
    assert _targets(term, Query.tau()) == _targets(other, Query.tau())
    assert len(step(term, Query.out())) == len(step(other, Query.out()))


@settings(max_examples=50, deadline=None)
@given(processes)
def test_targets_of_closed_processes_are_closed(term):
    for t in step(term, Query.tau()) + step(term, Query.out()):
        assert t.target.closed


# ---- replication encoding ----------------------------------------------------


def test_encoded_replication_spawns_one_copy():
    body = p("b.0")
    encoded = replication_encode(body, "r")
    [t] = step(encoded, Query.tau())
    assert congruent(t.target, Par(body, encoded))
    assert congruent(
        t.target,
        p("b.0 | (nu r)(r(X).(X | r<X>.0) | r<b.0 | r(X).(X | r<X>.0)>.0)"),
    )


def test_encoded_replication_of_generated_processes():
    # only payloads without restrictions are communicated
    bodies = [b for b in generate_many(17, "process", 5, 200) if not standard_form(b).bound_names]
    assert len(bodies) >= 20
    for body in bodies[:20]:
        encoded = replication_encode(body, "r")
        targets = [t.target for t in step(encoded, Query.tau())]
        assert len(targets) == 1
        assert congruent(targets[0], Par(body, encoded)), str(body)
