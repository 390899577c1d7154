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

from hopi_workbench.corpus import load_alpha, load_pairs
from hopi_workbench.errors import InputError
from hopi_workbench.equiv import (
    EquivReport,
    Kind,
    Result,
    Strength,
    bisim_bounded,
    distinguish_l,
    l_formulas,
    receiving_contexts,
    recheck,
)
from hopi_workbench.logic import in_sublogic_l, show_formula
from hopi_workbench.process import parse_process


def p(text: str):
    return parse_process(text)


# ---- distinguishing formulas -------------------------------------------------


@pytest.mark.parametrize(
    "left, right, formula",
    [
        ("a<0>.0", "0", "<'a<T>>T"),
        ("a(X).0", "b(X).0", "<a<T>>T"),
        ("0", "a<0>.0", "not <'a<T>>T"),
    ],
)
def test_distinguish_l_finds_smallest_formula(left, right, formula):
    report = distinguish_l(p(left), p(right))
    assert report.result is Result.DISTINGUISHED
    assert show_formula(report.formula) == formula
    assert recheck(p(left), p(right), report)


def test_distinguish_l_finds_nothing_for_congruent_processes():
    report = distinguish_l(p("a<0>.0 | 0"), p("a<0>.0"))
    assert report.result is Result.NONE_FOUND
    assert report.formula is None
    assert report.bounds["size_bound"] == 6
    assert not recheck(p("a<0>.0 | 0"), p("a<0>.0"), report)


def test_distinguish_l_requires_closed_processes():
    with pytest.raises(InputError):
        distinguish_l(p("X"), p("0"))


def test_curated_pairs_match_expectation():
    pairs = load_pairs()
    assert len(pairs) == 10
    assert sum(pair.expected == "equivalent" for pair in pairs) == 5
    for pair in pairs:
        report = distinguish_l(pair.p, pair.q)
        if pair.expected == "equivalent":
            assert report.result is Result.NONE_FOUND, pair.to_json()
        else:
            assert report.result is Result.DISTINGUISHED, pair.to_json()
            assert recheck(pair.p, pair.q, report)


def test_l_formulas_are_in_the_sublogic_and_grow_by_size():
    found = list(l_formulas(["a"], [], 5))
    assert found
    assert all(in_sublogic_l(a) for a in found)
    sizes = [a.size for a in found]
    assert sizes == sorted(sizes)
    assert {show_formula(a) for a in found if a.size == 3} == {"<'a<T>>T", "<a<T>>T"}


# ---- bisimulation games ------------------------------------------------------


@pytest.mark.parametrize(
    "left, right, kind, strength, expected",
    [
        ("0", "(nu a)0", Kind.CONTEXT, Strength.STRONG, Result.NONE_FOUND),
        ("a<0>.0", "0", Kind.BARBED, Strength.STRONG, Result.DISTINGUISHED),
        ("(nu a)(a<0>.0 | a(X).X)", "0", Kind.BARBED, Strength.WEAK, Result.NONE_FOUND),
        ("(nu a)(a<0>.0 | a(X).X)", "0", Kind.BARBED, Strength.STRONG, Result.DISTINGUISHED),
        ("a<0>.0", "0", Kind.CONTEXT, Strength.STRONG, Result.DISTINGUISHED),
        ("a(X).0", "b(X).0", Kind.CONTEXT, Strength.STRONG, Result.DISTINGUISHED),
        ("a.0 | b.0", "b.0 | a.0", Kind.CONTEXT, Strength.STRONG, Result.NONE_FOUND),
    ],
)
def test_bisim_bounded(left, right, kind, strength, expected):
    report = bisim_bounded(p(left), p(right), kind, strength)
    assert report.result is expected
    assert report.bounds["kind"] == kind.value
    assert report.bounds["strength"] == strength.value
    if expected is Result.DISTINGUISHED:
        assert report.trace
        assert report.formula is None
    else:
        assert report.trace == ()


def test_bisim_accepts_plain_strings_for_kind_and_strength():
    report = bisim_bounded(p("a<0>.0"), p("0"), "barbed", "weak")
    assert report.bounds["kind"] == "barbed"
    assert report.distinguished


def test_alpha_variants_are_not_distinguished():
    for left, right in load_alpha():
        report = bisim_bounded(left, right, Kind.CONTEXT, Strength.STRONG, depth=2, breadth=4)
        assert report.result is Result.NONE_FOUND


def test_bisim_requires_closed_processes():
    with pytest.raises(InputError):
        bisim_bounded(p("a<0>.X"), p("0"))


def test_receiving_contexts():
    contexts = receiving_contexts(("a",), 3, 5)
    assert 0 < len(contexts) <= 5
    assert all(c.free_vars == {"U"} for c in contexts)


def test_equiv_report_json_and_text():
    report = distinguish_l(p("a<0>.0"), p("0"))
    document = report.to_json()
    assert document["result"] == "distinguished"
    assert document["formula"] == "<'a<T>>T"
    assert document["trace"] == []
    assert str(report) == "distinguished by <'a<T>>T"
    assert str(EquivReport(Result.NONE_FOUND)) == "no distinction found within the bounds"
