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

from pathlib import Path

import pytest

from hopi_workbench.checker import DEFAULT_BUDGET, check
from hopi_workbench.commands.corpus import exhaustive_phi
from hopi_workbench.corpus import (
    CORPUS_DIR,
    TermGenerator,
    b_chain,
    corpus_path,
    generate,
    generate_many,
    load_alpha,
    load_pairs,
    load_refinement,
    phi_family,
)
from hopi_workbench.errors import InputError
from hopi_workbench.logic import Formula, show_formula
from hopi_workbench.process import Process, depth, show

# ---- phi family ----------------------------------------------------------------


def test_b_chain():
    assert show(b_chain(0)) == "0"
    assert show(b_chain(2)) == "b.b.0"
    assert depth(b_chain(3)) == 3


def test_phi_family_shapes():
    first = phi_family(1)
    assert show(first.witness) == "a<0>.0"
    assert show_formula(first.formula) == "out a<0>.T"
    third = phi_family(3)
    assert show(third.witness) == "a<0>.a<b.0>.a<b.b.0>.0"
    assert third.to_json()["depth"] == depth(third.witness)


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_witness_satisfies_prefix_and_fails_next(n):
    witness = phi_family(n).witness
    for i in range(1, n + 1):
        assert check(witness, phi_family(i).formula).holds, i
    assert check(witness, phi_family(n + 1).formula).fails


def test_phi_family_starts_at_one():
    with pytest.raises(InputError):
        phi_family(0)


def test_no_small_process_satisfies_next_formula():
    result = exhaustive_phi(3, DEFAULT_BUDGET)
    assert result["checked"] > 0
    assert result["satisfying"] == []
    assert result["unknown"] == 0


@pytest.mark.slow
def test_no_process_of_four_constructors_satisfies_phi_5():
    result = exhaustive_phi(4, DEFAULT_BUDGET)
    assert result["formula"] == show_formula(phi_family(5).formula)
    assert result["satisfying"] == []


# ---- generators ------------------------------------------------------------------


def test_generate_is_deterministic():
    assert show(generate(7, "process", 6)) == show(generate(7, "process", 6))
    assert show_formula(generate(7, "formula", 5)) == show_formula(generate(7, "formula", 5))


@pytest.mark.parametrize("seed", range(20))
def test_generated_processes_respect_bounds(seed):
    p = generate(seed, "process", 6)
    assert isinstance(p, Process)
    assert p.closed
    assert p.size <= 6


def test_generate_open_processes_may_mention_variables():
    found = [generate_many(seed, "process", 4, 10, closed=False) for seed in range(5)]
    assert any(not p.closed for batch in found for p in batch)


def test_generate_many_follows_one_stream():
    batch = generate_many(3, "formula", 4, 5)
    assert len(batch) == 5
    assert all(isinstance(a, Formula) for a in batch)
    generator = TermGenerator(3)
    assert [show_formula(a) for a in batch] == [
        show_formula(generator.formula(4)) for _ in range(5)
    ]


@pytest.mark.parametrize(
    "args",
    [(1, "process", 0), (1, "widget", 3)],
)
def test_generate_rejects_bad_arguments(args):
    with pytest.raises(InputError):
        generate(*args)


# ---- fixtures ------------------------------------------------------------------------


def test_corpus_path_accepts_a_leading_corpus_directory():
    assert corpus_path("corpus/pairs.txt") == CORPUS_DIR / "pairs.txt"
    assert corpus_path("appendix_f.proof").is_file()


def test_load_pairs():
    pairs = load_pairs()
    assert [pair.expected for pair in pairs].count("distinguishable") == 5
    assert pairs[0].to_json() == {"expected": "equivalent", "p": "a<0>.0 | 0", "q": "a<0>.0"}


def test_load_pairs_reports_the_bad_line(tmp_path: Path):
    path = tmp_path / "pairs.txt"
    path.write_text("# header\nequivalent: 0 ~ 0\nsimilar: 0 ~ 0\n")
    with pytest.raises(InputError, match=":3:"):
        load_pairs(path)


def test_load_alpha():
    [(left, right)] = load_alpha()
    assert show(left) != show(right)


def test_load_refinement(tmp_path: Path):
    refinement = load_refinement()
    assert refinement.process.closed
    assert set(refinement.to_json()) >= {"process", "spec", "refines"}
    partial = tmp_path / "refinement.txt"
    partial.write_text("process: 0\n")
    with pytest.raises(InputError, match="missing refines, spec"):
        load_refinement(partial)
