"""Exit criteria of the build, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints a
PASS/FAIL line per criterion.
"""

import json
import random
import subprocess
import sys
import time
from itertools import chain, combinations

import pytest

from safsolver import FIXTURES, fixture_path, load_fixture
from safsolver.core import check_core_first, decompose, lift
from safsolver.explanation import explain, explanation_loss_witness, minimal_justifications
from safsolver.generate import random_corpus
from safsolver.oracle import oracle_dung, oracle_extensions
from safsolver.projection import (
    check_preservation,
    dung_extensions,
    find_collision,
    forget,
    reach_divergence,
)
from safsolver.semantics import Semantics, characteristic, conflict_free, extensions, grounded

CHAIN = frozenset({"b1", "b2", "b3", "b4", "b5"})


def subsets(items):
    items = sorted(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


@pytest.fixture(scope="module")
def fixtures():
    return [load_fixture(name) for name in FIXTURES]


@pytest.fixture(scope="module")
def corpus(fixtures):
    return fixtures + random_corpus(seed=2024, count=500, max_args=7)


@pytest.mark.acceptance("AC01 motivating example: golden extensions, fast == oracle, < 1 s")
def test_ac01_motivating():
    start = time.perf_counter()
    saf = load_fixture("motivating")
    expected = {
        "complete": {frozenset(), frozenset({"a"}), CHAIN},
        "grounded": {frozenset()},
        "preferred": {frozenset({"a"}), CHAIN},
        "stable": {frozenset({"a"}), CHAIN},
    }
    for sem, values in expected.items():
        derived = oracle_extensions(saf, sem)
        assert derived.as_set() == values
        assert extensions(saf, sem) == derived
    assert extensions(saf, "admissible") == oracle_extensions(saf, "admissible")
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance("AC02 core decomposition example: CH={a,b}, SD={c}, lift = {a}")
def test_ac02_core_example():
    saf = load_fixture("status_lift")
    dec = decompose(saf)
    assert dec.ch == {"a", "b"} and dec.sd == {"c"}
    (core_grounded,) = dung_extensions(dec.core, "grounded").extensions
    assert core_grounded == {"a"}
    assert lift(saf, core_grounded, dec) == {"a"}


@pytest.mark.acceptance("AC03 forgetting preserves all five semantics on 500 random SAFs, < 5 min")
def test_ac03_preservation():
    start = time.perf_counter()
    failures = []
    for saf in random_corpus(seed=3, count=500, max_args=7):
        for sem in Semantics:
            report = check_preservation(saf, sem)
            if not report.equal:
                failures.append((saf, sem, report.counterexample))
    assert failures == []
    assert time.perf_counter() - start < 300


@pytest.mark.acceptance("AC04 the characteristic function yields subargument-closed sets")
def test_ac04_def_closed(fixtures):
    violations = []
    for saf in fixtures + random_corpus(seed=4, count=200, max_args=6):
        for E in subsets(saf.arguments):
            d = characteristic(saf, E)
            violations += [(saf, E, a) for a in d if not saf.sub_closure(a) <= d]
    assert violations == []


@pytest.mark.acceptance("AC05 the characteristic function is monotone (1000 pairs per fixture)")
def test_ac05_monotone(fixtures):
    rng = random.Random(5)
    violations = 0
    for saf in fixtures:
        args = sorted(saf.arguments)
        for _ in range(1000):
            small = frozenset(x for x in args if rng.random() < 0.5)
            large = small | frozenset(x for x in args if rng.random() < 0.5)
            if not characteristic(saf, small) <= characteristic(saf, large):
                violations += 1
    assert violations == 0


@pytest.mark.acceptance("AC06 complete extensions are exactly the conflict-free fixpoints")
def test_ac06_fixpoints(fixtures):
    for saf in fixtures + random_corpus(seed=6, count=200, max_args=6):
        sweep = {E for E in subsets(saf.arguments) if conflict_free(saf, E) and characteristic(saf, E) == E}
        assert extensions(saf, "complete").as_set() == sweep


@pytest.mark.acceptance("AC07 grounded = least fixpoint = intersection of complete extensions")
def test_ac07_grounded(corpus):
    for saf in corpus:
        least, step = frozenset(), characteristic(saf, frozenset())
        while step != least:
            least, step = step, characteristic(saf, step)
        complete = extensions(saf, "complete").as_set()
        (g,) = grounded(saf).extensions
        assert g == least == frozenset.intersection(*complete)
        assert all(g <= E for E in complete)


@pytest.mark.acceptance("AC08 find_collision(3) returns a verified witness in < 10 s")
def test_ac08_collision():
    start = time.perf_counter()
    w = find_collision(3)
    assert w.f1 != w.f2
    assert forget(w.f1) == forget(w.f2) == w.projected
    assert time.perf_counter() - start < 10


@pytest.mark.acceptance("AC09 reach divergence: (b3, {b3,b4,b5}, {b3}) on the motivating chain")
def test_ac09_reach():
    rows = reach_divergence(load_fixture("motivating"))
    assert ("b3", frozenset({"b3", "b4", "b5"}), frozenset({"b3"})) in rows
    assert reach_divergence(load_fixture("status_lift"))


@pytest.mark.acceptance("AC10 completeness is core-determined on fixtures and 200 random SAFs")
def test_ac10_core_first(fixtures):
    failures = []
    for saf in fixtures + random_corpus(seed=10, count=200, max_args=7):
        report = check_core_first(saf)
        if not report.passed:
            failures.append((saf, report))
    assert failures == []


@pytest.mark.acceptance("AC11 lift is monotone and the grounded lift is least")
def test_ac11_lift(fixtures):
    for saf in fixtures:
        dec = decompose(saf)
        assert len(dec.ch) <= 6
        core_sets = subsets(dec.ch)
        lifted = {C: lift(saf, C, dec) for C in core_sets}
        for C1 in core_sets:
            for C2 in core_sets:
                if C1 <= C2:
                    assert lifted[C1] <= lifted[C2]
        (g,) = dung_extensions(dec.core, "grounded").extensions
        lifted_complete = [lifted[C] for C in dung_extensions(dec.core, "complete")]
        assert all(lifted[g] <= L for L in lifted_complete)
        assert grounded(saf).extensions == (lifted[g],)


def _explain_json(path, extension, arg):
    argv = [sys.executable, "-m", "safsolver", "explain", str(path), "--semantics", "complete",
            "--extension", ",".join(sorted(extension)), "--arg", arg, "--json"]
    return subprocess.run(argv, capture_output=True, check=True).stdout


@pytest.mark.acceptance("AC12 every accepted argument has a justification; explain is deterministic")
def test_ac12_justification(fixtures):
    for saf in fixtures:
        for E in extensions(saf, "complete"):
            for a in sorted(E):
                assert minimal_justifications(saf, E, a)
                assert explain(saf, "complete", E, a).witness
    for name in ("motivating", "diamond"):
        saf = load_fixture(name)
        E = max(extensions(saf, "complete"), key=len)
        for a in sorted(E):
            first = _explain_json(fixture_path(name), E, a)
            assert first == _explain_json(fixture_path(name), E, a)
            assert json.loads(first)["report"]["target"] == a


@pytest.mark.acceptance("AC13 explanation-losing witness is found and verified in < 30 s")
def test_ac13_loss_witness():
    start = time.perf_counter()
    w = explanation_loss_witness()
    assert forget(w.f1) == forget(w.f2)
    assert w.extension in extensions(w.f1, w.semantics) and w.extension in extensions(w.f2, w.semantics)
    assert w.f1.sub_closure(w.argument) != w.f2.sub_closure(w.argument)
    assert w.explanation1.witness != w.explanation2.witness
    assert time.perf_counter() - start < 30


@pytest.mark.acceptance("AC14 fast solvers equal the brute-force oracle on fixtures + 500 random SAFs")
def test_ac14_oracle(corpus):
    for saf in corpus:
        af = forget(saf)
        for sem in Semantics:
            assert extensions(saf, sem).as_set() == oracle_extensions(saf, sem).as_set()
            assert dung_extensions(af, sem).as_set() == oracle_dung(af, sem).as_set()
