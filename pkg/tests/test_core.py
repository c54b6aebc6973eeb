from itertools import chain, combinations

import pytest
from hypothesis import given, settings

from safsolver import validate
from safsolver.core import check_core_first, compare_core, core_extensions, decompose, lift
from safsolver.errors import NotACoreSubset, ValidationError
from safsolver.generate import random_corpus
from safsolver.projection import dung_extensions
from safsolver.semantics import ALL_SEMANTICS, grounded

from conftest import safs

CHAIN = ["b1", "b2", "b3", "b4", "b5"]


def subsets(items):
    items = sorted(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def test_decompose_motivating(motivating):
    dec = decompose(motivating)
    assert dec.ch == {"a", "b1", "b5"}
    assert dec.sd == {"b2", "b3", "b4"}
    assert dec.core.arguments == dec.ch
    assert dec.core.attacks == {("a", "b1"), ("a", "b5"), ("b5", "a")}


def test_decompose_without_attacks():
    saf = validate(["x", "y"], [], [("x", "y")])
    dec = decompose(saf)
    assert dec.ch == set() and dec.sd == {"x", "y"}
    assert len(dec.core) == 0 and not dec.core.attacks


def test_decompose_status_lift(status_lift):
    dec = decompose(status_lift)
    assert dec.ch == {"a", "b"} and dec.sd == {"c"}
    assert dec.core.attacks == {("a", "b")}


def test_lift_examples(motivating, status_lift):
    assert lift(status_lift, {"a"}) == {"a"}
    assert lift(motivating, {"b1", "b5"}) == set(CHAIN)
    assert lift(motivating, set()) == set()


def test_lift_rejects_non_core_sets(motivating):
    with pytest.raises(NotACoreSubset):
        lift(motivating, {"b3"})


def test_core_extensions_examples(motivating, status_lift):
    assert core_extensions(motivating, "complete").as_lists() == [[], ["a"], CHAIN]
    assert core_extensions(status_lift, "grounded").as_lists() == [["a"]]
    flat = validate(["x", "y", "z"], [], [("x", "y")])
    assert core_extensions(flat, "grounded").as_lists() == [["x", "y", "z"]]


def test_core_first_examples(motivating):
    assert check_core_first(motivating).passed
    assert check_core_first(validate(["p", "q"])).passed


def test_core_first_random():
    for saf in random_corpus(seed=11, count=200, max_args=7):
        rep = check_core_first(saf)
        assert rep.passed, rep


def test_other_semantics_are_measured(fixture_corpus):
    for saf in fixture_corpus.values():
        for sem in ALL_SEMANTICS:
            cmp = compare_core(saf, sem)
            assert cmp.equal == (cmp.direct.as_set() == cmp.lifted.as_set())


@given(safs(6))
@settings(max_examples=40, deadline=None)
def test_lift_properties(saf):
    dec = decompose(saf)
    assert lift(saf, dec.ch, dec) == saf.arguments
    for a, b in dec.core.attacks:
        assert a in dec.ch and b in dec.ch
    core_sets = subsets(dec.ch)
    lifted = {c: lift(saf, c, dec) for c in core_sets}
    for c1 in core_sets:
        for c2 in core_sets:
            if c1 <= c2:
                assert lifted[c1] <= lifted[c2]


@given(safs(6))
@settings(max_examples=40, deadline=None)
def test_least_lift(saf):
    dec = decompose(saf)
    (g,) = dung_extensions(dec.core, "grounded").extensions
    least = lift(saf, g, dec)
    assert grounded(saf).extensions == (least,)
    for S in core_extensions(saf, "complete"):
        assert least <= S


def _core_profile(saf, ch):
    return {a: saf.sub_closure(a) & ch for a in saf.arguments}


@given(safs(6))
@settings(max_examples=40, deadline=None)
def test_sd_structure_is_irrelevant(saf):
    """Extra Sub edges among SD arguments that keep every core profile leave the result alone."""
    dec = decompose(saf)
    profile = _core_profile(saf, dec.ch)
    for x in sorted(dec.sd):
        for y in sorted(dec.sd):
            if x == y:
                continue
            try:
                other = validate(saf.arguments, saf.attacks, saf.subargs | {(x, y)})
            except ValidationError:
                continue
            if _core_profile(other, dec.ch) != profile:
                continue
            for sem in ("complete", "grounded"):
                assert core_extensions(other, sem).as_set() == core_extensions(saf, sem).as_set()
