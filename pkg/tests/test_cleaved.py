"""Decorated cleaved links: circles, keys, flips, enumeration."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tanglejones import CleavedGen, Matching, circles_of, enumerate_cleaved

small_gens = st.integers(1, 3).flatmap(lambda n: st.sampled_from(enumerate_cleaved(n)))


def test_basis_counts():
    assert len(enumerate_cleaved(0)) == 1
    assert len(enumerate_cleaved(1)) == 2
    assert len(enumerate_cleaved(2)) == 12
    assert len(enumerate_cleaved(3)) == 104


def test_empty_generator():
    (g,) = enumerate_cleaved(0)
    assert g.n == 0
    assert g.circles() == ()
    assert g.key() == "[||]"


def test_circle_structure_n2():
    nested, parallel = Matching.decode((4, 2)), Matching.decode((2, 4))
    assert circles_of(nested, parallel) == ((1, 2, 3, 4),)
    assert circles_of(parallel, nested) == ((1, 2, 3, 4),)
    assert circles_of(nested, nested) == ((1, 4), (2, 3))
    assert circles_of(parallel, parallel) == ((1, 2), (3, 4))


def test_keys_n2():
    keys = [g.key() for g in enumerate_cleaved(2)]
    assert keys == [
        "[2,4|2,4|++]",
        "[2,4|2,4|+-]",
        "[2,4|2,4|-+]",
        "[2,4|2,4|--]",
        "[2,4|4,2|+]",
        "[2,4|4,2|-]",
        "[4,2|2,4|+]",
        "[4,2|2,4|-]",
        "[4,2|4,2|++]",
        "[4,2|4,2|+-]",
        "[4,2|4,2|-+]",
        "[4,2|4,2|--]",
    ]


def test_flip_is_one_based_and_involutive():
    nested = Matching.decode((4, 2))
    g = CleavedGen(nested, nested, (1, 1))
    assert g.flip(1).decs == (-1, 1)
    assert g.flip(2).decs == (1, -1)
    assert g.flip(1).flip(1) == g
    with pytest.raises(IndexError):
        g.flip(0)
    with pytest.raises(IndexError):
        g.flip(3)


def test_decoration_validation():
    nested = Matching.decode((4, 2))
    with pytest.raises(ValueError):
        CleavedGen(nested, nested, (1,))  # two circles need two signs
    with pytest.raises(ValueError):
        CleavedGen(nested, nested, (1, 0))  # signs are +1 or -1
    with pytest.raises(ValueError):
        CleavedGen(nested, Matching.empty(), ())  # n mismatch


@given(small_gens)
def test_circles_partition_the_points(g):
    seen = sorted(p for circle in g.circles() for p in circle)
    assert seen == list(range(1, 2 * g.n + 1))


@given(small_gens)
def test_circles_alternate_between_sides(g):
    for circle in g.circles():
        pts = set(circle)
        for p in circle:
            assert g.inside.partner(p) in pts
            assert g.outside.partner(p) in pts


@given(small_gens)
def test_key_identifies_generator(g):
    matches = [h for h in enumerate_cleaved(g.n) if h.key() == g.key()]
    assert matches == [g]


def test_enumeration_distinct_keys():
    for n in range(4):
        keys = [g.key() for g in enumerate_cleaved(n)]
        assert len(set(keys)) == len(keys)
