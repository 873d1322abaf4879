from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from illumcover.geometry import InvalidInput
from illumcover.nd import (
    Ball,
    Box,
    DimensionMismatch,
    DoubleCone,
    SplitVector,
    UnitHead,
    box_t_cover,
    doublecone_part1_translate,
    doublecone_refute_iv,
    member,
    rational_sphere_point,
)

q = st.fractions(min_value=-1, max_value=1, max_denominator=12)


def test_membership_modes():
    C = DoubleCone(3)
    assert member(C, (F(0), F(0), F(1)))
    assert not member(C, (F(0), F(0), F(1)), "open")
    assert member(C, (F(3, 5), F(4, 5), F(0)))
    assert not member(C, (F(3, 5), F(4, 5), F(1, 100)))
    assert member(Box.cube(3), (F(1), F(-1), F(0)))
    assert not member(Box.cube(3), (F(1), F(0), F(0)), "open")
    assert member(Ball(2, (0, 0), 1), (F(3, 5), F(4, 5)))
    with pytest.raises(DimensionMismatch):
        member(C, (F(0), F(0)))


def test_split_vector_arithmetic():
    a = SplitVector.of([1, 2, 3])
    b = SplitVector.of([F(1, 2), 0, -1])
    assert (a + b).coords == (F(3, 2), F(2), F(2))
    assert (a - a).coords == (0, 0, 0)
    assert a.scaled(2).last == 6
    assert a.head_norm_sq() == 5
    with pytest.raises(DimensionMismatch):
        a + SplitVector.of([1, 2])


@pytest.mark.parametrize("n", range(1, 7))
def test_cube_two_translates(n):
    cov = box_t_cover(n, 1)
    assert cov.verified and len(cov.translations) == 2
    bad = box_t_cover(n, F(3, 2))
    assert not bad.verified
    assert abs(bad.witness[0]) < 1
    if n >= 2:
        assert member(Box.cube(n), bad.witness)


def test_box_cover_rejects_bad_delta():
    with pytest.raises(InvalidInput):
        box_t_cover(3, 2)
    with pytest.raises(InvalidInput):
        box_t_cover(3, 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=3, max_value=5), st.data())
def test_part1_translate_lands_in_cone(n, data):
    x = [data.draw(q) for _ in range(n)]
    if not member(DoubleCone(n), x):
        return
    res = doublecone_part1_translate(x)
    assert res.verified
    if isinstance(res.contact, UnitHead):
        assert res.case == 3
    else:
        assert member(DoubleCone(n), SplitVector.of(x) + res.contact)


def test_part1_rejects_outside_points():
    with pytest.raises(InvalidInput):
        doublecone_part1_translate((F(1), F(1), F(1)))


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=9), min_size=1, max_size=4))
def test_rational_sphere_points(u):
    p = rational_sphere_point(u)
    assert sum(c * c for c in p) == 1


def _equator(n, u):
    return SplitVector.of(rational_sphere_point(u) + (F(0),))


def test_refutation_transcript():
    x0 = _equator(3, [F(1, 3)])
    contacts = [_equator(3, [F(2)]), SplitVector.of([0, 0, 1]), SplitVector.of([0, 0, -1])]
    tr = doublecone_refute_iv(contacts, x0)
    assert tr.validate()
    assert tr.sample_hits([F(k, 16) for k in range(1, 40)]) == 0


def test_refutation_needs_equator_point():
    with pytest.raises(InvalidInput):
        doublecone_refute_iv([], SplitVector.of([0, 0, 1]))
    x0 = _equator(3, [F(1, 3)])
    with pytest.raises(InvalidInput):
        doublecone_refute_iv([x0], x0)
    with pytest.raises(InvalidInput):
        doublecone_refute_iv([SplitVector.of([F(1, 2), 0, 0])], x0)
