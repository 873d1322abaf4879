from fractions import Fraction as F

import pytest
from conftest import polygons
from hypothesis import given, settings

from illumcover.covering import (
    CountResult,
    EpsSpec,
    condition_iii_check,
    condition_iii_iv_check,
    construct_H,
    finiteness_necessary_conditions,
    disc_quantified,
    finite_at_circumradius,
    number_c,
    number_i,
    number_t_bounds,
    quantified_count,
    threshold_check,
    verify_count,
    verify_disc,
)
from illumcover.geometry import InvalidInput, Mode, circumball, contact_set, cover_residual, make_polygon, neg
from illumcover.illumination import IlluminationSystem, system_illuminates_all
from illumcover.shapes import regular_ngon

SQUARE = make_polygon([(F(-1), F(-1)), (F(1), F(-1)), (F(1), F(1)), (F(-1), F(1))])
TRIANGLE = make_polygon([(F(0), F(0)), (F(4), F(0)), (F(0), F(3))])
RECT = make_polygon([(F(0), F(0)), (F(4), F(0)), (F(4), F(2)), (F(0), F(2))])


@pytest.mark.parametrize("text,kind,value", [
    ("1/2", "rational", F(1, 2)),
    ("R", "circumradius", F(1)),
    ("9/10*R", "circumradius", F(9, 10)),
    ("0.99R", "circumradius", F(99, 100)),
])
def test_eps_parse(text, kind, value):
    e = EpsSpec.parse(text)
    assert (e.kind, e.value) == (kind, value)
    assert EpsSpec.parse(str(e)) == e


def test_eps_rejects_nonpositive():
    with pytest.raises(InvalidInput):
        EpsSpec.rational(0)


def test_square_numbers():
    assert number_i(SQUARE)[0] == 2
    m, dirs = number_c(SQUARE)
    assert m == 4
    assert system_illuminates_all(IlluminationSystem.directions(dirs), SQUARE, Mode.OPEN)
    tb = number_t_bounds(SQUARE)
    assert (tb.lo, tb.hi) == (2, 2)
    assert cover_residual(SQUARE, tb.certificate, Mode.CLOSED).covered


def test_triangle_numbers():
    assert number_i(TRIANGLE)[0] == 3
    assert number_c(TRIANGLE)[0] == 3


@settings(max_examples=40, deadline=None)
@given(polygons())
def test_classical_numbers_ordered(K):
    i, idirs = number_i(K)
    c, cdirs = number_c(K)
    assert 2 <= i <= c <= 4 or (i == c == 3)
    assert system_illuminates_all(IlluminationSystem.directions(idirs), K, Mode.CLOSED)
    assert system_illuminates_all(IlluminationSystem.directions(cdirs), K, Mode.OPEN)
    tb = number_t_bounds(K)
    assert i <= tb.lo <= tb.hi <= c


def test_finiteness_examples():
    assert not finite_at_circumradius(TRIANGLE).verdict
    assert finite_at_circumradius(RECT).verdict
    assert finite_at_circumradius(regular_ngon(6)).verdict
    cert = finite_at_circumradius(TRIANGLE)
    assert cert.gap_witness is not None


def test_condition_checks_on_rectangle():
    contacts = contact_set(RECT)
    assert condition_iii_iv_check(RECT, contacts)
    assert not condition_iii_iv_check(RECT, contacts[:3])
    assert condition_iii_check(RECT, contacts)
    with pytest.raises(InvalidInput):
        condition_iii_iv_check(RECT, [(F(1), F(1))])


def test_condition_iii_on_boundary_center():
    # right triangle: c_K is the hypotenuse midpoint; the contact cones miss
    # the directions between -x and -y, which point into K
    contacts = contact_set(TRIANGLE)
    assert not condition_iii_iv_check(TRIANGLE, contacts)
    assert not condition_iii_check(TRIANGLE, contacts)


@settings(max_examples=40, deadline=None)
@given(polygons())
def test_condition_forms_agree_for_interior_center(K):
    contacts = contact_set(K)
    full = condition_iii_iv_check(K, contacts)
    assert full == finite_at_circumradius(K).verdict
    if finiteness_necessary_conditions(K)["center_interior"]:
        assert condition_iii_check(K, contacts) == full
    elif full:
        assert condition_iii_check(K, contacts)


def test_finiteness_necessary_conditions():
    assert finiteness_necessary_conditions(RECT) == {
        "half_circle": True, "center_interior": True, "contacts": 4, "at_least_three": True}
    tri = finiteness_necessary_conditions(TRIANGLE)
    assert not tri["center_interior"]


@pytest.mark.parametrize("n", [4, 6, 8, 12])
def test_construct_H_size_and_coverage(n):
    K = regular_ngon(n)
    H = construct_H(K)
    assert len(H) <= 12
    assert condition_iii_iv_check(K, H)


def test_threshold_beyond_radius():
    res = threshold_check(SQUARE, EpsSpec.circumradius(F(101, 100)))
    assert res.is_infinite
    assert res.witness == circumball(SQUARE).center


def test_quantified_rectangle_at_R():
    eps = EpsSpec.circumradius(1)
    res = quantified_count(RECT, eps, Mode.CLOSED)
    assert res.is_finite and res.m == 4
    assert verify_count(RECT, eps, Mode.CLOSED, res)
    c = circumball(RECT).center
    assert sorted(res.certificate) == sorted((c[0] - v[0], c[1] - v[1]) for v in RECT.vertices)


def test_quantified_open_at_R_is_infinite():
    res = quantified_count(RECT, EpsSpec.circumradius(1), Mode.OPEN)
    assert res.is_infinite and res.witness == circumball(RECT).center
    assert verify_count(RECT, EpsSpec.circumradius(1), Mode.OPEN, res)


def test_quantified_small_eps_square():
    eps = EpsSpec.rational(F(1, 4))
    closed = quantified_count(SQUARE, eps, Mode.CLOSED)
    opened = quantified_count(SQUARE, eps, Mode.OPEN)
    assert (closed.m, opened.m) == (2, 4)
    assert verify_count(SQUARE, eps, Mode.CLOSED, closed)
    assert verify_count(SQUARE, eps, Mode.OPEN, opened)


def test_quantified_needs_irrational_step():
    # the optimal 3-cover uses a step whose coordinates are surds
    eps = EpsSpec.circumradius(F(9, 10))
    res = quantified_count(RECT, eps, Mode.CLOSED)
    assert res.is_finite and res.m == 3
    assert verify_count(RECT, eps, Mode.CLOSED, res)


def test_verify_rejects_tampering():
    eps = EpsSpec.circumradius(1)
    res = quantified_count(RECT, eps, Mode.CLOSED)
    short = CountResult("finite", m=3, certificate=res.certificate[:3])
    assert not verify_count(RECT, eps, Mode.CLOSED, short)
    wrong_len = CountResult("finite", m=4, certificate=[(t[0] * 2, t[1] * 2) for t in res.certificate])
    assert not verify_count(RECT, eps, Mode.CLOSED, wrong_len)
    bogus_inf = CountResult("infinite", witness=(F(1), F(1)))
    assert not verify_count(RECT, eps, Mode.CLOSED, bogus_inf)


def test_hexagon_at_R():
    K = regular_ngon(6)
    eps = EpsSpec.circumradius(1)
    res = quantified_count(K, eps, Mode.CLOSED)
    assert res.is_finite and res.m == 3
    assert verify_count(K, eps, Mode.CLOSED, res)


@pytest.mark.parametrize("eps", [F(1, 4), F(1, 2), F(1)])
def test_disc_closed(eps):
    res = disc_quantified(1, eps, Mode.CLOSED)
    assert res.is_finite and res.m == 3
    assert verify_disc(1, eps, Mode.CLOSED, res)


def test_disc_beyond_radius_and_open():
    assert disc_quantified(1, F(3, 2)).is_infinite
    assert disc_quantified(1, 1, Mode.OPEN).is_infinite
    res = disc_quantified(1, F(1, 2), Mode.OPEN)
    assert res.m == 3 and verify_disc(1, F(1, 2), Mode.OPEN, res)
    assert not verify_disc(1, 1, Mode.OPEN, disc_quantified(1, 1, Mode.CLOSED))


def test_negated_certificate_translations_cover():
    res = quantified_count(SQUARE, EpsSpec.rational(F(1, 2)), Mode.CLOSED)
    assert cover_residual(SQUARE, [neg(t) for t in res.certificate], Mode.CLOSED).covered
