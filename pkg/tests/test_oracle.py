import math
from fractions import Fraction as F

import pytest
from conftest import polygons
from hypothesis import given, settings
from hypothesis import strategies as st

from illumcover.arcs import Arc
from illumcover.covering import EpsSpec, quantified_count
from illumcover.geometry import Mode, contains, cover_residual, make_polygon, sub
from illumcover.oracle import (
    Counterexample,
    Exceeded,
    NoCounterexample,
    SampleConfig,
    brute_min_piercing,
    sample_cover_check,
    sample_quantified_lower,
)
from illumcover.shapes import regular_ngon

SQUARE = make_polygon([(F(-1), F(-1)), (F(1), F(-1)), (F(1), F(1)), (F(-1), F(1))])
SMALL = SampleConfig(grid_resolution=48, mc_samples=2000)


def test_default_config():
    cfg = SampleConfig()
    assert (cfg.grid_resolution, cfg.mc_samples) == (256, 100_000)
    with pytest.raises(ValueError):
        SampleConfig(grid_resolution=0)


def test_square_cover_and_counterexample():
    ts = [(F(1), F(1)), (F(-1), F(1)), (F(1), F(-1)), (F(-1), F(-1))]
    assert sample_cover_check(SQUARE, ts, Mode.CLOSED, SMALL) is NoCounterexample
    res = sample_cover_check(SQUARE, [(F(1, 2), F(0))], Mode.CLOSED, SMALL)
    assert isinstance(res, Counterexample)
    assert res.point == (F(-1), F(-1))


def test_open_cover_boundary_counterexample():
    ts = [(F(1), F(1)), (F(-1), F(1)), (F(1), F(-1)), (F(-1), F(-1))]
    res = sample_cover_check(SQUARE, ts, Mode.OPEN, SMALL)
    assert isinstance(res, Counterexample)
    assert not any(contains(SQUARE, sub(res.point, t), Mode.OPEN) for t in ts)


def test_brute_piercing_examples():
    E, N, W, S = (1, 0), (0, 1), (-1, 0), (0, -1)
    quarters = [Arc.between(E, N), Arc.between(N, W), Arc.between(W, S), Arc.between(S, E)]
    assert brute_min_piercing(quarters) == 2
    assert brute_min_piercing([Arc(a.start, a.end, False, False) for a in quarters]) == 4
    assert brute_min_piercing([Arc.full_circle()]) == 1
    assert brute_min_piercing([]) == 0
    five_points = [Arc.point((F(1), F(k))) for k in range(5)]
    assert isinstance(brute_min_piercing(five_points, m_max=3), Exceeded)


def test_quantified_lower_bounds():
    rect = make_polygon([(F(0), F(0)), (F(4), F(0)), (F(4), F(2)), (F(0), F(2))])
    assert sample_quantified_lower(rect, EpsSpec.circumradius(1), Mode.CLOSED) == 4
    assert sample_quantified_lower(regular_ngon(6), EpsSpec.circumradius(1), Mode.CLOSED) == 3
    assert sample_quantified_lower(rect, EpsSpec.circumradius(F(101, 100))) == math.inf


@settings(max_examples=25, deadline=None)
@given(polygons(), st.lists(st.tuples(st.fractions(-2, 2, max_denominator=4),
                                      st.fractions(-2, 2, max_denominator=4)), min_size=1, max_size=4))
def test_oracle_never_refutes_exact_cover(K, ts):
    exact = cover_residual(K, ts, Mode.CLOSED)
    sampled = sample_cover_check(K, ts, Mode.CLOSED, SMALL)
    if exact.covered:
        assert sampled is NoCounterexample
    if sampled:
        assert not exact.covered


@settings(max_examples=10, deadline=None)
@given(polygons(max_points=5), st.sampled_from([F(1, 4), F(1, 2)]))
def test_sampled_lower_bound_below_certificate(K, f):
    eps = EpsSpec.circumradius(f)
    res = quantified_count(K, eps, Mode.CLOSED)
    assert res.is_finite
    assert sample_quantified_lower(K, eps, Mode.CLOSED, n_random=8) <= res.m
