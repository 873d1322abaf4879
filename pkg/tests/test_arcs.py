import itertools
import random
from fractions import Fraction as F

import pytest
from conftest import points_in, polygons
from hypothesis import given, settings
from hypothesis import strategies as st

from illumcover.arcs import (
    Arc,
    Dir,
    NotOnBoundary,
    arc_contains,
    ccw_strictly_between,
    circle_covered,
    compare_dirs,
    min_hitting,
    min_piercing,
    step_arc_family,
    tangent_cone_arc,
    vector_between,
)
from illumcover.geometry import Mode, add, contains, make_polygon, norm_sq
from illumcover.oracle import brute_min_piercing

E1, N1, W1, S1 = (F(1), F(0)), (F(0), F(1)), (F(-1), F(0)), (F(0), F(-1))
SQUARE = make_polygon([(F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))])

small = st.integers(min_value=-6, max_value=6)
rvec = st.tuples(small, small).filter(lambda v: v != (0, 0)).map(lambda v: (F(v[0]), F(v[1])))


def rational_circle(eps, s):
    """A point of length ``eps`` from the slope parameter ``s``."""
    d = 1 + s * s
    return (eps * (1 - s * s) / d, eps * 2 * s / d)


def test_arc_membership_and_ends():
    a = Arc.between(E1, N1)
    assert arc_contains(a, (F(1), F(1)))
    assert arc_contains(a, E1) and arc_contains(a, N1)
    assert not arc_contains(a, W1)
    b = Arc(Dir(E1), Dir(N1), False, False)
    assert not arc_contains(b, E1)
    assert arc_contains(Arc.point(E1), (F(5), F(0)))
    assert not arc_contains(Arc(Dir(E1), Dir(E1), False, False), (F(2), F(0)))
    assert arc_contains(Arc(Dir(E1), Dir(E1), False, False), W1)


@pytest.mark.parametrize("tiny", [F(1, 10**400), F(-1, 10**400)])
def test_nearly_horizontal_directions_order_exactly(tiny):
    # the float angle of these rounds onto the axis, possibly in the wrong half
    d = Dir((F(1), tiny))
    other = Dir((F(-1), -tiny))
    assert compare_dirs(d, other) == (-1 if tiny > 0 else 1)
    assert compare_dirs(Dir(S1), d) == (1 if tiny > 0 else -1)
    assert compare_dirs(Dir(N1), other) == -1
    assert arc_contains(Arc.between(S1, E1), d) == (tiny < 0)


def test_arc_width():
    assert Arc.between(E1, W1).width() == pytest.approx(3.141592653589793)
    assert Arc.between(W1, E1).width() == pytest.approx(3.141592653589793)
    assert Arc.full_circle().width() == pytest.approx(6.283185307179586)


def test_half_circles_cover_only_when_closed():
    assert circle_covered([Arc.between(E1, W1), Arc.between(W1, E1)]).covered
    open_pair = [Arc.between(E1, W1, closed=False), Arc.between(W1, E1, closed=False)]
    cov = circle_covered(open_pair)
    assert not cov.covered
    assert not any(arc_contains(a, cov.gap) for a in open_pair)


def test_empty_family_does_not_cover():
    assert not circle_covered([]).covered


def test_tangent_cones_of_square():
    cone = tangent_cone_arc(SQUARE, (F(0), F(0)))
    assert arc_contains(cone, E1) and arc_contains(cone, N1)
    assert not arc_contains(tangent_cone_arc(SQUARE, (F(0), F(0)), Mode.OPEN), E1)
    edge = tangent_cone_arc(SQUARE, (F(1, 2), F(0)))
    assert arc_contains(edge, W1) and not arc_contains(edge, S1)
    with pytest.raises(NotOnBoundary):
        tangent_cone_arc(SQUARE, (F(1, 2), F(1, 2)))


@settings(max_examples=80, deadline=None)
@given(rvec, rvec, st.one_of(st.none(), rvec))
def test_vector_between_is_strict(a, b, base):
    da, db = Dir(a), Dir(b)
    v = vector_between(da, db, base)
    assert ccw_strictly_between(da, Dir(v), db)
    if base is not None:
        assert norm_sq(v) == norm_sq(base)


def test_min_piercing_examples():
    quarter = [Arc.between(E1, N1), Arc.between(N1, W1), Arc.between(W1, S1), Arc.between(S1, E1)]
    assert min_piercing(quarter)[0] == 2
    opened = [Arc(a.start, a.end, False, False) for a in quarter]
    assert min_piercing(opened)[0] == 4
    assert min_piercing([Arc.full_circle()])[0] == 1


@settings(max_examples=120, deadline=None)
@given(st.lists(st.tuples(rvec, rvec, st.booleans()), min_size=1, max_size=7))
def test_min_piercing_matches_brute_force(specs):
    family = []
    for a, b, closed in specs:
        if Dir(a) == Dir(b) or (F(a[0]) * b[1] - a[1] * b[0] == 0 and a[0] * b[0] + a[1] * b[1] > 0):
            family.append(Arc.point(a))
        else:
            family.append(Arc.between(a, b, closed))
    m, dirs = min_piercing(family)
    assert m == brute_min_piercing(family)
    for arc in family:
        assert any(arc_contains(arc, d) for d in dirs)


def test_min_hitting_against_exhaustive_search():
    rng = random.Random(11)
    for _ in range(400):
        nc, ncell = rng.randint(1, 10), rng.randint(1, 12)
        cm = [rng.getrandbits(nc) & rng.getrandbits(nc) for _ in range(ncell)]
        goal = (1 << nc) - 1
        if not any(cm) or _or(cm) != goal:
            continue
        best = next(k for k in range(1, ncell + 1)
                    if any(_or(c) == goal for c in itertools.combinations(cm, k)))
        size, sols = min_hitting(cm, nc, max_solutions=4)
        assert size == best
        for sol in sols:
            assert len(sol) == size
            assert _or(cm[g[0]] for g in sol) == goal


def _or(ms):
    acc = 0
    for m in ms:
        acc |= m
    return acc


@settings(max_examples=60, deadline=None)
@given(polygons(), st.data(), st.sampled_from([F(1, 2), F(1), F(3, 2)]),
       st.sampled_from([Mode.CLOSED, Mode.OPEN]))
def test_step_arcs_match_membership(K, data, eps, mode):
    x = data.draw(points_in(K))
    fam = step_arc_family(K, x, eps * eps, mode)
    for _ in range(12):
        s = data.draw(st.fractions(min_value=-9, max_value=9, max_denominator=7))
        t = rational_circle(eps, s)
        assert contains(K, add(x, t), mode) == any(arc_contains(a, t) for a in fam)
