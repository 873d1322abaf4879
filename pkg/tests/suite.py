"""Deterministic polygon families shared by the tests."""

import math
import random
from fractions import Fraction as F

from illumcover.covering import finite_at_circumradius
from illumcover.geometry import make_polygon
from illumcover.shapes import regular_ngon


def circle_point(t, r=1):
    """Rational point on the circle of radius ``r`` from the slope parameter ``t``."""
    t = F(t)
    d = 1 + t * t
    return (r * (1 - t * t) / d, r * 2 * t / d)


def rect(w, h):
    w, h = F(w), F(h)
    return make_polygon([(F(0), F(0)), (w, F(0)), (w, h), (F(0), h)])


def symmetric_inscribed(params, r=1):
    """Centrally symmetric polygon with rational vertices on a circle."""
    pts = [circle_point(t, r) for t in params]
    return make_polygon(pts + [(-x, -y) for x, y in pts])


def min_separation(pts) -> float:
    """Smallest angle at the origin between consecutive points, in degrees."""
    angs = sorted(math.atan2(float(y), float(x)) for x, y in pts)
    gaps = [b - a for a, b in zip(angs, angs[1:])] + [angs[0] + 2 * math.pi - angs[-1]]
    return math.degrees(min(gaps))


def curated_suite():
    """30 polygons that are finite at the circumradius.

    The random inscribed ones keep consecutive vertices at least 25 degrees
    apart; near-triangles with clustered vertices sit next to the infinite
    regime and need very long refinement runs.
    """
    out = [(f"rect{w}x{h}", rect(w, h)) for w, h in [(2, 2), (4, 2), (3, 1), (5, 3), (7, 2), (3, 2)]]
    out += [(f"ngon{n}", regular_ngon(n)) for n in (4, 5, 6, 8)]
    sym = [
        (F(1, 3), F(2)), (F(1, 2), F(3)), (F(1, 5), F(3, 2)), (F(1, 4), F(2, 3), F(5)),
        (F(1, 7), F(1, 2), F(4)), (F(0), F(1, 2), F(2)), (F(1, 3), F(5, 4), F(7)),
        (F(2, 5), F(3)), (F(1, 6), F(1), F(3)), (F(1, 9), F(3, 4)),
    ]
    out += [(f"sym{i}", symmetric_inscribed(p, 1 + i % 3)) for i, p in enumerate(sym)]
    rng = random.Random(7)
    k = 0
    while len(out) < 30:
        ts = sorted({F(rng.randint(-40, 40), rng.randint(1, 12)) for _ in range(rng.randint(4, 6))})
        if len(ts) < 4:
            continue
        pts = [circle_point(t) for t in ts]
        if min_separation(pts) < 25:
            continue
        K = make_polygon(pts)
        if len(K.vertices) >= 4 and finite_at_circumradius(K).verdict:
            out.append((f"inscribed{k}", K))
            k += 1
    return out
