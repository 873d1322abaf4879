"""Exact planar primitives: convex polygons, containment, circumball, covers.

Points and vectors are plain ``(x, y)`` tuples whose coordinates are exact
scalars (``Fraction`` or :class:`~illumcover.field.FieldElement`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .field import Scalar, sgn

Point = tuple
Vec = tuple


class GeometryError(ValueError):
    pass


class DegenerateInput(GeometryError):
    """Point set whose hull has empty interior."""


class NotOnBoundary(GeometryError):
    pass


class InvalidInput(GeometryError):
    pass


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def _q(v) -> Scalar:
    return Fraction(v) if isinstance(v, (int, str)) else v


def pt(x, y) -> Point:
    return (_q(x), _q(y))


def add(a: Vec, b: Vec) -> Vec:
    return (a[0] + b[0], a[1] + b[1])


def sub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1])


def scale(a: Vec, k) -> Vec:
    return (a[0] * k, a[1] * k)


def neg(a: Vec) -> Vec:
    return (-a[0], -a[1])


def dot(a: Vec, b: Vec) -> Scalar:
    return a[0] * b[0] + a[1] * b[1]


def cross(a: Vec, b: Vec) -> Scalar:
    return a[0] * b[1] - a[1] * b[0]


def norm_sq(a: Vec) -> Scalar:
    return a[0] * a[0] + a[1] * a[1]


def rot90(a: Vec) -> Vec:
    return (-a[1], a[0])


def is_zero(a: Vec) -> bool:
    return sgn(a[0]) == 0 and sgn(a[1]) == 0


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    return Orientation(sgn(cross(sub(b, a), sub(c, a))))


class Mode(str, enum.Enum):
    """Closed (t-/closed variants) versus open (interior) semantics."""

    CLOSED = "closed"
    OPEN = "open"

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, Mode):
            return value
        v = str(value).lower()
        if v in ("interior", "open"):
            return cls.OPEN
        if v in ("closed",):
            return cls.CLOSED
        raise ValueError(f"unknown mode {value!r}")


@dataclass(frozen=True, eq=False)
class ConvexPolygon:
    """Strictly convex polygon, CCW, starting at the lowest-then-leftmost vertex.

    ``source`` optionally records how the polygon was built (used for
    serialization of regular polygons); it takes no part in equality.
    """

    vertices: tuple
    source: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        vs = self.vertices
        n = len(vs)
        if n < 3:
            raise DegenerateInput("polygon needs at least 3 vertices")
        normals, offsets = [], []
        for i in range(n):
            a, b = vs[i], vs[(i + 1) % n]
            if orientation(a, b, vs[(i + 2) % n]) != Orientation.CCW:
                raise DegenerateInput("vertices are not strictly convex in CCW order")
            nrm = rot90(sub(b, a))  # inner normal for CCW order
            normals.append(nrm)
            offsets.append(dot(nrm, a))
        object.__setattr__(self, "normals", tuple(normals))
        object.__setattr__(self, "offsets", tuple(offsets))

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def translate(self, t: Vec) -> "ConvexPolygon":
        return ConvexPolygon(tuple(add(v, t) for v in self.vertices))

    def halfplanes(self, t: Vec = None):
        """``(n, c)`` pairs with ``K + t = {p : n.p >= c}``."""
        if t is None:
            return list(zip(self.normals, self.offsets))
        return [(n, c + dot(n, t)) for n, c in zip(self.normals, self.offsets)]

    def vertex_index(self, p: Point) -> Optional[int]:
        for i, v in enumerate(self.vertices):
            if v == p:
                return i
        return None

    def area2(self) -> Scalar:
        return polygon_area2(self.vertices)

    def float_vertices(self):
        return [(float(x), float(y)) for x, y in self.vertices]


def polygon_area2(vs: Sequence[Point]) -> Scalar:
    total = 0
    for i in range(len(vs)):
        total = total + cross(vs[i], vs[(i + 1) % len(vs)])
    return total


def _canonical_start(vs: list) -> list:
    k = min(range(len(vs)), key=lambda i: (vs[i][1], vs[i][0]))
    return vs[k:] + vs[:k]


def make_polygon(points: Iterable[Point], source: Optional[tuple] = None) -> ConvexPolygon:
    """Convex hull of ``points`` in canonical CCW order (collinear points dropped)."""
    pts = sorted(set((_q(p[0]), _q(p[1])) for p in points))
    if len(pts) < 3:
        raise DegenerateInput("need at least 3 distinct points")

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) != Orientation.CCW:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("points are collinear")
    return ConvexPolygon(tuple(_canonical_start(hull)), source=source)


def contains(K: ConvexPolygon, p: Point, mode="closed") -> bool:
    strict = Mode.parse(mode) is Mode.OPEN
    for n, c in zip(K.normals, K.offsets):
        s = sgn(dot(n, p) - c)
        if s < 0 or (strict and s == 0):
            return False
    return True


def in_halfplanes(hps, p: Point, strict: bool = False) -> bool:
    for n, c in hps:
        s = sgn(dot(n, p) - c)
        if s < 0 or (strict and s == 0):
            return False
    return True


def on_boundary(K: ConvexPolygon, p: Point) -> bool:
    return contains(K, p, Mode.CLOSED) and not contains(K, p, Mode.OPEN)


# ---------------------------------------------------------------- circumball


@dataclass(frozen=True)
class CircleSq:
    """Circle stored with its squared radius (the radius itself may be irrational)."""

    center: Point
    radius_sq: Scalar

    def contains(self, p: Point) -> bool:
        return norm_sq(sub(p, self.center)) <= self.radius_sq

    def on_boundary(self, p: Point) -> bool:
        return norm_sq(sub(p, self.center)) == self.radius_sq


def _circle_two(a: Point, b: Point) -> CircleSq:
    c = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
    return CircleSq(c, norm_sq(sub(a, c)))


def _circle_three(a: Point, b: Point, c: Point) -> Optional[CircleSq]:
    bx, by = sub(b, a)
    cx, cy = sub(c, a)
    d = 2 * (bx * cy - by * cx)
    if sgn(d) == 0:
        return None
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = (a[0] + ux, a[1] + uy)
    return CircleSq(center, ux * ux + uy * uy)


def minimal_enclosing_circle(points: Sequence[Point]) -> CircleSq:
    """Exact minimal enclosing circle (incremental, deterministic order)."""
    pts = list(points)
    if not pts:
        raise InvalidInput("no points")
    circ = CircleSq(pts[0], 0 * pts[0][0])
    for i, p in enumerate(pts):
        if circ.contains(p):
            continue
        circ = CircleSq(p, 0 * p[0])
        for j in range(i):
            q = pts[j]
            if circ.contains(q):
                continue
            circ = _circle_two(p, q)
            for k in range(j):
                r = pts[k]
                if circ.contains(r):
                    continue
                c3 = _circle_three(p, q, r)
                if c3 is not None:
                    circ = c3
    return circ


def circumball(K: ConvexPolygon) -> CircleSq:
    """The circumball ``B(c_K, R(K))`` with exact center and squared radius."""
    return minimal_enclosing_circle(K.vertices)


def contact_set(K: ConvexPolygon, B: Optional[CircleSq] = None) -> list:
    """Vertices of ``K`` on the boundary of the circumball, in CCW order."""
    B = B or circumball(K)
    return [v for v in K.vertices if B.on_boundary(v)]


# ---------------------------------------------------------------- clipping


def clip_halfplane(poly: Sequence[Point], n: Vec, c: Scalar) -> list:
    """Sutherland-Hodgman clip of a convex polygon to ``{p : n.p >= c}``."""
    out = []
    m = len(poly)
    if m == 0:
        return out
    vals = [dot(n, p) - c for p in poly]
    for i in range(m):
        p, q = poly[i], poly[(i + 1) % m]
        sp, sq = sgn(vals[i]), sgn(vals[(i + 1) % m])
        if sp >= 0:
            out.append(p)
        if sp * sq < 0:
            t = vals[i] / (vals[i] - vals[(i + 1) % m])
            out.append((p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t))
    return out


def _dedupe(poly: list) -> list:
    out = []
    for p in poly:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def subtract_convex(piece: list, hps) -> list:
    """Closure of ``piece`` minus the convex set ``hps``: positive-area convex pieces."""
    pieces = []
    rest = piece
    for n, c in hps:
        outside = _dedupe(clip_halfplane(rest, neg(n), -c))
        if len(outside) >= 3 and sgn(polygon_area2(outside)) != 0:
            pieces.append(outside)
        rest = _dedupe(clip_halfplane(rest, n, c))
        if len(rest) < 3 or sgn(polygon_area2(rest)) == 0:
            break
    return pieces


def vertex_centroid(poly: Sequence[Point]) -> Point:
    k = len(poly)
    sx = sum((p[0] for p in poly[1:]), poly[0][0])
    sy = sum((p[1] for p in poly[1:]), poly[0][1])
    return (sx / k, sy / k)


@dataclass(frozen=True)
class CoverVerdict:
    covered: bool
    witness: Optional[Point] = None
    zero_translation: bool = False


def closed_residual(K: ConvexPolygon, translations: Sequence[Vec]) -> list:
    """Positive-area convex pieces of ``K`` outside every closed ``K + t``."""
    pieces = [list(K.vertices)]
    for t in translations:
        hps = K.halfplanes(t)
        nxt = []
        for pc in pieces:
            nxt.extend(subtract_convex(pc, hps))
        pieces = nxt
        if not pieces:
            break
    return pieces


def _segment_interval(a: Point, d: Vec, hps, s0, s1):
    """Parameter range ``[lo, hi]`` of ``a + s d`` (``s0 <= s <= s1``) inside ``hps``."""
    lo, hi = s0, s1
    for n, c in hps:
        nd = dot(n, d)
        val = dot(n, a) - c
        if sgn(nd) == 0:
            if sgn(val) < 0:
                return None
            continue
        s = -val / nd
        if sgn(nd) > 0:
            if s > lo:
                lo = s
        elif s < hi:
            hi = s
        if lo > hi:
            return None
    return lo, hi


def open_boundary_witness(K: ConvexPolygon, translations: Sequence[Vec]) -> Optional[Point]:
    """A point of ``K`` on some translate boundary but in no open translate, if any."""
    khps = K.halfplanes()
    thps = [K.halfplanes(t) for t in translations]
    for j, t in enumerate(translations):
        for a, b in K.translate(t).edges():
            d = sub(b, a)
            span = _segment_interval(a, d, khps, Fraction(0), Fraction(1))
            if span is None:
                continue
            s0, s1 = span
            params = {s0, s1}
            for i, hps in enumerate(thps):
                if i == j:
                    continue
                iv = _segment_interval(a, d, hps, s0, s1)
                if iv is not None:
                    params.update(iv)
            params = sorted(params)
            probes = list(params) + [(params[k] + params[k + 1]) / 2 for k in range(len(params) - 1)]
            for s in probes:
                p = (a[0] + d[0] * s, a[1] + d[1] * s)
                if not any(in_halfplanes(h, p, strict=True) for i, h in enumerate(thps) if i != j):
                    return p
    return None


def cover_residual(K: ConvexPolygon, translations: Sequence[Vec], mode="closed") -> CoverVerdict:
    """Decide ``K ⊆ ∪ (K + t_i)`` (closed) or ``K ⊆ ∪ (int K + t_i)`` (open)."""
    mode = Mode.parse(mode)
    translations = list(translations)
    zero = any(is_zero(t) for t in translations)
    if not translations:
        return CoverVerdict(False, vertex_centroid(K.vertices), zero)
    pieces = closed_residual(K, translations)
    if pieces:
        return CoverVerdict(False, vertex_centroid(pieces[0]), zero)
    if mode is Mode.CLOSED:
        return CoverVerdict(True, None, zero)
    w = open_boundary_witness(K, translations)
    return CoverVerdict(w is None, w, zero)


def residual_witnesses(K: ConvexPolygon, translations: Sequence[Vec], mode="closed", limit: int = 8) -> list:
    """Several uncovered points (one per residual piece), for refinement loops."""
    pieces = closed_residual(K, translations)
    out = [vertex_centroid(pc) for pc in pieces[:limit]]
    if not out and Mode.parse(mode) is Mode.OPEN:
        w = open_boundary_witness(K, translations)
        if w is not None:
            out.append(w)
    return out
