"""Pointwise illumination predicates and set-level deciders for polygons.

Set-level questions reduce to vertex cones: the cone at a vertex is contained
in the half-plane cones of both adjacent edges, so a direction set piercing
every vertex cone also serves every edge point, and interior points are lit
by any direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arcs import Dir, arc_contains, tangent_cone_arc, vertex_cone_arcs
from .field import sgn
from .geometry import (
    ConvexPolygon,
    InvalidInput,
    Mode,
    add,
    contains,
    dot,
    is_zero,
    scale,
    sub,
)


@dataclass(frozen=True)
class IlluminationSystem:
    """Either light directions ``l_i`` or light sources ``y_i``."""

    kind: str
    items: tuple

    def __post_init__(self):
        if self.kind not in ("directions", "points"):
            raise InvalidInput(f"unknown system kind {self.kind!r}")
        if not self.items:
            raise InvalidInput("empty illumination system")
        if self.kind == "directions" and any(is_zero(d) for d in self.items):
            raise InvalidInput("zero direction in system")

    @classmethod
    def directions(cls, dirs) -> "IlluminationSystem":
        return cls("directions", tuple(tuple(d) for d in dirs))

    @classmethod
    def points(cls, pts) -> "IlluminationSystem":
        return cls("points", tuple(tuple(p) for p in pts))


def _check_direction_input(l, x, K):
    if is_zero(l):
        raise InvalidInput("direction must be nonzero")
    if not contains(K, x, Mode.CLOSED):
        raise InvalidInput(f"{x} is not in K")


def illuminates(l, x, K: ConvexPolygon) -> bool:
    """``x + e l`` lies in ``int K`` for some ``e > 0``."""
    _check_direction_input(l, x, K)
    if contains(K, x, Mode.OPEN):
        return True
    return arc_contains(tangent_cone_arc(K, x, Mode.OPEN), l)


def t_illuminates(l, x, K: ConvexPolygon) -> bool:
    """``x + e l`` lies in ``K`` for some ``e > 0``."""
    _check_direction_input(l, x, K)
    if contains(K, x, Mode.OPEN):
        return True
    return arc_contains(tangent_cone_arc(K, x, Mode.CLOSED), l)


def _check_source(y, K):
    if contains(K, y, Mode.CLOSED):
        raise InvalidInput(f"light source {y} lies in K")


def c_illuminates(y, x, K: ConvexPolygon) -> bool:
    _check_source(y, K)
    return illuminates(sub(x, y), x, K)


def tc_illuminates(y, x, K: ConvexPolygon) -> bool:
    _check_source(y, K)
    return t_illuminates(sub(x, y), x, K)


def eps_illuminates(t, x, K: ConvexPolygon, mode="closed") -> bool:
    """The step ``t`` (a vector of the chosen length) takes ``x`` into ``K`` / ``int K``."""
    _check_direction_input(t, x, K)
    return contains(K, add(x, t), mode)


def system_illuminates_all(S: IlluminationSystem, K: ConvexPolygon, mode="closed") -> bool:
    if S.kind != "directions":
        raise InvalidInput("expected a direction system")
    dirs = [Dir(tuple(d)) for d in S.items]
    return all(any(arc_contains(a, d) for d in dirs) for a in vertex_cone_arcs(K, mode))


def point_system_covers(S: IlluminationSystem, K: ConvexPolygon, mode="C") -> bool:
    """Every point of ``K`` is c-illuminated (``mode="C"``) or t-c-illuminated
    (``mode="TC"``) by one of the sources.

    With inner normals ``n_E`` and offsets ``c_E`` (``K = {n_E . p >= c_E}``),
    an edge point is served by ``y`` iff ``n_E . y <= c_E`` (strict for C);
    a vertex needs one source satisfying both adjacent edge conditions.
    """
    if S.kind != "points":
        raise InvalidInput("expected a point system")
    for y in S.items:
        _check_source(y, K)
    strict = str(mode).upper() == "C"
    if str(mode).upper() not in ("C", "TC"):
        raise InvalidInput(f"unknown mode {mode!r}")

    def ok(y, j):
        s = sgn(dot(K.normals[j], y) - K.offsets[j])
        return s < 0 if strict else s <= 0

    n = len(K)
    for j in range(n):
        if not any(ok(y, j) for y in S.items):
            return False
        if not any(ok(y, j) and ok(y, j - 1) for y in S.items):
            return False
    return True


def transform_tc_to_c(Y: Sequence, lambdas: Sequence, centers: Sequence, K: ConvexPolygon) -> list:
    """Push each source away from an interior point: ``c_i + lambda_i (y_i - c_i)``."""
    if not (len(Y) == len(lambdas) == len(centers)):
        raise InvalidInput("Y, lambdas and centers must have equal length")
    out = []
    for y, lam, c in zip(Y, lambdas, centers):
        if not lam > 1:
            raise InvalidInput(f"lambda must exceed 1, got {lam}")
        if not contains(K, c, Mode.OPEN):
            raise InvalidInput(f"center {c} is not interior")
        out.append(add(c, scale(sub(y, c), Fraction(lam) if isinstance(lam, (int, str)) else lam)))
    return out
