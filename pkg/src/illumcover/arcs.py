"""Exact calculus of direction arcs on the unit circle.

A :class:`Dir` is a nonzero planar vector ``P + sqrt(D) * Q`` with ``P, Q``
over the coordinate field and ``D >= 0``; rational directions have ``D = 0``.
Directions are ordered by angle in ``[0, 2 pi)``.  Floats order directions
that are clearly apart; anything closer than ``_FLOAT_GAP`` is decided by
exact sign algebra on nested square roots.

Families of arcs are reduced to *cells*: the sorted distinct endpoints cut the
circle into point cells and open interval cells, and every arc is a union of
consecutive cells.  Piercing and coverage questions become questions about
integer ranges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence

import mpmath

from .field import mpf_to_fraction, sgn, sign_biquadratic, sign_surd, simplest_between, to_mpf
from .geometry import (
    ConvexPolygon,
    Mode,
    NotOnBoundary,
    add,
    contains,
    cross,
    dot,
    neg,
    norm_sq,
    rot90,
    sub,
)

_FLOAT_GAP = 1e-9
TWO_PI = 2 * math.pi


class EmptyArc(ValueError):
    pass


class Dir:
    """Direction ``P + sqrt(D) Q``; ``exact`` optionally carries a field vector
    with this direction (used to realize algebraic endpoints that happen to be
    field-rational)."""

    __slots__ = ("P", "Q", "D", "exact", "_angle", "_upper")

    def __init__(self, P, Q=None, D=0, exact=None):
        self.P = P
        self.Q = Q if Q is not None else (0 * P[0], 0 * P[0])
        self.D = D
        if sgn(D) == 0 or (sgn(self.Q[0]) == 0 and sgn(self.Q[1]) == 0):
            self.D = 0 * P[0] if not isinstance(D, int) else 0
            self.Q = (0 * P[0], 0 * P[0])
        self.exact = exact if exact is not None else (P if self.is_rational() else None)
        self._angle = None
        self._upper = None
        if self.sign_x() == 0 and self.sign_y() == 0:
            raise ValueError("zero direction")

    @classmethod
    def of(cls, v) -> "Dir":
        return v if isinstance(v, Dir) else cls(tuple(v))

    def is_rational(self) -> bool:
        return sgn(self.D) == 0

    def sign_x(self) -> int:
        return sign_surd(self.P[0], self.Q[0], self.D)

    def sign_y(self) -> int:
        return sign_surd(self.P[1], self.Q[1], self.D)

    def upper(self) -> bool:
        """Angle in ``[0, pi)``."""
        if self._upper is None:
            sy = self.sign_y()
            self._upper = sy > 0 or (sy == 0 and self.sign_x() > 0)
        return self._upper

    def floats(self) -> tuple:
        r = math.sqrt(float(self.D)) if not self.is_rational() else 0.0
        return (float(self.P[0]) + r * float(self.Q[0]), float(self.P[1]) + r * float(self.Q[1]))

    def angle(self) -> float:
        if self._angle is None:
            x, y = self.floats()
            a = math.atan2(y, x) % TWO_PI
            # rounding can put a nearly horizontal direction in the wrong
            # half; snap to the nearer end of the exact half
            if self.upper():
                if a > math.pi:
                    a = 0.0 if a > 1.5 * math.pi else math.pi
            elif a < math.pi:
                a = TWO_PI if a < 0.5 * math.pi else math.pi
            self._angle = a
        return self._angle

    def __neg__(self):
        ex = neg(self.exact) if self.exact is not None else None
        return Dir(neg(self.P), neg(self.Q), self.D, ex)

    def __repr__(self):
        if self.is_rational():
            return f"Dir({self.P[0]}, {self.P[1]})"
        return f"Dir(~{self.angle():.6f} rad)"


def cross_sign(a: Dir, b: Dir) -> int:
    return sign_biquadratic(
        cross(a.P, b.P), cross(a.Q, b.P), cross(a.P, b.Q), cross(a.Q, b.Q), a.D, b.D
    )


def dot_sign(a: Dir, b: Dir) -> int:
    return sign_biquadratic(dot(a.P, b.P), dot(a.Q, b.P), dot(a.P, b.Q), dot(a.Q, b.Q), a.D, b.D)


def same_direction(a: Dir, b: Dir) -> bool:
    return cross_sign(a, b) == 0 and dot_sign(a, b) > 0


def compare_dirs(a: Dir, b: Dir) -> int:
    """Exact angular comparison in ``[0, 2 pi)``; 0 iff same direction."""
    if a is b:
        return 0
    ua, ub = a.upper(), b.upper()
    if ua != ub:
        return -1 if ua else 1
    da = a.angle() - b.angle()
    if abs(da) > _FLOAT_GAP:
        return -1 if da < 0 else 1
    # same half-plane: a before b iff cross(a, b) > 0
    return -cross_sign(a, b)


dir_key = cmp_to_key(compare_dirs)


def ccw_strictly_between(a: Dir, t: Dir, b: Dir) -> bool:
    """``t`` lies on the open CCW sweep from ``a`` to ``b`` (full turn if ``a == b``)."""
    ab, at, tb = compare_dirs(a, b), compare_dirs(a, t), compare_dirs(t, b)
    if at == 0 or tb == 0:
        return False
    if ab < 0:
        return at < 0 and tb < 0
    return at < 0 or tb < 0 or ab == 0


def _rotate_rational(w, s: Fraction):
    den = 1 + s * s
    c, si = (1 - s * s) / den, 2 * s / den
    return (w[0] * c - w[1] * si, w[0] * si + w[1] * c)


def vector_between(a: Dir, b: Dir, base=None, shrink: float = 1 / 3):
    """Field vector strictly inside the CCW sweep from ``a`` to ``b``.

    With ``base`` given, the result is a rational rotation of ``base`` (so it
    keeps the exact length of ``base``); the angle lands in the middle part of
    the sweep whenever floats allow.
    """
    lo = a.angle()
    hi = b.angle()
    if compare_dirs(a, b) >= 0:
        hi += TWO_PI
    if base is None:
        if a.is_rational() and b.is_rational():
            if compare_dirs(a, b) == 0:
                return neg(a.P)
            c = sgn(cross(a.P, b.P))
            if c > 0:
                return add(a.P, b.P)
            if c == 0:
                return rot90(a.P)
            return neg(add(a.P, b.P))
        base = (Fraction(1), Fraction(0))
    bd = Dir(base)
    width = hi - lo
    for frac in (shrink, shrink / 4, shrink / 32, 1e-4, 1e-7):
        mid = lo + width / 2
        half = width * (0.5 - frac)
        tlo, thi = mid - half, mid + half
        for bvec, bang in ((base, bd.angle()), (neg(base), (-bd).angle())):
            plo, phi = tlo - bang, thi - bang
            # bring the sweep into (-pi, pi)
            k = math.floor((plo + math.pi) / TWO_PI)
            plo -= k * TWO_PI
            phi -= k * TWO_PI
            if phi >= math.pi - 1e-12 or plo <= -math.pi + 1e-12:
                continue
            slo, shi = Fraction(math.tan(plo / 2)), Fraction(math.tan(phi / 2))
            if not slo < shi:
                continue
            s = simplest_between(slo, shi)
            v = _rotate_rational(bvec, s)
            if ccw_strictly_between(a, Dir(v), b):
                return v
    return _vector_between_mp(a, b, base)


def _mp_angle(d: Dir):
    r = mpmath.sqrt(to_mpf(d.D)) if not d.is_rational() else 0
    x = to_mpf(d.P[0]) + r * to_mpf(d.Q[0])
    y = to_mpf(d.P[1]) + r * to_mpf(d.Q[1])
    return mpmath.atan2(y, x) % (2 * mpmath.pi)


def _vector_between_mp(a: Dir, b: Dir, base):
    """Same as the float search, for sweeps narrower than double precision."""
    for prec in (128, 256, 512, 1024, 2048, 4096):
        with mpmath.workprec(prec):
            pi = mpmath.pi
            lo, hi = _mp_angle(a), _mp_angle(b)
            if hi <= lo:
                hi += 2 * pi
            mid, half = (lo + hi) / 2, (hi - lo) / 4
            for bvec in (base, neg(base)):
                bang = _mp_angle(Dir(bvec))
                plo, phi = mid - half - bang, mid + half - bang
                k = mpmath.floor((plo + pi) / (2 * pi))
                plo, phi = plo - k * 2 * pi, phi - k * 2 * pi
                if phi >= pi or plo <= -pi:
                    continue
                slo = mpf_to_fraction(mpmath.tan(plo / 2))
                shi = mpf_to_fraction(mpmath.tan(phi / 2))
                if not slo < shi:
                    continue
                v = _rotate_rational(bvec, simplest_between(slo, shi))
                if ccw_strictly_between(a, Dir(v), b):
                    return v
    raise ArithmeticError("could not separate directions with a rational rotation")


@dataclass(frozen=True)
class Arc:
    """CCW arc from ``start`` to ``end``.

    ``start == end`` means a single direction when both ends are closed, and
    the full circle minus that direction when both are open.  ``full`` is the
    whole circle.
    """

    start: Optional[Dir] = None
    end: Optional[Dir] = None
    start_closed: bool = True
    end_closed: bool = True
    full: bool = False

    @classmethod
    def full_circle(cls) -> "Arc":
        return cls(full=True)

    @classmethod
    def point(cls, d) -> "Arc":
        d = Dir.of(d)
        return cls(d, d, True, True)

    @classmethod
    def between(cls, a, b, closed: bool = True) -> "Arc":
        return cls(Dir.of(a), Dir.of(b), closed, closed)

    def is_point(self) -> bool:
        return not self.full and compare_dirs(self.start, self.end) == 0 and self.start_closed

    def is_punctured(self) -> bool:
        return not self.full and compare_dirs(self.start, self.end) == 0 and not self.start_closed

    def width(self) -> float:
        if self.full:
            return TWO_PI
        w = self.end.angle() - self.start.angle()
        c = compare_dirs(self.start, self.end)
        if c == 0:
            return 0.0 if self.start_closed else TWO_PI
        if c > 0:
            w += TWO_PI
        return w


def arc_contains(arc: Arc, d) -> bool:
    d = Dir.of(d)
    if arc.full:
        return True
    if compare_dirs(arc.start, arc.end) == 0:
        same = compare_dirs(arc.start, d) == 0
        return same if arc.start_closed else not same
    if compare_dirs(arc.start, d) == 0:
        return arc.start_closed
    if compare_dirs(arc.end, d) == 0:
        return arc.end_closed
    return ccw_strictly_between(arc.start, d, arc.end)


# ---------------------------------------------------------------- cells


class CellDecomposition:
    """Sorted distinct directions; cell ``2k`` is direction ``k``, cell ``2k+1``
    the open sweep from direction ``k`` to ``k+1`` (cyclically)."""

    def __init__(self, dirs: Sequence[Dir]):
        order = sorted(range(len(dirs)), key=lambda i: dir_key(dirs[i]))
        uniq: list[Dir] = []
        self.index_of: dict[int, int] = {}
        for i in order:
            d = dirs[i]
            if uniq and compare_dirs(uniq[-1], d) == 0:
                if uniq[-1].exact is None and d.exact is not None:
                    uniq[-1] = d
            else:
                uniq.append(d)
            self.index_of[id(d)] = len(uniq) - 1
        self.dirs = uniq
        self.n = len(uniq)

    @property
    def ncells(self) -> int:
        return max(1, 2 * self.n)

    def full_mask(self) -> int:
        return (1 << self.ncells) - 1

    def locate(self, d: Dir) -> int:
        if id(d) in self.index_of:
            return self.index_of[id(d)]
        for k, u in enumerate(self.dirs):
            if compare_dirs(u, d) == 0:
                return k
        raise KeyError("direction not part of the decomposition")

    def range_mask(self, i: int, j: int, closed_i: bool, closed_j: bool) -> int:
        """Cells on the CCW sweep from direction ``i`` to direction ``j``."""
        full = self.full_mask()
        if i == j:
            if closed_i:
                return 1 << (2 * i)
            return full & ~(1 << (2 * i))
        lo, hi = 2 * i, 2 * j
        if lo < hi:
            mask = ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)
        else:
            mask = full ^ (((1 << lo) - 1) ^ ((1 << (hi + 1)) - 1))
        if not closed_i:
            mask &= ~(1 << lo)
        if not closed_j:
            mask &= ~(1 << hi)
        return mask

    def arc_mask(self, arc: Arc) -> int:
        if arc.full:
            return self.full_mask()
        i, j = self.locate(arc.start), self.locate(arc.end)
        if i == j and arc.start_closed != arc.end_closed:
            raise ValueError("arc with one open and one closed coincident endpoint")
        return self.range_mask(i, j, arc.start_closed, arc.end_closed)

    def cell_direction(self, cell: int, base=None):
        """A representative: ``Dir`` for point cells, a field vector for intervals."""
        if self.n == 0:
            return base if base is not None else (Fraction(1), Fraction(0))
        k = cell // 2
        if cell % 2 == 0:
            return self.dirs[k]
        return vector_between(self.dirs[k], self.dirs[(k + 1) % self.n], base)

    def cells_to_arcs(self, mask: int) -> list:
        """Maximal arcs made of the cells in ``mask``."""
        if mask == 0:
            return []
        if mask == self.full_mask():
            return [Arc.full_circle()]
        C = self.ncells
        # start from a cell not in the mask so runs do not wrap
        first_out = next(c for c in range(C) if not (mask >> c) & 1)
        arcs = []
        run = []
        for off in range(1, C + 1):
            c = (first_out + off) % C
            if (mask >> c) & 1:
                run.append(c)
            elif run:
                arcs.append(self._run_to_arc(run))
                run = []
        if run:
            arcs.append(self._run_to_arc(run))
        return arcs

    def _run_to_arc(self, run: list) -> Arc:
        N = self.n
        a, b = run[0], run[-1]
        if len(run) == 1 and a % 2 == 0:
            return Arc.point(self.dirs[a // 2])
        if a % 2 == 0:
            start, sc = self.dirs[a // 2], True
        else:
            start, sc = self.dirs[a // 2], False
        if b % 2 == 0:
            end, ec = self.dirs[b // 2], True
        else:
            end, ec = self.dirs[(b // 2 + 1) % N], False
        if compare_dirs(start, end) == 0 and sc != ec:
            # full circle minus one point, reached from one side
            return Arc(start, end, False, False)
        return Arc(start, end, sc, ec)


def decompose(arcs: Sequence[Arc], extra: Sequence[Dir] = ()) -> CellDecomposition:
    dirs = []
    for a in arcs:
        if not a.full:
            dirs.append(a.start)
            dirs.append(a.end)
    dirs.extend(extra)
    return CellDecomposition(dirs)


# ---------------------------------------------------------------- coverage


@dataclass(frozen=True)
class CircleCoverage:
    covered: bool
    gap: Optional[Dir] = None


def circle_covered(family: Sequence[Arc]) -> CircleCoverage:
    """Does the union of ``family`` contain every direction?"""
    if not family:
        return CircleCoverage(False, Dir((Fraction(1), Fraction(0))))
    cells = decompose(family)
    mask = 0
    for a in family:
        mask |= cells.arc_mask(a)
    full = cells.full_mask()
    if mask == full:
        return CircleCoverage(True)
    missing = next(c for c in range(cells.ncells) if not (mask >> c) & 1)
    rep = cells.cell_direction(missing)
    return CircleCoverage(False, rep if isinstance(rep, Dir) else Dir(rep))


# ---------------------------------------------------------------- piercing


def _greedy_line(intervals: list) -> list:
    """Minimum stabbing of closed integer intervals ``(lo, hi)``; returns points."""
    pts = []
    last = None
    for lo, hi in sorted(intervals, key=lambda iv: iv[1]):
        if last is not None and lo <= last:
            continue
        last = hi
        pts.append(hi)
    return pts


def _arc_cell_range(cells: CellDecomposition, mask: int):
    """``(first, last)`` cells of a contiguous cyclic run (first may exceed last)."""
    C = cells.ncells
    if mask == cells.full_mask():
        return None
    start = next(c for c in range(C) if (mask >> c) & 1 and not (mask >> ((c - 1) % C)) & 1)
    end = start
    while (mask >> ((end + 1) % C)) & 1:
        end = (end + 1) % C
    return start, end


def min_piercing(family: Sequence[Arc], base=None) -> tuple[int, list]:
    """Fewest directions meeting every arc of ``family``.

    Greedy circular scan: some optimal solution has a point at the last cell
    of some arc, so each arc end is tried as the cut and the rest is the
    classical interval-stabbing greedy.  Returns ``(count, directions)`` where
    directions are ``Dir`` (point cells) or field vectors (interval cells).
    """
    if not family:
        return 0, []
    cells = decompose(family)
    masks = []
    for a in family:
        m = cells.arc_mask(a)
        if m == 0:
            raise EmptyArc("empty arc in family")
        masks.append(m)
    C = cells.ncells
    ranges = [_arc_cell_range(cells, m) for m in masks]
    bounded = [r for r in ranges if r is not None]
    if not bounded:
        return 1, [cells.cell_direction(0, base)]
    best = None
    for _, cut in bounded:
        chosen = [cut]
        intervals = []
        for m, r in zip(masks, ranges):
            if r is None or (m >> cut) & 1:
                continue
            lo, hi = r
            lo_u, hi_u = (lo - cut - 1) % C, (hi - cut - 1) % C
            intervals.append((lo_u, hi_u))
        chosen += [(p + cut + 1) % C for p in _greedy_line(intervals)]
        if best is None or len(chosen) < len(best):
            best = chosen
    return len(best), [cells.cell_direction(c, base) for c in best]


def min_hitting(cell_masks: Sequence[int], n_constraints: int, max_solutions: int = 1,
                max_size: int = 64, min_size: int = 1) -> tuple[int, list]:
    """Exact minimum hitting set where cell ``i`` satisfies constraints ``cell_masks[i]``.

    Returns ``(size, solutions)``; each solution is a list of cell indices.
    Dominated cells are dropped first; the search branches on the constraint
    with the fewest options.
    """
    goal = (1 << n_constraints) - 1
    if goal == 0:
        return 0, [[]]
    groups: dict[int, list] = {}
    for i, m in enumerate(cell_masks):
        if m:
            groups.setdefault(m, []).append(i)
    if any(not any((m >> b) & 1 for m in groups) for b in range(n_constraints)):
        raise EmptyArc("some constraint admits no direction")
    masks = sorted(groups, key=lambda m: -bin(m).count("1"))
    maximal = [m for m in masks if not any(o != m and (o | m) == o for o in masks)]
    by_bit = [[m for m in maximal if (m >> b) & 1] for b in range(n_constraints)]
    # constraints some single cell satisfies together with constraint b
    co = []
    for opts in by_bit:
        u = 0
        for m in opts:
            u |= m
        co.append(u)
    order = sorted(range(n_constraints), key=lambda b: bin(co[b]).count("1"))

    def packing(rest: int) -> int:
        """Greedy count of pairwise incompatible open constraints."""
        k = 0
        for b in order:
            if (rest >> b) & 1:
                k += 1
                rest &= ~co[b]
                if not rest:
                    break
        return k

    solutions: list = []

    banned: set = set()
    # covered set -> largest depth known to fail.  Failures are only recorded
    # before the first solution, when they are genuine (siblings excluded by
    # ``banned`` were searched in full).
    failed: dict = {}

    def search(covered: int, chosen: list, depth: int):
        if covered == goal:
            solutions.append(list(chosen))
            return len(solutions) >= max_solutions
        if depth == 0 or failed.get(covered, -1) >= depth:
            return False
        if packing(goal & ~covered) > depth:
            return False
        best_opts = None
        rest = goal & ~covered
        while rest:
            low = rest & -rest
            opts = [m for m in by_bit[low.bit_length() - 1] if m not in banned]
            if best_opts is None or len(opts) < len(best_opts):
                best_opts = opts
                if len(opts) <= 1:
                    break
            rest ^= low
        # an option tried in an earlier sibling is never picked again below it
        tried = []
        try:
            for m in best_opts:
                chosen.append(m)
                if search(covered | m, chosen, depth - 1):
                    return True
                chosen.pop()
                banned.add(m)
                tried.append(m)
        finally:
            banned.difference_update(tried)
        if not solutions and len(failed) < 1 << 21:
            failed[covered] = depth
        return False

    for size in range(max(1, min_size), max_size + 1):
        search(0, [], size)
        if solutions:
            seen, out = set(), []
            for sol in solutions:
                key = frozenset(sol)
                if key not in seen:
                    seen.add(key)
                    out.append([groups[m] for m in sol])
            return size, out
    raise RuntimeError("hitting set larger than max_size")


# ---------------------------------------------------------------- polygon arcs


def tangent_cone_arc(K: ConvexPolygon, x, mode="closed") -> Arc:
    """Directions entering ``K`` (closed) or ``int K`` (open) from boundary point ``x``."""
    closed = Mode.parse(mode) is Mode.CLOSED
    if not contains(K, x, Mode.CLOSED) or contains(K, x, Mode.OPEN):
        raise NotOnBoundary(f"{x} is not on the boundary")
    vs = K.vertices
    n = len(vs)
    for i, v in enumerate(vs):
        if v == x:
            return Arc(Dir(sub(vs[(i + 1) % n], v)), Dir(sub(vs[i - 1], v)), closed, closed)
    for i, (a, b) in enumerate(K.edges()):
        if sgn(cross(sub(b, a), sub(x, a))) == 0:
            e = sub(b, a)
            return Arc(Dir(e), Dir(neg(e)), closed, closed)
    raise NotOnBoundary(f"{x} is not on the boundary")


def vertex_cone_arcs(K: ConvexPolygon, mode="closed") -> list:
    return [tangent_cone_arc(K, v, mode) for v in K.vertices]


def edge_step_arcs(K: ConvexPolygon, x, eps_sq, mode="closed") -> Optional[list]:
    """Per-edge constraints on translations ``t`` with ``|t|^2 = eps_sq`` and
    ``x + t`` in ``K`` (closed) or ``int K`` (open).

    Returns a list of arcs whose intersection is the allowed set, or ``None``
    when some edge already excludes every direction.
    """
    closed = Mode.parse(mode) is Mode.CLOSED
    arcs = []
    vs = K.vertices
    nv = len(vs)
    for j, (nrm, c) in enumerate(zip(K.normals, K.offsets)):
        m = neg(nrm)  # outward normal
        h = dot(nrm, x) - c  # >= 0 for x in K; constraint m.t <= h
        mm = norm_sq(m)
        disc = eps_sq * mm - h * h
        sd = sgn(disc)
        if sgn(h) < 0:
            return None
        if sd < 0:
            continue
        if sd == 0:
            if closed:
                continue
            exact = (m[0] * h / mm, m[1] * h / mm)
            arcs.append(Arc(Dir(m, exact=exact), Dir(m, exact=exact), False, False))
            continue
        P = (m[0] * h, m[1] * h)
        Q = rot90(m)
        exact_plus = exact_minus = None
        root = _known_root(vs[j], vs[(j + 1) % nv], x, eps_sq)
        if root is not None:
            # other intersection by Vieta: t1 + t2 = 2 h m / |m|^2
            t1 = root
            t2 = sub((2 * h * m[0] / mm, 2 * h * m[1] / mm), t1)
            for t in (t1, t2):
                if sgn(cross(m, t)) > 0:
                    exact_plus = t
                else:
                    exact_minus = t
        else:
            from .field import exact_sqrt

            r = exact_sqrt(disc)
            if r is not None:
                exact_plus = ((P[0] + r * Q[0]) / mm, (P[1] + r * Q[1]) / mm)
                exact_minus = ((P[0] - r * Q[0]) / mm, (P[1] - r * Q[1]) / mm)
        plus = Dir(P, Q, disc, exact_plus)
        minus = Dir(P, neg(Q), disc, exact_minus)
        arcs.append(Arc(plus, minus, closed, closed))
    return arcs


def _known_root(a, b, x, eps_sq):
    """An edge endpoint at squared distance ``eps_sq`` from ``x``, as ``v - x``."""
    for v in (a, b):
        t = sub(v, x)
        if norm_sq(t) == eps_sq:
            return t
    return None


def step_arc_family(K: ConvexPolygon, x, eps_sq, mode="closed") -> list:
    """``{r : x + eps r in K}`` (closed) or ``in int K`` (open) as disjoint arcs.

    For a convex polygon this set can consist of several arcs (a thin body
    around the circle centre), so a list is returned; empty list means no
    direction works.
    """
    parts = edge_step_arcs(K, x, eps_sq, mode)
    if parts is None:
        return []
    if not parts:
        return [Arc.full_circle()]
    cells = decompose(parts)
    mask = cells.full_mask()
    for a in parts:
        mask &= cells.arc_mask(a)
    return cells.cells_to_arcs(mask)


def circle_polygon_arc(K: ConvexPolygon, x, eps_sq, mode="closed") -> list:
    """Alias of :func:`step_arc_family` taking ``eps_sq`` (squared step length)."""
    return step_arc_family(K, x, eps_sq, mode)
