"""Covering and illumination numbers of convex polygons.

Classical numbers come from piercing vertex-cone arcs.  The quantified
numbers ``i(K, eps)`` (closed) and ``c(K, eps)`` (open) are computed by
witness refinement:

* every witness point ``x`` restricts the step ``t`` (``|t| = eps``) to the
  arcs where ``x + t`` stays in ``K``;
* an exact minimum hitting set over those arcs is a lower bound;
* the chosen steps are turned into exact vectors and checked as a cover
  ``K ⊆ ∪ (K - t_i)``; uncovered points become new witnesses.

A verified cover whose size equals the lower bound is the exact value.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arcs import (
    Dir,
    circle_covered,
    decompose,
    dir_key,
    edge_step_arcs,
    min_hitting,
    min_piercing,
    step_arc_family,
    tangent_cone_arc,
    vertex_cone_arcs,
)
from .field import NumberField, SurdTower, exact_sqrt, sgn, sign_surd
from .geometry import (
    CircleSq,
    ConvexPolygon,
    InvalidInput,
    Mode,
    _dedupe,
    add,
    circumball,
    clip_halfplane,
    closed_residual,
    contact_set,
    contains,
    cover_residual,
    cross,
    dot,
    neg,
    norm_sq,
    open_boundary_witness,
    polygon_area2,
    residual_witnesses,
    scale,
    sub,
    vertex_centroid,
)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 64
_MAXSOL = 16


@dataclass(frozen=True)
class EpsSpec:
    """Step length: an exact rational, or a rational multiple of ``R(K)``."""

    kind: str
    value: Fraction

    def __post_init__(self):
        if self.kind not in ("rational", "circumradius"):
            raise InvalidInput(f"unknown eps kind {self.kind!r}")
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value <= 0:
            raise InvalidInput("eps must be positive")

    @classmethod
    def rational(cls, eps) -> "EpsSpec":
        return cls("rational", Fraction(eps))

    @classmethod
    def circumradius(cls, factor=1) -> "EpsSpec":
        return cls("circumradius", Fraction(factor))

    @classmethod
    def parse(cls, text: str) -> "EpsSpec":
        """``"1/2"`` or ``"R"``, ``"0.99R"``, ``"3/4*R"``."""
        t = text.strip().replace(" ", "")
        if t.upper().endswith("R"):
            head = t[:-1].rstrip("*")
            return cls.circumradius(Fraction(head) if head else 1)
        return cls.rational(Fraction(t))

    def eps_sq(self, ball: CircleSq):
        if self.kind == "rational":
            return self.value * self.value
        return ball.radius_sq * (self.value * self.value)

    def base_vector(self, K: ConvexPolygon, ball: CircleSq):
        """A field vector of length exactly eps."""
        if self.kind == "rational":
            return (self.value, Fraction(0))
        v = contact_set(K, ball)[0]
        return scale(sub(v, ball.center), self.value)

    def __str__(self):
        if self.kind == "rational":
            return str(self.value)
        return "R" if self.value == 1 else f"{self.value}*R"


@dataclass
class CountResult:
    """Value of a quantified number: finite with certificate, infinite, or a lower bound."""

    verdict: str
    m: Optional[int] = None
    certificate: list = field(default_factory=list)
    witness: Optional[tuple] = None
    lower_bound: Optional[int] = None
    rounds: int = 0
    transcript: dict = field(default_factory=dict)

    @property
    def is_finite(self) -> bool:
        return self.verdict == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.verdict == "infinite"

    def value(self):
        if self.verdict == "finite":
            return self.m
        if self.verdict == "infinite":
            return float("inf")
        return None

    def __repr__(self):
        if self.verdict == "finite":
            return f"Finite({self.m})"
        if self.verdict == "infinite":
            return f"Infinite(witness={self.witness})"
        return f"LowerBound({self.lower_bound})"


def _finite(m, cert, rounds=0, **tr) -> CountResult:
    return CountResult("finite", m=m, certificate=list(cert), lower_bound=m, rounds=rounds, transcript=tr)


def _infinite(w, rounds=0, **tr) -> CountResult:
    return CountResult("infinite", witness=w, rounds=rounds, transcript=tr)


def _as_vector(d):
    return d.P if isinstance(d, Dir) else d


# ---------------------------------------------------------------- classical numbers


def number_i(K: ConvexPolygon) -> tuple[int, list]:
    """``i(K)``: fewest directions t-illuminating ``K`` (closed vertex cones)."""
    m, dirs = min_piercing(vertex_cone_arcs(K, Mode.CLOSED))
    return m, [_as_vector(d) for d in dirs]


def number_c(K: ConvexPolygon) -> tuple[int, list]:
    """``c(K)``: fewest directions illuminating ``K`` (open vertex cones)."""
    m, dirs = min_piercing(vertex_cone_arcs(K, Mode.OPEN))
    return m, [_as_vector(d) for d in dirs]


def _sup_norm(v):
    a, b = abs(v[0]), abs(v[1])
    return a if a >= b else b


@dataclass
class TBounds:
    lo: int
    hi: int
    certificate: list

    def __iter__(self):
        return iter((self.lo, self.hi, self.certificate))


def number_t_bounds(K: ConvexPolygon, max_halvings: int = 24) -> TBounds:
    """Sound bounds ``lo <= t(K) <= hi``.

    ``lo = i(K)``.  ``hi`` is the size of the smallest verified closed cover
    among small translates along illumination directions (pushed backwards)
    and along edge directions; it never exceeds ``c(K)``.
    """
    lo, idirs = number_i(K)
    cm, cdirs = number_c(K)
    xs = [v[0] for v in K.vertices]
    width = max(xs) - min(xs)
    candidates = [idirs, cdirs]
    for a, b in K.edges():
        e = sub(b, a)
        candidates.append([e, neg(e)])
    candidates.sort(key=len)
    for dirs in candidates:
        if len(dirs) > cm:
            continue
        units = [scale(d, 1 / _sup_norm(d)) for d in dirs]
        delta = width / 2
        for _ in range(max_halvings):
            ts = [scale(u, -delta) for u in units]
            if cover_residual(K, ts, Mode.CLOSED).covered:
                return TBounds(lo, len(ts), ts)
            delta = delta / 2
    raise RuntimeError("no cover found along illumination directions")


# ---------------------------------------------------------------- at the circumradius


@dataclass
class FinitenessCert:
    """Contact vertices, their cones moved to ``c_K``, and the coverage verdict."""

    center: tuple
    radius_sq: object
    contact_vertices: list
    arcs: list
    verdict: bool
    gap_witness: Optional[Dir] = None


def finite_at_circumradius(K: ConvexPolygon) -> FinitenessCert:
    """Decide ``i(K, R(K)) < inf``: the contact-vertex cones, placed at the
    circumcentre, must cover every direction."""
    ball = circumball(K)
    contacts = contact_set(K, ball)
    arcs = [tangent_cone_arc(K, v, Mode.CLOSED) for v in contacts]
    cov = circle_covered(arcs)
    return FinitenessCert(ball.center, ball.radius_sq, contacts, arcs, cov.covered, cov.gap)


def _check_contacts(K, subset, ball):
    contacts = contact_set(K, ball)
    for v in subset:
        if v not in contacts:
            raise InvalidInput(f"{v} is not a contact vertex")


def condition_iii_iv_check(K: ConvexPolygon, subset: Sequence) -> bool:
    """Translates ``K + (c_K - x)`` over ``subset`` cover a full neighbourhood of ``c_K``."""
    ball = circumball(K)
    _check_contacts(K, subset, ball)
    arcs = [tangent_cone_arc(K, v, Mode.CLOSED) for v in subset]
    return circle_covered(arcs).covered


def condition_iii_check(K: ConvexPolygon, subset: Sequence) -> bool:
    """Weaker form: only the part of the neighbourhood inside ``K`` must be covered.

    If ``c_K`` is interior this equals :func:`condition_iii_iv_check`; on the
    boundary only the directions of the tangent cone at ``c_K`` count.
    """
    ball = circumball(K)
    _check_contacts(K, subset, ball)
    c = ball.center
    arcs = [tangent_cone_arc(K, v, Mode.CLOSED) for v in subset]
    if contains(K, c, Mode.OPEN):
        return circle_covered(arcs).covered
    target = tangent_cone_arc(K, c, Mode.CLOSED)
    if not arcs:
        return False
    cells = decompose(arcs + [target])
    union = 0
    for a in arcs:
        union |= cells.arc_mask(a)
    tmask = cells.arc_mask(target)
    return tmask & ~union == 0


def _quadrant(v) -> int:
    """Quarter arcs ``[k pi/2, (k+1) pi/2)`` anchored at direction (1, 0)."""
    sx, sy = sgn(v[0]), sgn(v[1])
    if sx > 0 and sy >= 0:
        return 0
    if sx <= 0 and sy > 0:
        return 1
    if sx < 0 and sy <= 0:
        return 2
    return 3


def construct_H(K: ConvexPolygon) -> list:
    """At most three contact points per quarter of the circumcircle: the two
    extreme ones and one in between."""
    ball = circumball(K)
    c = ball.center
    buckets: list[list] = [[], [], [], []]
    for v in contact_set(K, ball):
        buckets[_quadrant(sub(v, c))].append(v)
    H = []
    for b in buckets:
        b.sort(key=lambda v: dir_key(Dir(sub(v, c))))
        if len(b) <= 2:
            H.extend(b)
        else:
            H.extend([b[0], b[-1], b[1]])
    return H


def finiteness_necessary_conditions(K: ConvexPolygon) -> dict:
    """Necessary conditions for finiteness at the circumradius."""
    ball = circumball(K)
    c = ball.center
    contacts = contact_set(K, ball)
    dirs = sorted((Dir(sub(v, c)) for v in contacts), key=dir_key)
    half_circle = len(dirs) >= 2 and all(
        _gap_less_than_pi(dirs[k], dirs[(k + 1) % len(dirs)]) for k in range(len(dirs))
    )
    return {
        "half_circle": half_circle,
        "center_interior": contains(K, c, Mode.OPEN),
        "contacts": len(contacts),
        "at_least_three": len(contacts) >= 3,
    }


def _gap_less_than_pi(a: Dir, b: Dir) -> bool:
    return sgn(cross(a.P, b.P)) > 0


# ---------------------------------------------------------------- quantified numbers


def threshold_check(K: ConvexPolygon, eps: EpsSpec) -> CountResult:
    """Beyond the circumradius no step works at ``c_K``."""
    ball = circumball(K)
    e2 = eps.eps_sq(ball)
    if not e2 > ball.radius_sq:
        raise InvalidInput("threshold_check needs eps^2 > R^2")
    return _infinite(
        ball.center,
        reason="|(c_K + t) - c_K|^2 = eps^2 > R^2 for every |t| = eps, and K ⊆ B(c_K, R)",
        eps_sq=e2,
        radius_sq=ball.radius_sq,
    )


def _witness_constraints(K, X, E, mode, cache):
    per_x = []
    for x in X:
        if x not in cache:
            cache[x] = edge_step_arcs(K, x, E, mode)
        arcs = cache[x]
        if arcs is None:
            return None, x
        per_x.append(arcs)
    cells = decompose([a for arcs in per_x for a in arcs])
    masks = []
    for x, arcs in zip(X, per_x):
        m = cells.full_mask()
        for a in arcs:
            m &= cells.arc_mask(a)
        if m == 0:
            return None, x
        masks.append(m)
    return (cells, masks), None


def _anchor_sets(K, contacts, limit=24) -> list:
    """Inclusion-minimal sets of contact vertices whose cones cover the circle, smallest first."""
    arcs = {v: tangent_cone_arc(K, v, Mode.CLOSED) for v in contacts}
    found = []
    for k in range(1, len(contacts) + 1):
        if found and k > len(found[0]) + 2:
            break
        for S in itertools.combinations(contacts, k):
            if any(set(f) <= set(S) for f in found):
                continue
            if circle_covered([arcs[v] for v in S]).covered:
                found.append(S)
                if len(found) >= limit:
                    return found
    return found


def _minimal_rows(masks):
    """Indices of constraints not implied by a tighter one.

    A witness whose allowed cells contain another witness's allowed cells is
    satisfied whenever the other one is, so it can be dropped for good.
    """
    kept, out = [], []
    for i in sorted(range(len(masks)), key=lambda i: bin(masks[i]).count("1")):
        m = masks[i]
        if not any(k & m == k for k in kept):
            kept.append(m)
            out.append(i)
    return sorted(out)


def _uncovered(K, back, mode, limit=3):
    """``(covered, witnesses)`` for the cover of ``K`` by ``K + b`` over ``back``."""
    pieces = closed_residual(K, back)
    if not pieces:
        if mode is Mode.CLOSED:
            return True, []
        w = open_boundary_witness(K, back)
        return w is None, ([] if w is None else [w])
    out = []
    for pc in pieces[:limit]:
        g = vertex_centroid(pc)
        out.append(g)
        out.extend(((g[0] + v[0]) / 2, (g[1] + v[1]) / 2) for v in pc)
        out.extend(pc)
    return False, out


def _realize(cells, group, base, E):
    """An exact step vector for one of the alternative cells, or None."""
    for cell in sorted(group, key=lambda c: c % 2 == 0):
        if cell % 2 == 1 or cells.n == 0:
            return cells.cell_direction(cell, base)
        d = cells.dirs[cell // 2]
        if d.exact is not None and norm_sq(d.exact) == E:
            return d.exact
    return None


def _float_residual_area(fvs, fhps, backs) -> float:
    """Area of ``K`` outside the translates ``K + b``, each shrunk inward by its own margin.

    ``backs`` holds ``(bx, by, margin)`` triples.
    """
    pieces = [fvs]
    for bx, by, margin in backs:
        hps = [((nx, ny), c + nx * bx + ny * by + margin) for (nx, ny), c in fhps]
        nxt = []
        for pc in pieces:
            rest = pc
            for n, c in hps:
                out = _dedupe(clip_halfplane(rest, (-n[0], -n[1]), -c))
                if len(out) >= 3 and abs(polygon_area2(out)) > 1e-24:
                    nxt.append(out)
                rest = _dedupe(clip_halfplane(rest, n, c))
                if len(rest) < 3 or abs(polygon_area2(rest)) <= 1e-24:
                    break
        pieces = nxt
        if not pieces:
            return 0.0
    return sum(abs(polygon_area2(pc)) for pc in pieces) / 2


def _angle_of(v) -> float:
    return math.atan2(float(v[1]), float(v[0]))


def _aim(base, theta):
    """Rational rotation of ``base`` pointing at angle ``theta`` to about 1e-18."""
    phi = (theta - _angle_of(base) + math.pi) % (2 * math.pi) - math.pi
    bvec = base
    if abs(phi) > math.pi / 2:
        bvec = neg(base)
        phi = (phi + 2 * math.pi) % (2 * math.pi) - math.pi
    s = Fraction(math.tan(phi / 2)).limit_denominator(10**9)
    den = 1 + s * s
    c, si = (1 - s * s) / den, 2 * s / den
    return (bvec[0] * c - bvec[1] * si, bvec[0] * si + bvec[1] * c)


class _PrimalSearch:
    """Float coordinate descent on step angles looking for an ``m``-cover.

    Translates are shrunk by a small margin so that a float cover survives
    rounding to exact vectors; the exact check still has the final word.
    """

    def __init__(self, K, base, seed=0, max_evals=3000):
        self.fvs = [(float(x), float(y)) for x, y in K.vertices]
        self.fhps = []
        for (nx, ny), c in K.halfplanes():
            h = math.hypot(float(nx), float(ny))
            self.fhps.append(((float(nx) / h, float(ny) / h), float(c) / h))
        xs = [p[0] for p in self.fvs]
        ys = [p[1] for p in self.fvs]
        self.margin = 1e-9 * max(max(xs) - min(xs), max(ys) - min(ys))
        self.r = math.sqrt(float(norm_sq(base)))
        self.base = base
        self.rng = random.Random(seed)
        self.max_evals = max_evals

    def area(self, th, fixed=()):
        r, mg = self.r, self.margin
        backs = list(fixed) + [(-r * math.cos(t), -r * math.sin(t), mg) for t in th]
        return _float_residual_area(self.fvs, self.fhps, backs)

    def descend(self, th, budget, fixed=()):
        a, step, used = self.area(th, fixed), 0.25, 1
        while step > 1e-8 and a > 0 and used < budget:
            better = False
            for i in range(len(th)):
                for d in (step, -step):
                    t2 = list(th)
                    t2[i] += d
                    a2 = self.area(t2, fixed)
                    used += 1
                    if a2 < a:
                        th, a, better = t2, a2, True
                        if a == 0:
                            return th, a, used
            if not better:
                step /= 2
        return th, a, used

    def run(self, m, seeds=(), restarts=6, fixed=(), max_evals=None):
        """Exact vectors for ``m`` free steps that, with the exact ``fixed``
        steps, cover ``K`` in floats; None if the search gives up."""
        if m == 0:
            restarts = 1
        fx = [(-float(t[0]), -float(t[1]), 0.0) for t in fixed]
        starts = [list(s) for s in seeds if len(s) == m]
        starts += [[self.rng.uniform(0, 2 * math.pi) for _ in range(m)] for _ in range(restarts)]
        left = self.max_evals if max_evals is None else max_evals
        for th in starts:
            if left <= 0:
                break
            th, a, used = self.descend(th, left, fx)
            left -= used
            if a == 0:
                return list(fixed) + [_aim(self.base, t) for t in th]
        return None


@dataclass(frozen=True)
class _SurdStep:
    """The step ``(P + sqrt(D) Q) / |Q|^2`` at an algebraic arc endpoint."""

    P: tuple
    Q: tuple
    D: object

    def approx(self):
        q = float(norm_sq(self.Q))
        r = float(self.D) ** 0.5
        return tuple(Fraction((float(self.P[i]) + r * float(self.Q[i])) / q) for i in range(2))

    def lands_in(self, K, w, mode) -> bool:
        q = norm_sq(self.Q)
        for n, c in zip(K.normals, K.offsets):
            s = sign_surd((dot(n, w) - c) * q + dot(n, self.P), dot(n, self.Q), self.D)
            if s < 0 or (s == 0 and mode is Mode.OPEN):
                return False
        return True


def _lands_in(K, w, t, mode) -> bool:
    if isinstance(t, _SurdStep):
        return t.lands_in(K, w, mode)
    return contains(K, add(w, t), mode)


def _symbolic(cells, group):
    for cell in group:
        if cell % 2 == 0:
            d = cells.dirs[cell // 2]
            if sgn(dot(d.P, d.Q)) == 0:
                return _SurdStep(d.P, d.Q, d.D)
    return None


def _surd_vectors(steps):
    """Steps as exact vectors, surd ones in a shared tower; None if the tower degenerates."""
    radicands = []
    for t in steps:
        if isinstance(t, _SurdStep) and not any(t.D == d for d in radicands):
            if not any(exact_sqrt(t.D / d) is not None for d in radicands):
                radicands.append(t.D)
    tower = SurdTower(radicands)
    out = []
    for t in steps:
        if not isinstance(t, _SurdStep):
            out.append(t)
            continue
        for i, d in enumerate(radicands):
            r = exact_sqrt(t.D / d)
            if r is not None:
                root = tower.sqrt(i) * r
                break
        q = norm_sq(t.Q)
        out.append(((t.P[0] + root * t.Q[0]) / q, (t.P[1] + root * t.Q[1]) / q))
    return out


def _surd_cover(K, steps, mode):
    try:
        vecs = _surd_vectors(steps)
        if cover_residual(K, [neg(t) for t in vecs], mode).covered:
            return vecs
    except ZeroDivisionError:
        pass
    return None


def _refute_symbolic(K, steps, mode, limit=6):
    """Points provably missed by steps that have no exact field form."""
    approx = [t.approx() if isinstance(t, _SurdStep) else t for t in steps]
    out = []
    for w in residual_witnesses(K, [neg(t) for t in approx], mode, limit=limit):
        if not any(_lands_in(K, w, t, mode) for t in steps):
            out.append(w)
    return out


def quantified_count(
    K: ConvexPolygon,
    eps: EpsSpec,
    mode="closed",
    budget: int = DEFAULT_BUDGET,
    max_solutions: int = _MAXSOL,
) -> CountResult:
    """``i(K, eps)`` (closed) or ``c(K, eps)`` (open) by witness refinement."""
    if not isinstance(eps, EpsSpec):
        eps = EpsSpec.rational(eps)
    mode = Mode.parse(mode)
    ball = circumball(K)
    c, R2 = ball.center, ball.radius_sq
    E = eps.eps_sq(ball)
    if mode is Mode.OPEN and E >= R2:
        return _infinite(c, reason="c_K + t lies outside int B(c_K, R) ⊇ int K")
    if mode is Mode.CLOSED and E > R2:
        return threshold_check(K, eps)
    at_radius = mode is Mode.CLOSED and E == R2
    if at_radius:
        fin = finite_at_circumradius(K)
        if not fin.verdict:
            return _infinite(c, reason="contact cones at c_K leave a gap", gap=fin.gap_witness)
    base = eps.base_vector(K, ball)

    X = []
    seen = set()
    for p in list(K.vertices) + [c]:
        if p not in seen:
            seen.add(p)
            X.append(p)
    lb = 0
    anchors = []
    if at_radius:
        # points near c_K can only use the steps v - c_K over contact
        # vertices v, and those must pass the cone test on their own
        anchors = _anchor_sets(K, fin.contact_vertices)
        lb = len(anchors[0])
    cache: dict = {}
    primal = _PrimalSearch(K, base)
    for rnd in range(1, budget + 1):
        built, bad = _witness_constraints(K, X, E, mode, cache)
        if built is None:
            return _infinite(bad, rounds=rnd, reason="no admissible step at witness")
        cells, xmasks = built
        keep = _minimal_rows(xmasks)
        X = [X[i] for i in keep]
        rows = [xmasks[i] for i in keep]
        cell_masks = [0] * cells.ncells
        for wi, m in enumerate(rows):
            cm = m
            while cm:
                low = cm & -cm
                cell_masks[low.bit_length() - 1] |= 1 << wi
                cm ^= low
        size, sols = min_hitting(cell_masks, len(rows), max_solutions=max_solutions, min_size=lb)
        lb = max(lb, size)
        candidates = []
        new = []

        def add_witnesses(ws):
            for w in ws:
                if w not in seen:
                    seen.add(w)
                    new.append(w)

        for sol in sols:
            ts = [_realize(cells, g, base, E) for g in sol]
            if all(t is not None for t in ts):
                candidates.append(ts)
                continue
            steps = [t if t is not None else _symbolic(cells, g) for t, g in zip(ts, sol)]
            if any(t is None for t in steps):
                continue
            refuted = _refute_symbolic(K, steps, mode)
            if not refuted:
                vecs = _surd_cover(K, steps, mode)
                if vecs is not None:
                    return _finite(len(vecs), vecs, rounds=rnd, witnesses=len(X), algebraic=True)
            add_witnesses(refuted)
        for ts in candidates:
            covered, ws = _uncovered(K, [neg(t) for t in ts], mode)
            if covered:
                return _finite(len(ts), ts, rounds=rnd, witnesses=len(X))
            add_witnesses(ws)
        seeds = [[_angle_of(t) for t in ts] for ts in candidates[:4] if len(ts) == lb]
        tries = [primal.run(lb, seeds)]
        for S in anchors:
            if len(S) <= lb:
                tries.append(primal.run(lb - len(S), fixed=[sub(v, c) for v in S], restarts=2, max_evals=500))
        for ts in tries:
            if ts is None:
                continue
            covered, ws = _uncovered(K, [neg(t) for t in ts], mode)
            if covered:
                return _finite(len(ts), ts, rounds=rnd, witnesses=len(X), searched=True)
            add_witnesses(ws)
        if not new:
            break
        X.extend(new)
        log.debug("round %d: lb=%d witnesses=%d", rnd, lb, len(X))
    return CountResult("lower_bound", lower_bound=lb, rounds=rnd, transcript={"witnesses": len(X)})


def verify_count(K: ConvexPolygon, eps: EpsSpec, mode, result: CountResult) -> bool:
    """Re-check a result without repeating the search."""
    mode = Mode.parse(mode)
    ball = circumball(K)
    E = eps.eps_sq(ball)
    if result.verdict == "finite":
        if len(result.certificate) != result.m:
            return False
        if any(norm_sq(t) != E for t in result.certificate):
            return False
        return cover_residual(K, [neg(t) for t in result.certificate], mode).covered
    if result.verdict == "infinite":
        w = result.witness
        if not contains(K, w, Mode.CLOSED):
            return False
        if mode is Mode.OPEN and E >= ball.radius_sq and w == ball.center:
            return True
        if mode is Mode.CLOSED and E > ball.radius_sq and w == ball.center:
            return True
        if mode is Mode.CLOSED and E == ball.radius_sq:
            return not finite_at_circumradius(K).verdict
        return step_arc_family(K, w, E, mode) == []
    return False


# ---------------------------------------------------------------- the disc


def disc_quantified(rho, eps, mode="closed") -> CountResult:
    """Closed form for a disc of radius ``rho``: three steps at 120 degrees while
    the step fits, otherwise infinite."""
    rho, eps = Fraction(rho), Fraction(eps)
    if rho <= 0 or eps <= 0:
        raise InvalidInput("rho and eps must be positive")
    mode = Mode.parse(mode)
    fits = eps <= rho if mode is Mode.CLOSED else eps < rho
    if not fits:
        return _infinite((Fraction(0), Fraction(0)), reason="centre has no admissible step")
    F = NumberField(12)  # theta = 2 cos(pi/6) = sqrt(3)
    s3 = F.theta()
    half = Fraction(1, 2)
    cert = [
        (F.element([eps]), F.element([0])),
        (F.element([-eps * half]), s3 * (eps * half)),
        (F.element([-eps * half]), s3 * (-eps * half)),
    ]
    return _finite(3, cert, reason="three steps of length eps at mutual angle 2pi/3")


def verify_disc(rho, eps, mode, result: CountResult) -> bool:
    """Re-check a disc verdict.

    Three steps of equal length ``eps`` summing to zero sit at mutual angle
    ``2 pi / 3``; every ``x`` with ``|x| <= rho`` then has a step with
    ``|x + t|^2 <= |x|^2 - |x| eps + eps^2``, which stays within ``rho^2``
    (strictly in open mode) as long as ``eps <= rho`` (``eps < rho``).
    """
    rho, eps = Fraction(rho), Fraction(eps)
    mode = Mode.parse(mode)
    fits = eps <= rho if mode is Mode.CLOSED else eps < rho
    if result.verdict == "infinite":
        return not fits and result.witness == (0, 0)
    if result.verdict != "finite" or not fits or result.m != 3 or len(result.certificate) != 3:
        return False
    ts = result.certificate
    if any(norm_sq(t) != eps * eps for t in ts):
        return False
    return sum(t[0] for t in ts) == 0 and sum(t[1] for t in ts) == 0
