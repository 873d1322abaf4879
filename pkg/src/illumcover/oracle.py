"""Independent cross-checks: sampling for covers, brute force for piercing.

The oracles only ever refute.  A reported counterexample is re-checked with
exact arithmetic before it is returned, so a float artefact never counts as
a disagreement.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .geometry import ConvexPolygon, Mode, circumball, contains, sub

TAU = 2 * math.pi
ANGLE_TOL = 1e-12
DEFAULT_SEED = 20240611


@dataclass(frozen=True)
class SampleConfig:
    seed: int = DEFAULT_SEED
    grid_resolution: int = 256
    mc_samples: int = 100_000

    def __post_init__(self):
        if self.grid_resolution <= 0 or self.mc_samples < 0:
            raise ValueError("sample counts must be positive")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


@dataclass(frozen=True)
class Counterexample:
    point: tuple


class _NoCounterexample:
    def __repr__(self):
        return "NoCounterexample"

    def __bool__(self):
        return False


NoCounterexample = _NoCounterexample()


def _float_halfplanes(K: ConvexPolygon):
    n = np.array([[float(a), float(b)] for a, b in K.normals])
    c = np.array([float(x) for x in K.offsets])
    scale = np.linalg.norm(n, axis=1)
    return n / scale[:, None], c / scale


def _slack(nrm, off, pts):
    """Signed distance of each point to the nearest edge line (positive inside)."""
    return (pts @ nrm.T - off).min(axis=1)


def _structured_points(K: ConvexPolygon, translations, res: int) -> list:
    """Exact points on the boundary of ``K`` and of every translate."""
    out = list(K.vertices)
    res = min(res, 64)
    polys = [K.vertices] + [[(v[0] + t[0], v[1] + t[1]) for v in K.vertices] for t in translations]
    for vs in polys:
        for i, a in enumerate(vs):
            b = vs[(i + 1) % len(vs)]
            d = sub(b, a)
            for k in range(res):
                s = Fraction(k, res)
                out.append((a[0] + d[0] * s, a[1] + d[1] * s))
    return out


def sample_cover_check(K: ConvexPolygon, translations: Sequence, mode="closed", cfg: SampleConfig = SampleConfig()):
    """Look for a point of ``K`` outside every ``K + t`` (closed) or ``int K + t`` (open)."""
    mode = Mode.parse(mode)
    ts = list(translations)
    nrm, off = _float_halfplanes(K)
    tf = np.array([[float(a), float(b)] for a, b in ts]) if ts else np.zeros((0, 2))
    vf = np.array([[float(a), float(b)] for a, b in K.vertices])
    lo, hi = vf.min(axis=0), vf.max(axis=0)
    rng = cfg.rng()

    g = np.linspace(0.0, 1.0, cfg.grid_resolution)
    grid = np.stack(np.meshgrid(g, g), axis=-1).reshape(-1, 2) * (hi - lo) + lo
    mc = rng.random((cfg.mc_samples, 2)) * (hi - lo) + lo
    structured = _structured_points(K, ts, cfg.grid_resolution)
    sf = np.array([[float(a), float(b)] for a, b in structured])

    candidates = []
    for block, exact in ((sf, structured), (grid, None), (mc, None)):
        inside = _slack(nrm, off, block) >= -1e-9
        best = np.full(len(block), -np.inf)
        for t in tf:
            best = np.maximum(best, _slack(nrm, off, block - t))
        for idx in np.flatnonzero(inside & (best <= 1e-9)):
            candidates.append((block[idx, 0], block[idx, 1], exact[idx] if exact is not None else None))
    # the smallest confirmed point (x, then y) is reported
    candidates.sort(key=lambda c: (c[0], c[1]))
    for x, y, p in candidates:
        if p is None:
            p = (Fraction(x), Fraction(y))
        if contains(K, p, Mode.CLOSED) and not any(contains(K, sub(p, t), mode) for t in ts):
            return Counterexample(p)
    return NoCounterexample


# ---------------------------------------------------------------- piercing


class Exceeded(int):
    """Marker result: no piercing set of size ``<= m_max`` exists."""

    def __repr__(self):
        return f"Exceeded({int(self)})"


def _angle(d) -> float:
    x, y = (d.floats() if hasattr(d, "floats") else (float(d[0]), float(d[1])))
    return math.atan2(y, x) % TAU


def _close(a, b) -> bool:
    diff = abs(a - b) % TAU
    return min(diff, TAU - diff) < ANGLE_TOL


class _FloatArc:
    def __init__(self, arc):
        self.full = arc.full
        if not arc.full:
            self.s, self.e = _angle(arc.start), _angle(arc.end)
            self.sc, self.ec = arc.start_closed, arc.end_closed
            self.w = (self.e - self.s) % TAU

    def contains(self, th: float) -> bool:
        if self.full:
            return True
        if _close(th, self.s):
            return self.sc
        if _close(th, self.e):
            return self.ec
        if _close(self.s, self.e):
            # a single point, or the circle minus a point
            return not self.sc
        return (th - self.s) % TAU < self.w

    def endpoints(self):
        return [] if self.full else [self.s, self.e]


def _candidates(arcs: Sequence[_FloatArc]) -> list:
    pts = sorted({round(p, 14) for a in arcs for p in a.endpoints()})
    if not pts:
        return [0.0]
    mids = [(pts[k] + pts[k + 1]) / 2 for k in range(len(pts) - 1)]
    mids.append(((pts[-1] + pts[0] + TAU) / 2) % TAU)
    return pts + mids


def _min_cover(masks: list, goal: int, m_max: int):
    masks = sorted(set(m for m in masks if m), key=lambda m: -bin(m).count("1"))
    masks = [m for m in masks if not any(o != m and o | m == o for o in masks)]
    for m in range(1, m_max + 1):
        for combo in itertools.combinations(masks, m):
            acc = 0
            for c in combo:
                acc |= c
            if acc == goal:
                return m
    return None


def brute_min_piercing(family: Sequence, m_max: int = 12):
    """Exhaustive minimum number of directions meeting every arc."""
    arcs = [_FloatArc(a) for a in family]
    if not arcs:
        return 0
    goal = (1 << len(arcs)) - 1
    masks = [sum(1 << i for i, a in enumerate(arcs) if a.contains(th)) for th in _candidates(arcs)]
    m = _min_cover(masks, goal, m_max)
    return Exceeded(m_max) if m is None else m


def sample_quantified_lower(K: ConvexPolygon, eps, mode="closed", cfg: SampleConfig = SampleConfig(),
                            n_random: int = 24):
    """Lower bound on ``i(K, eps)`` / ``c(K, eps)`` from random witnesses.

    Returns ``math.inf`` when some sampled witness admits no step at all.
    """
    from .arcs import step_arc_family
    from .covering import EpsSpec

    if not isinstance(eps, EpsSpec):
        eps = EpsSpec.rational(eps)
    mode = Mode.parse(mode)
    ball = circumball(K)
    E = eps.eps_sq(ball)
    rng = cfg.rng()
    vs = K.vertices
    witnesses = list(vs) + [ball.center]
    for _ in range(n_random):
        w = [Fraction(int(k)) for k in rng.integers(0, 1000, size=len(vs))]
        tot = sum(w) or Fraction(1)
        witnesses.append((sum((v[0] * (a / tot) for v, a in zip(vs, w)), 0 * vs[0][0]),
                          sum((v[1] * (a / tot) for v, a in zip(vs, w)), 0 * vs[0][0])))
    families = []
    for x in witnesses:
        fam = [_FloatArc(a) for a in step_arc_family(K, x, E, mode)]
        if not fam:
            return math.inf
        families.append(fam)
    flat = [a for fam in families for a in fam]
    goal = (1 << len(families)) - 1
    masks = []
    for th in _candidates(flat):
        masks.append(sum(1 << i for i, fam in enumerate(families) if any(a.contains(th) for a in fam)))
    m = _min_cover(masks, goal, 16)
    return 16 if m is None else m
