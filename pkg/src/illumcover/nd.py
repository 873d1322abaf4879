"""Boxes, balls and the double cone in R^n with exact rational membership.

The double cone ``{x : |x[<n]| + |x[n]| <= 1}`` is decided on squares, so no
square roots are ever taken.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .geometry import InvalidInput, Mode


class DimensionMismatch(InvalidInput):
    pass


@dataclass(frozen=True)
class SplitVector:
    """A point of R^n split as ``(head, last)`` with ``len(head) == n - 1``."""

    head: tuple
    last: Fraction

    @classmethod
    def of(cls, coords: Sequence) -> "SplitVector":
        cs = [Fraction(c) for c in coords]
        if len(cs) < 2:
            raise DimensionMismatch("need at least two coordinates")
        return cls(tuple(cs[:-1]), cs[-1])

    @property
    def dim(self) -> int:
        return len(self.head) + 1

    @property
    def coords(self) -> tuple:
        return self.head + (self.last,)

    def head_norm_sq(self) -> Fraction:
        return sum((h * h for h in self.head), Fraction(0))

    def __add__(self, other: "SplitVector") -> "SplitVector":
        if self.dim != other.dim:
            raise DimensionMismatch("dimension mismatch")
        return SplitVector(tuple(a + b for a, b in zip(self.head, other.head)), self.last + other.last)

    def __neg__(self):
        return SplitVector(tuple(-a for a in self.head), -self.last)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, k) -> "SplitVector":
        return SplitVector(tuple(a * k for a in self.head), self.last * k)


def _vec(x) -> SplitVector:
    return x if isinstance(x, SplitVector) else SplitVector.of(x)


@dataclass(frozen=True)
class Box:
    n: int
    half_widths: tuple

    def __post_init__(self):
        hw = tuple(Fraction(h) for h in self.half_widths)
        object.__setattr__(self, "half_widths", hw)
        if self.n < 2 or len(hw) != self.n or any(h <= 0 for h in hw):
            raise InvalidInput("box needs n >= 2 positive half widths")

    @classmethod
    def cube(cls, n: int, half_width=1) -> "Box":
        return cls(n, (Fraction(half_width),) * n)


@dataclass(frozen=True)
class Ball:
    n: int
    center: tuple
    radius_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(Fraction(c) for c in self.center))
        object.__setattr__(self, "radius_sq", Fraction(self.radius_sq))
        if self.n < 2 or len(self.center) != self.n or self.radius_sq <= 0:
            raise InvalidInput("ball needs n >= 2 and positive radius")


@dataclass(frozen=True)
class DoubleCone:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidInput("double cone needs n >= 2")


AnalyticBody = Box | Ball | DoubleCone


def member(B, x, mode="closed") -> bool:
    x = _vec(x)
    if x.dim != B.n:
        raise DimensionMismatch(f"point of dimension {x.dim} for body of dimension {B.n}")
    strict = Mode.parse(mode) is Mode.OPEN
    if isinstance(B, Box):
        if strict:
            return all(abs(c) < h for c, h in zip(x.coords, B.half_widths))
        return all(abs(c) <= h for c, h in zip(x.coords, B.half_widths))
    if isinstance(B, Ball):
        d = sum(((a - b) ** 2 for a, b in zip(x.coords, B.center)), Fraction(0))
        return d < B.radius_sq if strict else d <= B.radius_sq
    if isinstance(B, DoubleCone):
        l = abs(x.last)
        if l > 1 or (strict and l == 1):
            return False
        hs, rest = x.head_norm_sq(), (1 - l) ** 2
        return hs < rest if strict else hs <= rest
    raise TypeError(f"unknown body {B!r}")


# ---------------------------------------------------------------- cube cover


@dataclass
class BoxCover:
    n: int
    delta: Fraction
    translations: list
    verified: bool
    witness: Optional[tuple] = None


def box_t_cover(n: int, delta) -> BoxCover:
    """Cover ``[-1, 1]^n`` by ``K + (delta, 0, ...)`` and ``K - (delta, 0, ...)``.

    Only the first coordinate matters: the translates give the intervals
    ``[delta - 1, delta + 1]`` and ``[-delta - 1, 1 - delta]``, which cover
    ``[-1, 1]`` exactly when ``delta <= 1``.
    """
    delta = Fraction(delta)
    if n < 1:
        raise InvalidInput("n must be positive")
    if not 0 < delta < 2:
        raise InvalidInput("delta must lie in (0, 2)")
    zeros = (Fraction(0),) * (n - 1)
    ts = [(delta,) + zeros, (-delta,) + zeros]
    pieces = sorted([(t[0] - 1, t[0] + 1) for t in ts])
    reach = Fraction(-1)
    for lo, hi in pieces:
        if lo > reach:
            break
        reach = max(reach, hi)
    if reach >= 1:
        return BoxCover(n, delta, ts, True)
    witness = ((reach + pieces[1][0]) / 2,) + zeros
    return BoxCover(n, delta, ts, False, witness)


# ---------------------------------------------------------------- double cone, part 1


@dataclass(frozen=True)
class UnitHead:
    """The contact point ``(sign * h / |h|, 0)``, kept symbolic."""

    head: tuple
    sign: int

    def floats(self) -> tuple:
        nrm = float(sum(h * h for h in self.head)) ** 0.5
        return tuple(self.sign * float(h) / nrm for h in self.head) + (0.0,)


@dataclass
class Part1Result:
    case: int
    contact: object
    verified: bool


def doublecone_part1_translate(x0) -> Part1Result:
    """A contact point ``x`` of the unit sphere with ``x0 + x`` in the double cone."""
    x0 = _vec(x0)
    n = x0.dim
    if not member(DoubleCone(n), x0):
        raise InvalidInput("x0 is not in the double cone")
    zeros = (Fraction(0),) * (n - 1)
    hs, l = x0.head_norm_sq(), x0.last
    if hs == 0 and l == 0:
        x = SplitVector(zeros, Fraction(1))
        return Part1Result(1, x, member(DoubleCone(n), x0 + x))
    if hs < l * l:
        x = SplitVector(zeros, Fraction(-1 if l > 0 else 1))
        return Part1Result(2, x, member(DoubleCone(n), x0 + x))
    # x0 + x = (h (1 - 1/|h|), l); its head norm is 1 - |h| because |h| <= 1,
    # so membership reads (1 - |h|) + |l| <= 1, i.e. l^2 <= |h|^2.
    x = UnitHead(x0.head, -1)
    return Part1Result(3, x, hs <= 1 and l * l <= hs)


# ---------------------------------------------------------------- double cone, part 2


def rational_sphere_point(u: Sequence) -> tuple:
    """Inverse stereographic projection of ``u`` in Q^m onto S^m in Q^(m+1)."""
    u = [Fraction(a) for a in u]
    s = sum((a * a for a in u), Fraction(0))
    return tuple(2 * a / (s + 1) for a in u) + ((s - 1) / (s + 1),)


def _is_pole(x: SplitVector) -> bool:
    return all(h == 0 for h in x.head) and abs(x.last) == 1


def _is_equator(x: SplitVector) -> bool:
    return x.last == 0 and x.head_norm_sq() == 1


@dataclass
class RefutationEntry:
    contact: SplitVector
    case: int
    inner: Optional[Fraction] = None
    quad: Optional[tuple] = None  # (A, B): A mu^2 + B mu > 0 for mu > 0

    def valid(self, c: Fraction) -> bool:
        if self.case == 1:
            # mu + |mu c +- 1| <= 1 forces c >= 1
            return 0 <= c < 1
        A, B = self.quad
        return A > 0 and B >= 0 and A == 1 - c * c and B == 2 * (c - self.inner)


@dataclass
class RefutationTranscript:
    n: int
    x0: SplitVector
    c: Fraction
    entries: list = field(default_factory=list)

    def direction(self, mu) -> SplitVector:
        """The point ``mu (-x0[<n], c)`` on the escaping half-line."""
        mu = Fraction(mu)
        return SplitVector(tuple(-mu * h for h in self.x0.head), mu * self.c)

    def validate(self) -> bool:
        return 0 <= self.c < 1 and all(e.valid(self.c) for e in self.entries)

    def sample_hits(self, mus: Sequence) -> int:
        """Count ``(mu, contact)`` pairs with ``mu (-x0[<n], c) + x_i`` in ``K``."""
        K = DoubleCone(self.n)
        hits = 0
        for mu in mus:
            p = self.direction(mu)
            for e in self.entries:
                if member(K, p + e.contact):
                    hits += 1
        return hits


def doublecone_refute_iv(contacts: Sequence, x0) -> RefutationTranscript:
    """Finitely many contact translates ``K - x_i`` miss the half-line
    ``{mu (-x0[<n], c) : mu > 0}`` from the centre."""
    x0 = _vec(x0)
    xs = [_vec(x) for x in contacts]
    n = x0.dim
    if any(x.dim != n for x in xs):
        raise DimensionMismatch("contacts of mixed dimension")
    if not _is_equator(x0):
        raise InvalidInput("x0 must be a rational equator point")
    if any(x == x0 for x in xs):
        raise InvalidInput("x0 coincides with a contact")
    for x in xs:
        if not (_is_pole(x) or _is_equator(x)):
            raise InvalidInput(f"{x.coords} is not a contact point")
    ips = [sum((a * b for a, b in zip(x0.head, x.head)), Fraction(0)) for x in xs if not _is_pole(x)]
    c = max(ips + [Fraction(0)])
    tr = RefutationTranscript(n, x0, c)
    for x in xs:
        if _is_pole(x):
            tr.entries.append(RefutationEntry(x, 1))
        else:
            ip = sum((a * b for a, b in zip(x0.head, x.head)), Fraction(0))
            tr.entries.append(RefutationEntry(x, 2, ip, (1 - c * c, 2 * (c - ip))))
    return tr
