"""Exact scalars: rationals plus real cyclotomic number fields.

Coordinates are either :class:`fractions.Fraction` values or elements of
``Q(2 cos(2 pi / L))`` (needed for regular polygons).  Every comparison is
exact: field elements are compared by certified interval evaluation, which
always terminates because a nonzero element has a nonzero value.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

import mpmath
from mpmath import iv

Scalar = Union[int, Fraction, "FieldElement"]


class ParseError(ValueError):
    """Malformed textual input (rationals, shapes, certificates)."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a decimal string into a Fraction."""
    if not isinstance(text, str):
        raise ParseError(f"rational must be a string, got {type(text).__name__}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed rational {text!r}") from exc


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def sgn(x: Scalar) -> int:
    if isinstance(x, (FieldElement, SurdElement)):
        return x.sign()
    return (x > 0) - (x < 0)


def to_float(x: Scalar) -> float:
    return float(x)


def to_mpf(x: Scalar):
    """Value of ``x`` at the current mpmath working precision."""
    if isinstance(x, SurdElement):
        return to_mpf(x.a) + to_mpf(x.b) * mpmath.sqrt(to_mpf(x.d))
    if isinstance(x, FieldElement):
        th = 2 * mpmath.cos(2 * mpmath.pi / x.field.L)
        acc = mpmath.mpf(0)
        for c in reversed(x.coeffs):
            acc = acc * th + mpmath.mpf(c.numerator) / c.denominator
        return acc
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def mpf_to_fraction(x) -> Fraction:
    man, exp = mpmath.mpf(x).man_exp
    return Fraction(int(man)) * Fraction(2) ** int(exp)


def exact_sqrt(x: Scalar):
    """Square root inside the coordinate field, or None if it is not a square there.

    Only rationals are decided; for field elements only 0 is recognized.
    """
    if isinstance(x, FieldElement):
        if x.is_rational():
            return exact_sqrt(x.coeffs[0])
        return None
    x = Fraction(x)
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def sign_surd(a: Scalar, b: Scalar, d: Scalar) -> int:
    """Sign of ``a + b*sqrt(d)`` for ``d >= 0``."""
    sa = sgn(a)
    sb = sgn(b) if sgn(d) != 0 else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    return sa * sgn(a * a - b * b * d)


def sign_biquadratic(a, b, c, e, d1, d2) -> int:
    """Sign of ``a + b*sqrt(d1) + c*sqrt(d2) + e*sqrt(d1)*sqrt(d2)``.

    Written as ``X + sqrt(d2)*Y`` with ``X, Y`` in the extension by ``sqrt(d1)``.
    """
    sx = sign_surd(a, b, d1)
    sy = sign_surd(c, e, d1) if sgn(d2) != 0 else 0
    if sy == 0:
        return sx
    if sx == 0 or sx == sy:
        return sy
    # X^2 - d2*Y^2 = (a^2 + b^2 d1 - d2 (c^2 + e^2 d1)) + sqrt(d1) (2ab - 2 d2 c e)
    rat = a * a + b * b * d1 - d2 * (c * c + e * e * d1)
    irr = 2 * (a * b - d2 * c * e)
    return sx * sign_surd(rat, irr, d1)


@lru_cache(maxsize=None)
def _minimal_polynomial(L: int) -> tuple[int, ...]:
    """Integer minimal polynomial of 2cos(2 pi / L), low degree first, monic."""
    ks = [k for k in range(1, L // 2 + 1) if math.gcd(k, L) == 1 and 2 * k != L]
    if L <= 2:
        ks = [0] if L == 1 else [1]
    with mpmath.workprec(256 + 32 * len(ks)):
        roots = [2 * mpmath.cos(2 * mpmath.pi * k / L) for k in ks]
        poly = [mpmath.mpf(1)]
        for r in roots:
            nxt = [mpmath.mpf(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] += c
                nxt[i] -= r * c
            poly = nxt
        return tuple(int(mpmath.nint(c)) for c in poly)


class NumberField:
    """The real field ``Q(theta)`` with ``theta = 2 cos(2 pi / L)``."""

    _instances: dict[int, "NumberField"] = {}

    def __new__(cls, L: int):
        if L in cls._instances:
            return cls._instances[L]
        self = super().__new__(cls)
        self.L = L
        self.minpoly = _minimal_polynomial(L)
        self.degree = len(self.minpoly) - 1
        self._theta_iv: dict[int, object] = {}
        cls._instances[L] = self
        return self

    def __repr__(self) -> str:
        return f"NumberField(L={self.L}, degree={self.degree})"

    def __reduce__(self):
        return (NumberField, (self.L,))

    def element(self, coeffs: Sequence) -> "FieldElement":
        cs = [Fraction(c) for c in coeffs]
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, self._reduce(cs))

    def theta(self) -> "FieldElement":
        if self.degree == 1:
            return self.element([-self.minpoly[0]])
        return self.element([0, 1])

    def two_cos(self, j: int) -> "FieldElement":
        """``2 cos(2 pi j / L)`` as an element of the field."""
        j %= self.L
        prev, cur = self.element([2]), self.theta()
        if j == 0:
            return prev
        for _ in range(j - 1):
            prev, cur = cur, self.theta() * cur - prev
        return cur

    def _reduce(self, cs: list) -> tuple:
        d = self.degree
        cs = list(cs)
        for k in range(len(cs) - 1, d - 1, -1):
            top = cs[k]
            if top:
                for i in range(d):
                    cs[k - d + i] -= top * self.minpoly[i]
            cs[k] = Fraction(0)
        return tuple(cs[:d])

    def theta_interval(self, prec: int):
        if prec not in self._theta_iv:
            old = iv.prec
            try:
                iv.prec = prec
                self._theta_iv[prec] = 2 * iv.cos(2 * iv.pi / self.L)
            finally:
                iv.prec = old
        return self._theta_iv[prec]


class FieldElement:
    """Element of a :class:`NumberField`, stored as rational coefficients in theta."""

    __slots__ = ("field", "coeffs", "_sign")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._sign = None

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise TypeError("mixing elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, (Fraction(other),) + (Fraction(0),) * (self.field.degree - 1))
        return NotImplemented

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return FieldElement(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero field element")
        d = self.field.degree
        # columns: self * theta^j; solve M x = e_0
        cols = []
        basis = self.field.element([1])
        th = self.field.element([0, 1]) if d > 1 else None
        for j in range(d):
            cols.append((self * basis).coeffs)
            if th is not None:
                basis = basis * th
        m = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for col in range(d):
            piv = next(r for r in range(col, d) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            pv = m[col][col]
            m[col] = [v / pv for v in m[col]]
            for r in range(d):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return FieldElement(self.field, tuple(m[i][d] for i in range(d)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a / other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def sign(self) -> int:
        if self._sign is None:
            self._sign = self._compute_sign()
        return self._sign

    def _compute_sign(self) -> int:
        if not any(self.coeffs):
            return 0
        if self.is_rational():
            return (self.coeffs[0] > 0) - (self.coeffs[0] < 0)
        prec = 64
        while True:
            val = self._interval(prec)
            if val.a > 0:
                return 1
            if val.b < 0:
                return -1
            prec *= 2
            if prec > 1 << 16:
                raise ArithmeticError("sign refinement did not terminate")

    def _interval(self, prec: int):
        old = iv.prec
        try:
            iv.prec = prec
            th = self.field.theta_interval(prec)
            acc = iv.mpf(0)
            for c in reversed(self.coeffs):
                acc = acc * th + iv.mpf(c.numerator) / iv.mpf(c.denominator)
            return acc
        finally:
            iv.prec = old

    def __float__(self) -> float:
        if self.is_rational():
            return float(self.coeffs[0])
        with mpmath.workprec(96):
            th = 2 * mpmath.cos(2 * mpmath.pi / self.field.L)
            acc = mpmath.mpf(0)
            for c in reversed(self.coeffs):
                acc = acc * th + mpmath.mpf(c.numerator) / c.denominator
            return float(acc)

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            if isinstance(other, SurdElement):
                return -(other - self).sign()
            raise TypeError(f"cannot compare FieldElement with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, FieldElement):
            return other.field is self.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.L, self.coeffs))

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = self.field.element([1])
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self) -> str:
        terms = [f"{format_rational(c)}*t^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"<{' + '.join(terms) or '0'} in Q(2cos(2pi/{self.field.L}))>"


def simplify(x: Scalar) -> Scalar:
    """Collapse rational-valued field elements to Fraction."""
    if isinstance(x, FieldElement) and x.is_rational():
        return x.coeffs[0]
    return x


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Simplest rational strictly between ``lo < hi`` (Stern-Brocot descent)."""
    if not lo < hi:
        raise ValueError("empty interval")
    fl = math.floor(lo)
    if fl + 1 < hi:
        return Fraction(fl + 1)
    return _simplest_frac(lo - fl, hi - fl) + fl


def _simplest_frac(lo: Fraction, hi: Fraction) -> Fraction:
    # 0 <= lo < hi <= 1, returns simplest q with lo < q < hi
    if lo == 0 and hi > 0:
        n = math.floor(1 / hi) + 1
        return Fraction(1, n)
    # recurse on reciprocals: lo < q < hi  <=>  1/hi < 1/q < 1/lo
    inv = simplest_between(1 / hi, 1 / lo)
    return 1 / inv


# ---------------------------------------------------------------- surd towers


class SurdTower:
    """``F(sqrt(d_1))(sqrt(d_2))...`` over the coordinate field ``F``.

    Each radicand must be positive and not a square one level down; a
    violation surfaces as ``ZeroDivisionError`` when inverting.
    """

    def __init__(self, radicands: Sequence[Scalar]):
        self.radicands = tuple(radicands)
        for d in self.radicands:
            if sgn(d) <= 0:
                raise ValueError("radicands must be positive")

    def sqrt(self, i: int) -> "SurdElement":
        """``sqrt(d_i)`` as an element of level ``i + 1``."""
        return SurdElement(self, i + 1, 0, 1)


def _level(x) -> int:
    return x.level if isinstance(x, SurdElement) else 0


class SurdElement:
    """``a + b sqrt(d_level)`` with ``a, b`` from lower levels."""

    __slots__ = ("tower", "level", "a", "b")

    def __init__(self, tower: SurdTower, level: int, a, b):
        self.tower, self.level, self.a, self.b = tower, level, a, b

    @property
    def d(self):
        return self.tower.radicands[self.level - 1]

    def _split(self, other):
        """Components of ``other`` at this element's level."""
        if _level(other) == self.level:
            if other.tower is not self.tower:
                raise TypeError("mixing different surd towers")
            return other.a, other.b
        return other, 0

    def _wrap(self, a, b):
        return SurdElement(self.tower, self.level, a, b)

    def __add__(self, other):
        if _level(other) > self.level:
            return other + self
        a, b = self._split(other)
        return self._wrap(self.a + a, self.b + b)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _level(other) > self.level:
            return other * self
        if _level(other) < self.level:
            return self._wrap(self.a * other, self.b * other)
        a, b = self._split(other)
        return self._wrap(self.a * a + self.b * b * self.d, self.a * b + self.b * a)

    __rmul__ = __mul__

    def inverse(self):
        norm = self.a * self.a - self.b * self.b * self.d
        if sgn(norm) == 0:
            raise ZeroDivisionError("zero divisor: radicand is a square")
        return self._wrap(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        if _level(other) < self.level:
            return self._wrap(self.a / other, self.b / other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return other * self.inverse()

    def sign(self) -> int:
        return sign_surd(self.a, self.b, self.d)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        if not isinstance(other, (int, Fraction, FieldElement, SurdElement)):
            return NotImplemented
        return (self - other).sign() == 0

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(float(self.d))

    def __repr__(self):
        return f"({self.a!r} + {self.b!r}*sqrt({self.d!r}))"
