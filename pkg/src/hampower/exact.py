"""Exact rationals and single-radicand quadratic surds.

Rationals are :class:`fractions.Fraction`. A :class:`Surd` is ``a + b*sqrt(d)``
with rational ``a, b`` and a square-free radicand ``d``; ordering between surds
is decided by sign analysis and squaring, never through floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DomainError, UnsupportedComparison

Rational = Fraction
RationalLike = Union[int, Fraction]

LESS, EQUAL, GREATER = -1, 0, 1


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero when ``k > n``."""
    if n < 0 or k < 0:
        raise DomainError(f"binom needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def binom2(y: RationalLike) -> Fraction:
    """``y(y-1)/2`` extended to rational ``y``, truncated to 0 for ``y < 0``."""
    y = Fraction(y)
    if y < 0:
        return Fraction(0)
    return y * (y - 1) / 2


def fmt_rational(q: RationalLike) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


@lru_cache(maxsize=1 << 16)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` square-free."""
    if n < 0:
        raise DomainError("radicand must be nonnegative")
    if n == 0:
        return 0, 1
    s, d = 1, 1
    p = 2
    # trial division up to the cube root; the cofactor then has <= 2 prime factors
    while p * p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(n)
    if r * r == n and n > 1:
        s *= r
    else:
        d *= n
    return s, d


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sign_of(a: Fraction, b: Fraction, d: int) -> int:
    """Exact sign of ``a + b*sqrt(d)`` for square-free ``d``."""
    sa, sb = _sign(a), _sign(b)
    if sb == 0 or d == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


@dataclass(frozen=True)
class Surd:
    """The real number ``a + b*sqrt(d)``; normalized on construction."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self) -> None:
        a, b, d = Fraction(self.a), Fraction(self.b), int(self.d)
        if d < 0:
            raise DomainError("negative radicand")
        if b == 0 or d == 0:
            b, d = Fraction(0), 1
        else:
            s, d = squarefree_split(d)
            b *= s
            if d == 1:
                a, b = a + b, Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, q: RationalLike) -> "Surd":
        """``sqrt(q)`` for a nonnegative rational ``q``."""
        q = Fraction(q)
        if q < 0:
            raise DomainError("sqrt of a negative rational")
        # sqrt(p/r) = sqrt(p*r)/r
        return cls(Fraction(0), Fraction(1, q.denominator), q.numerator * q.denominator)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational(self) -> Fraction:
        if self.b != 0:
            raise DomainError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        return sign_of(self.a, self.b, self.d)

    def _coerce(self, other: object) -> "Surd":
        if isinstance(other, Surd):
            if other.b != 0 and self.b != 0 and other.d != self.d:
                raise UnsupportedComparison(
                    f"radicands {self.d} and {other.d} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return Surd(Fraction(other))
        return NotImplemented  # type: ignore[return-value]

    def _radicand(self, other: "Surd") -> int:
        return self.d if self.b != 0 else other.d

    def __add__(self, other: object) -> "Surd":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Surd(self.a + o.a, self.b + o.b, self._radicand(o))

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other: object) -> "Surd":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Surd":
        return (-self) + other

    def __mul__(self, other: object) -> "Surd":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._radicand(o)
        return Surd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def reciprocal(self) -> "Surd":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("reciprocal of zero")
        return Surd(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other: object) -> "Surd":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other: object) -> "Surd":
        return self.reciprocal() * other

    def cmp(self, other: object) -> int:
        return surd_cmp(self, other)  # type: ignore[arg-type]

    def __lt__(self, other: object) -> bool:
        return surd_cmp(self, other) < 0  # type: ignore[arg-type]

    def __le__(self, other: object) -> bool:
        return surd_cmp(self, other) <= 0  # type: ignore[arg-type]

    def __gt__(self, other: object) -> bool:
        return surd_cmp(self, other) > 0  # type: ignore[arg-type]

    def __ge__(self, other: object) -> bool:
        return surd_cmp(self, other) >= 0  # type: ignore[arg-type]

    def __float__(self) -> float:
        # display only
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        return f"{fmt_rational(self.a)}+{fmt_rational(self.b)}*sqrt({self.d})"

    @classmethod
    def parse(cls, text: str) -> "Surd":
        m = _SURD_RE.fullmatch(text.strip())
        if not m:
            raise DomainError(f"not a surd: {text!r}")
        return cls(parse_rational(m["a"]), parse_rational(m["b"]), int(m["d"]))


_SURD_RE = re.compile(r"(?P<a>-?\d+(?:/\d+)?)\+(?P<b>-?\d+(?:/\d+)?)\*sqrt\((?P<d>\d+)\)")


def as_surd(x: object) -> Surd:
    if isinstance(x, Surd):
        return x
    if isinstance(x, (int, Fraction)):
        return Surd(Fraction(x))
    raise TypeError(f"cannot treat {type(x).__name__} as a surd")


def surd_cmp(u: Surd | RationalLike, v: Surd | RationalLike) -> int:
    """Exact ordering of two values sharing a radicand: -1, 0 or 1."""
    u, v = as_surd(u), as_surd(v)
    if u.b != 0 and v.b != 0 and u.d != v.d:
        raise UnsupportedComparison(f"radicands {u.d} and {v.d} differ")
    d = u.d if u.b != 0 else v.d
    return sign_of(u.a - v.a, u.b - v.b, d)
