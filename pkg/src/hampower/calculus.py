"""Threshold calculus for a pair (k, m): f_{k,m}, lambda, ell, r_cr, ell_cr, ell*.

Every verdict-bearing quantity is a ``Fraction`` or a :class:`~hampower.exact.Surd`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal, Optional

from .errors import DomainError
from .exact import Surd, binom2, fmt_rational, surd_cmp
from .known import OPEN_CASES, KnownResult, known_lookup

Kind = Literal["ordinary_candidate", "over_candidate", "over_no_rcr", "boundary_tie"]


def _check_pair(k: int, m: int) -> None:
    if k < 1 or m <= k:
        raise DomainError(f"need k >= 1 and m > k, got k={k}, m={m}")


def f_eval(k: int, m: int, x: Fraction | int) -> Fraction:
    """f_{k,m}(x) = (C(x,2) + C(m-kx+1,2)) / x, exact.

    The domain is (0, m]; ``x = m`` is admitted because the integer argmin
    runs over {1, ..., m}.
    """
    _check_pair(k, m)
    x = Fraction(x)
    if x <= 0 or x > m:
        raise DomainError(f"f_{{{k},{m}}} is defined on (0, {m}], got {x}")
    return (binom2(x) + binom2(m - k * x + 1)) / x


def lambda_profile(k: int, m: int) -> tuple[Surd, Surd]:
    """The real minimiser lambda_{k,m} and the minimum value f(lambda)."""
    _check_pair(k, m)
    lam = Surd.sqrt(Fraction(m * (m + 1), k * k + 1))
    f_lam = Surd.sqrt((k * k + 1) * (m * m + m)) - Fraction((2 * m + 1) * k, 2) - Fraction(1, 2)
    return lam, f_lam


def _lambda_floor_ceil(k: int, m: int) -> tuple[int, int]:
    num, den = m * (m + 1), k * k + 1
    lo = math.isqrt(num // den)
    hi = lo if lo * lo * den == num else lo + 1
    return lo, hi


def argmin_f(k: int, m: int, xs: Iterable[int]) -> Optional[int]:
    """Smallest x in ``xs`` minimising f_{k,m}; None for an empty range."""
    best, best_val = None, None
    for x in xs:
        v = f_eval(k, m, x)
        if best_val is None or v < best_val:
            best, best_val = x, v
    return best


@lru_cache(maxsize=None)
def ell_argmin(k: int, m: int) -> int:
    """ell_{k,m}: smallest integer minimiser of f over decompositions m = k*ell + r, r >= 0."""
    _check_pair(k, m)
    top = m // k
    lo, hi = _lambda_floor_ceil(k, m)
    # f is convex, so the restricted minimiser is floor/ceil of lambda clipped to top
    cands = sorted({min(max(c, 1), top) for c in (lo, hi)})
    return argmin_f(k, m, cands)  # type: ignore[return-value]


@lru_cache(maxsize=None)
def critical_params(k: int, m: int) -> tuple[Optional[int], Optional[int], Optional[int]]:
    """(r_cr, ell_cr, ell*) or Nones when r_cr does not exist."""
    _check_pair(k, m)
    r_cr = None
    r = 0
    while r <= m and k * r * (r + 1) <= m - r:
        if (m - r) % k == 0:
            r_cr = r
        r += 1
    if r_cr is None:
        return None, None, None
    ell_cr = (m - r_cr) // k
    ell_star = argmin_f(k, m, range(max(r_cr, 1), ell_cr))
    return r_cr, ell_cr, ell_star


@dataclass(frozen=True)
class Classification:
    kind: Kind
    exponent: Fraction
    proven: Optional[KnownResult] = None

    @property
    def circled(self) -> str:
        """Which table cell determines the exponent."""
        return {
            "ordinary_candidate": "ell_cr",
            "over_candidate": "f_ell_star",
            "boundary_tie": "ell_cr=f_ell_star",
            "over_no_rcr": "f_ell",
        }[self.kind]


@dataclass(frozen=True)
class DiracProfile:
    k: int
    m: int
    f_floor: Fraction
    f_ceil: Fraction
    lam: Surd
    f_lambda: Surd
    ell: int
    r_cr: Optional[int]
    ell_cr: Optional[int]
    ell_star: Optional[int]
    f_ell: Fraction
    f_ell_star: Optional[Fraction]
    verdict: Classification

    @property
    def is_open(self) -> bool:
        return (self.k, self.m) in OPEN_CASES

    def to_json(self) -> dict:
        known = self.verdict.proven
        return {
            "k": self.k,
            "m": self.m,
            "r_cr": self.r_cr,
            "ell_cr": self.ell_cr,
            "ell": self.ell,
            "ell_star": self.ell_star,
            "f_ell": fmt_rational(self.f_ell),
            "f_ell_star": None if self.f_ell_star is None else fmt_rational(self.f_ell_star),
            "lambda": str(self.lam),
            "f_lambda": str(self.f_lambda),
            "verdict": self.verdict.kind,
            "exponent": fmt_rational(self.verdict.exponent),
            "known": None if known is None else {
                "reciprocal_exponent": fmt_rational(known.reciprocal_exponent),
                "nature": known.nature,
                "source": known.source,
            },
            "open": self.is_open,
        }


def _classify(k: int, m: int, ell: int, r_cr, ell_cr, ell_star) -> Classification:
    known = known_lookup(k, m)
    if r_cr is None or ell_star is None:
        return Classification("over_no_rcr", 1 / f_eval(k, m, ell), known)
    f_star = f_eval(k, m, ell_star)
    half = Fraction(ell_cr, 2)
    if f_star < half:
        return Classification("over_candidate", 1 / f_star, known)
    if f_star > half:
        return Classification("ordinary_candidate", Fraction(2, ell_cr), known)
    return Classification("boundary_tie", Fraction(2, ell_cr), known)


def classify(k: int, m: int) -> Classification:
    ell = ell_argmin(k, m)
    return _classify(k, m, ell, *critical_params(k, m))


@lru_cache(maxsize=4096)
def profile(k: int, m: int) -> DiracProfile:
    _check_pair(k, m)
    lam, f_lam = lambda_profile(k, m)
    lo, hi = _lambda_floor_ceil(k, m)
    ell = ell_argmin(k, m)
    r_cr, ell_cr, ell_star = critical_params(k, m)
    return DiracProfile(
        k=k, m=m,
        f_floor=f_eval(k, m, max(lo, 1)),
        f_ceil=f_eval(k, m, min(hi, m)),
        lam=lam, f_lambda=f_lam, ell=ell,
        r_cr=r_cr, ell_cr=ell_cr, ell_star=ell_star,
        f_ell=f_eval(k, m, ell),
        f_ell_star=None if ell_star is None else f_eval(k, m, ell_star),
        verdict=_classify(k, m, ell, r_cr, ell_cr, ell_star),
    )


def inequality_24(k: int, m: int) -> Optional[bool]:
    """Whether f(ell*) <= ell_cr/2; None when r_cr does not exist."""
    r_cr, ell_cr, ell_star = critical_params(k, m)
    if r_cr is None or ell_star is None:
        return None
    return f_eval(k, m, ell_star) <= Fraction(ell_cr, 2)


def pell_integer_lambdas(k: int, count: int, search_bound: int = 10**6) -> list[tuple[int, int, int]]:
    """First ``count`` solutions (p, q, m) of q^2 - 4(k^2+1)p^2 = 1, ordered by p.

    Each gives lambda_{k,m} = p with m = (q-1)/2.
    """
    if k < 1 or count < 1:
        raise DomainError("need k >= 1 and count >= 1")
    D = 4 * (k * k + 1)
    p1 = q1 = None
    for p in range(1, search_bound + 1):
        t = 1 + D * p * p
        q = math.isqrt(t)
        if q * q == t:
            p1, q1 = p, q
            break
    if p1 is None:
        raise DomainError(f"no fundamental solution with p <= {search_bound}")
    out = []
    p, q = p1, q1
    for _ in range(count):
        m, rem = divmod(q - 1, 2)
        if rem:
            raise DomainError(f"q={q} even; m not integral")
        out.append((p, q, m))
        q, p = q1 * q + D * p1 * p, p1 * q + q1 * p
    return out


ScanMode = Literal["fact_AD", "fact_diff", "prop_rcr"]


@dataclass(frozen=True)
class ScanRow:
    m: int
    holds: Optional[bool]
    witness: dict


def _scan_ad(k: int, m: int) -> ScanRow:
    ell = ell_argmin(k, m)
    r = m - k * ell
    holds = Fraction(m, k + 1) <= ell < r * (r + 1)
    return ScanRow(m, holds, {"ell": ell, "r": r})


def _scan_diff(k: int, m: int) -> ScanRow:
    _, f_lam = lambda_profile(k, m)
    f_ell = f_eval(k, m, ell_argmin(k, m))
    bound = Fraction(128 * k**5, m**3)
    if f_lam.sign() <= 0:
        return ScanRow(m, False, {"f_lambda": str(f_lam), "reason": "f(lambda) <= 0"})
    gap = f_lam.reciprocal() - 1 / f_ell
    holds = surd_cmp(gap, bound) <= 0
    return ScanRow(m, holds, {"gap": str(gap), "bound": fmt_rational(bound),
                              "gap_approx": float(gap)})


def _scan_rcr(k: int, m: int) -> ScanRow:
    r_cr, ell_cr, ell_star = critical_params(k, m)
    holds = inequality_24(k, m)
    wit = {"r_cr": r_cr, "ell_cr": ell_cr, "ell_star": ell_star}
    if ell_star is not None:
        wit["f_ell_star"] = fmt_rational(f_eval(k, m, ell_star))
    return ScanRow(m, holds, wit)


_SCANS = {"fact_AD": _scan_ad, "fact_diff": _scan_diff, "prop_rcr": _scan_rcr}
SCAN_ALIASES = {"ad": "fact_AD", "diff": "fact_diff", "rcr": "prop_rcr"}


def scan_inequalities(mode: str, k: int, m_range: Iterable[int]) -> list[ScanRow]:
    mode = SCAN_ALIASES.get(mode, mode)
    if mode not in _SCANS:
        raise DomainError(f"unknown scan mode {mode!r}")
    fn = _SCANS[mode]
    rows = []
    for m in m_range:
        _check_pair(k, m)
        rows.append(fn(k, m))
    return rows
