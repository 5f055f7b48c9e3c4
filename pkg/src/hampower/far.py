"""Edge suppliers of the small-case 0-statement arguments.

A V_t-pair is i-far when exactly i-1 class-t vertices sit between its ends in
the path order; ``far_count`` is the number of such pairs that are edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import DomainError
from .lp import lexmin_optimal_dual, linprog
from .rewire import LabeledPowerPath


def _class_positions(path: LabeledPowerPath, t: int) -> list[int]:
    return path.class_positions(t)


def classes_ks_free(path: LabeledPowerPath, s: int) -> bool:
    """No class spans a K_s, i.e. no s same-class positions fit in an (m+1)-window."""
    if path.labels is None:
        raise DomainError("path carries no class labels")
    for t in set(path.labels):
        ps = _class_positions(path, t)
        if any(ps[j + s - 1] - ps[j] <= path.m for j in range(len(ps) - s + 1)):
            return False
    return True


def spanning_h_path_check(path: LabeledPowerPath, t: int, s: int, h: int, k: int) -> Optional[bool]:
    """Whether P_t contains its spanning h-path; None when the preconditions fail."""
    if s < 2 or h < 1:
        raise DomainError("need s >= 2 and h >= 1")
    if path.m < k * (s - 1) + h or not classes_ks_free(path, s):
        return None
    ps = _class_positions(path, t)
    return all(ps[j + h] - ps[j] <= path.m for j in range(len(ps) - h))


def q_far_count(path: LabeledPowerPath, t: int, q: int) -> int:
    """Number of q-far class-t pairs that are edges of the m-path."""
    if q < 1:
        raise DomainError("q must be >= 1")
    ps = _class_positions(path, t)
    return sum(1 for j in range(len(ps) - q) if ps[j + q] - ps[j] <= path.m)


def far_count(path: LabeledPowerPath, i: int) -> int:
    """x_i summed over all classes."""
    if path.labels is None:
        raise DomainError("path carries no class labels")
    return sum(q_far_count(path, t, i) for t in set(path.labels))


@lru_cache(maxsize=None)
def segment_far_minimum(k: int, m: int, s: int, i: int) -> int:
    """min over compositions of m+1 into k+1 parts, each <= s-1, of sum max(0, c - i)."""
    if k < 1 or s < 2 or i < 1:
        raise DomainError("need k >= 1, s >= 2, i >= 1")
    parts, total, cap = k + 1, m + 1, s - 1
    if total > parts * cap:
        raise DomainError(f"{total} cannot be split into {parts} parts of size <= {cap}")

    best = None

    def rec(left: int, remaining: int, upper: int, acc: int) -> None:
        # parts are generated in nonincreasing order; the objective is symmetric
        nonlocal best
        if best is not None and acc >= best:
            return
        if remaining == 0:
            if left == 0:
                best = acc
            return
        if left > remaining * upper:
            return
        for c in range(min(upper, left), -1, -1):
            rec(left - c, remaining - 1, c, acc + max(0, c - i))

    rec(total, parts, cap, 0)
    assert best is not None
    return best


def ob_bound(z: int, L: int, m: int, i: int) -> Fraction:
    """x_i >= z(L - m)/(m + 1 - i) when every (m+1)-segment holds z i-far edges."""
    if not 1 <= i <= m:
        raise DomainError(f"need 1 <= i <= m, got i={i}, m={m}")
    return Fraction(z * (L - m), m + 1 - i)


def ob2_check(path: LabeledPowerPath, k: int, s: int, h: int, i: int, j: int) -> tuple[Optional[bool], Fraction, Fraction]:
    """Evaluate L - x_i <= (k+1)i + i/(s+h-i-j) x_j on a labelled instance.

    ``holds`` is None when the instance violates the K_s-free precondition.
    """
    m = path.m
    if m != k * (s - 1) + h:
        raise DomainError(f"need m = k(s-1)+h, got m={m}")
    den = s + h - i - j
    if den <= 0:
        raise DomainError("s + h - i - j must be positive")
    if not (h < i and h < j):
        raise DomainError("need h < i and h < j")
    lhs = Fraction(path.L - far_count(path, i))
    rhs = (k + 1) * i + Fraction(i, den) * far_count(path, j)
    if not classes_ks_free(path, s):
        return None, lhs, rhs
    return lhs <= rhs, lhs, rhs


@dataclass(frozen=True)
class SlopeResult:
    slope: Fraction
    h: int
    variables: tuple[int, ...]
    multipliers: tuple[tuple[str, Fraction], ...]
    x: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "slope": f"{self.slope.numerator}/{self.slope.denominator}",
            "h": self.h,
            "variables": list(self.variables),
            "x": [f"{v.numerator}/{v.denominator}" for v in self.x],
            "certificate": [{"row": name, "multiplier": f"{y.numerator}/{y.denominator}"}
                            for name, y in self.multipliers],
        }


def slope_program(k: int, m: int, s: int):
    """Rows of the homogeneous program in the variables x_i/L, i = h+1..m."""
    h = m - k * (s - 1)
    if k < 1 or s < 2 or h < 1:
        raise DomainError(f"need h = m - k(s-1) >= 1, got h={h}")
    if m + 1 > (k + 1) * (s - 1):
        raise DomainError("no composition of m+1 into parts <= s-1: K_s-free classes impossible")
    idx = list(range(h + 1, m + 1))
    col = {i: c for c, i in enumerate(idx)}
    G, g, names = [], [], []
    for i in idx:
        z = segment_far_minimum(k, m, s, i)
        if z > 0:
            row = [Fraction(0)] * len(idx)
            row[col[i]] = Fraction(1)
            G.append(row)
            g.append(Fraction(z, m + 1 - i))
            names.append(f"segment[{i}]")
    for j in range(h + 2, s - 1):
        if j not in col:
            continue
        row = [Fraction(0)] * len(idx)
        row[col[h + 1]] += 1
        row[col[j]] += Fraction(h + 1, s - 1 - j)
        G.append(row)
        g.append(Fraction(1))
        names.append(f"chain[{h + 1},{j}]")
    return h, idx, G, g, names


def zero_statement_slope(k: int, m: int, s: int) -> SlopeResult:
    """Best L-coefficient c with M >= cL - O(1) from the three edge suppliers."""
    h, idx, G, g, names = slope_program(k, m, s)
    ones = [Fraction(1)] * len(idx)
    if not G:
        return SlopeResult(Fraction(h), h, tuple(idx), (), tuple(Fraction(0) for _ in idx))
    primal = linprog(ones, [(row, ">=", rhs) for row, rhs in zip(G, g)], maximize=False)
    if primal.status != "optimal":
        raise DomainError(f"slope program is {primal.status}")
    opt, y = lexmin_optimal_dual(G, g, ones)
    if opt != primal.value:
        raise DomainError("primal and dual optima disagree")
    return SlopeResult(h + opt, h, tuple(idx), tuple(zip(names, y)), primal.x)
