"""Small exact linear programs over Fractions: two-phase tableau simplex, Bland's rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .errors import DomainError, InternalError

Sense = Literal["<=", ">=", "=="]


@dataclass(frozen=True)
class LPResult:
    status: Literal["optimal", "infeasible", "unbounded"]
    value: Optional[Fraction]
    x: Optional[tuple[Fraction, ...]]


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    row = tab[r]
    pv = row[c]
    tab[r] = row = [v / pv for v in row]
    for i, other in enumerate(tab):
        if i != r and other[c] != 0:
            f = other[c]
            tab[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _run(tab: list[list[Fraction]], basis: list[int], n_cols: int, allowed: Sequence[bool]) -> bool:
    """Maximise the objective kept in the last row (stored as reduced costs, negated).

    Returns False when unbounded. Bland's rule: smallest improving column, then
    smallest basis index among tied ratios.
    """
    obj = tab[-1]
    guard = 0
    while True:
        guard += 1
        if guard > 100000:
            raise InternalError("simplex failed to terminate")
        col = next((j for j in range(n_cols) if allowed[j] and obj[j] < 0), None)
        if col is None:
            return True
        best, row = None, None
        for i in range(len(tab) - 1):
            a = tab[i][col]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best, row = ratio, i
        if row is None:
            return False
        _pivot(tab, basis, row, col)
        obj = tab[-1]


def linprog(c: Sequence, rows: Sequence[tuple[Sequence, Sense, object]],
            maximize: bool = True) -> LPResult:
    """Optimise c.x subject to the given rows and x >= 0, exactly."""
    n = len(c)
    c = [Fraction(v) for v in c]
    norm = []
    for coeffs, sense, rhs in rows:
        if len(coeffs) != n:
            raise DomainError("row length does not match the objective")
        a = [Fraction(v) for v in coeffs]
        b = Fraction(rhs)
        if sense not in ("<=", ">=", "=="):
            raise DomainError(f"unknown sense {sense!r}")
        if b < 0:
            a, b = [-v for v in a], -b
            sense = {"<=": ">=", ">=": "<=", "==": "=="}[sense]
        norm.append((a, sense, b))
    n_slack = sum(1 for _, s, _ in norm if s != "==")
    n_art = sum(1 for _, s, _ in norm if s != "<=")
    width = n + n_slack + n_art
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    si, ai = n, n + n_slack
    art_cols = []
    for a, sense, b in norm:
        row = a + [Fraction(0)] * (n_slack + n_art) + [b]
        if sense == "<=":
            row[si] = Fraction(1)
            basis.append(si)
            si += 1
        else:
            if sense == ">=":
                row[si] = Fraction(-1)
                si += 1
            row[ai] = Fraction(1)
            basis.append(ai)
            art_cols.append(ai)
            ai += 1
        tab.append(row)
    # phase 1: maximise -sum(artificials)
    if art_cols:
        obj = [Fraction(0)] * (width + 1)
        for j in art_cols:
            obj[j] = Fraction(1)
        for i, bj in enumerate(basis):
            if bj in art_cols:
                obj = [o - v for o, v in zip(obj, tab[i])]
        tab.append(obj)
        _run(tab, basis, width, [True] * width)
        if tab[-1][-1] != 0:
            return LPResult("infeasible", None, None)
        tab.pop()
        # drive remaining zero-level artificials out of the basis
        for i, bj in enumerate(basis):
            if bj in art_cols:
                col = next((j for j in range(n + n_slack) if tab[i][j] != 0), None)
                if col is not None:
                    _pivot(tab, basis, i, col)
    allowed = [j < n + n_slack for j in range(width)]
    sign = 1 if maximize else -1
    obj = [Fraction(0)] * (width + 1)
    for j in range(n):
        obj[j] = -sign * c[j]
    for i, bj in enumerate(basis):
        if obj[bj] != 0:
            f = obj[bj]
            obj = [o - f * v for o, v in zip(obj, tab[i])]
    tab.append(obj)
    if not _run(tab, basis, width, allowed):
        return LPResult("unbounded", None, None)
    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        if bj < n:
            x[bj] = tab[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", value, tuple(x))


def lexmin_optimal_dual(G: Sequence[Sequence], g: Sequence, cost: Sequence) -> tuple[Fraction, tuple[Fraction, ...]]:
    """For min cost.x s.t. Gx >= g, x >= 0, return (optimum, y) where y is the
    lexicographically smallest optimal dual vector (max g.y, G^T y <= cost, y >= 0).
    """
    rows_n = len(G)
    n = len(cost)
    dual_rows = [([G[i][j] for i in range(rows_n)], "<=", cost[j]) for j in range(n)]
    res = linprog(list(g), dual_rows, maximize=True)
    if res.status != "optimal":
        raise DomainError(f"dual program is {res.status}")
    opt = res.value
    fixed: list[tuple[Sequence, Sense, object]] = list(dual_rows) + [(list(g), ">=", opt)]
    y: list[Fraction] = []
    for idx in range(rows_n):
        unit = [Fraction(int(j == idx)) for j in range(rows_n)]
        r = linprog(unit, fixed, maximize=False)
        if r.status != "optimal":
            raise InternalError("lexicographic refinement lost feasibility")
        y.append(r.value)
        fixed.append((unit, "==", r.value))
    return opt, tuple(y)
