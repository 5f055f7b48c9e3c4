"""Exact maximum density m_F = max_H e_H/(v_H - 1) by parametric min-cut.

For gamma = p/q the decision "some H with >= 2 vertices has e_H > gamma(v_H - 1)"
is answered with Goldberg's network: source->v capacity qM, v->sink capacity
qM + 2p - q*deg(v), and capacity q both ways along every edge. A cut with source
side H costs qMn + 2(p|H| - q e_H). The "-1" is absorbed by zeroing the 2p
term of one forced vertex w, one network per w. The optimum has denominator
<= n-1, so it is located on the Stern-Brocot tree with galloping steps.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import DomainError
from .graphs import Graph


class _Network:
    def __init__(self, g: Graph):
        self.g = g
        n = g.n
        self.M = max(1, g.num_edges)
        self.s, self.t = n, n + 1
        edges = g.edges()
        u = [self.s] * n + list(range(n)) + [a for a, _ in edges] + [b for _, b in edges]
        v = list(range(n)) + [self.t] * n + [b for _, b in edges] + [a for a, _ in edges]
        self.eu = np.asarray(u, np.int64)
        self.ev = np.asarray(v, np.int64)
        self.deg = np.asarray([g.degree(x) for x in range(n)], np.int64)
        self.n_edges = len(edges)

    def _cut(self, p: int, q: int, forced: int) -> int:
        n = self.g.n
        qM = q * self.M
        cap = np.empty(self.eu.shape[0], np.int64)
        cap[:n] = qM
        cap[n:2 * n] = qM + 2 * p - q * self.deg
        if forced >= 0:
            cap[n + forced] -= 2 * p
        cap[2 * n:] = q
        return int(_kernels.dinic(n + 2, self.eu, self.ev, cap, self.s, self.t))

    def above(self, gamma: Fraction) -> bool:
        """True iff some H with >= 2 vertices has e_H/(v_H-1) > gamma."""
        p, q = gamma.numerator, gamma.denominator
        base = q * self.M * self.g.n
        if self._cut(p, q, -1) < base:
            return True
        return any(self._cut(p, q, w) < base for w in range(self.g.n) if self.deg[w] > 0)


def max_density(g: Graph) -> Fraction:
    """max over subgraphs H (v_H >= 2) of e_H/(v_H - 1), exact."""
    if g.n < 2 or g.num_edges == 0:
        raise DomainError("max_density needs at least one edge")
    net = _Network(g)
    N = g.n - 1
    # lo < m_F <= hi always; hi = (1, 0) encodes +infinity
    lo, hi = (0, 1), (1, 0)

    def frac(a: tuple[int, int]) -> Fraction:
        return Fraction(a[0], a[1])

    while lo[1] + hi[1] <= N:
        # gallop toward hi: largest j with lo + j*hi still below m_F
        def step_lo(j: int) -> tuple[int, int]:
            return lo[0] + j * hi[0], lo[1] + j * hi[1]

        def step_hi(j: int) -> tuple[int, int]:
            return hi[0] + j * lo[0], hi[1] + j * lo[1]

        if net.above(frac(step_lo(1))):
            j = _gallop(lambda j: step_lo(j)[1] <= N and net.above(frac(step_lo(j))))
            lo = step_lo(j)
        else:
            j = _gallop(lambda j: step_hi(j)[1] <= N and not net.above(frac(step_hi(j))))
            hi = step_hi(j)
    return frac(hi)


def _gallop(ok) -> int:
    """Largest j >= 1 with ok(j), given ok(1) and ok monotone decreasing in j."""
    j = 1
    while ok(2 * j):
        j *= 2
    lo, hi = j, 2 * j  # ok(lo), not ok(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def density(g: Graph) -> Fraction:
    """d_F = e_F/(v_F - 1) of the whole graph."""
    if g.n < 2:
        raise DomainError("density needs at least two vertices")
    return Fraction(g.num_edges, g.n - 1)
