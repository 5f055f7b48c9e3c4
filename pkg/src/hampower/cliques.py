"""Exact K_s counts by pivoted Bron-Kerbosch (Pivoter-style succinct clique tree).

Every leaf of the pivoted recursion stands for a clique built from ``held``
vertices plus any subset of the ``pivot`` vertices, so the number of s-cliques
at a leaf is C(pivots, s - held); each clique is represented exactly once.
"""

from __future__ import annotations

import sys
from math import comb

from .errors import DomainError
from .graphs import Graph


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def clique_count(g: Graph, s: int) -> int:
    """Number of copies of K_s in g."""
    if s < 1:
        raise DomainError("clique size must be >= 1")
    if s == 1:
        return g.n
    if s == 2:
        return g.num_edges
    nb = [sum(1 << u for u in g.adj[v]) for v in range(g.n)]
    total = 0

    def rec(P: int, held: int, piv: int) -> None:
        nonlocal total
        if held > s:
            return
        if P == 0:
            if s - held >= 0:
                total += comb(piv, s - held)
            return
        # a leaf can never reach s vertices: prune
        if held + piv + P.bit_count() < s:
            return
        u = max(_bits(P), key=lambda x: (nb[x] & P).bit_count())
        rec(P & nb[u], held, piv + 1)
        P &= ~(1 << u)
        for v in _bits(P & ~nb[u]):
            rec(P & nb[v], held + 1, piv)
            P &= ~(1 << v)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * g.n + 100))
    try:
        rec((1 << g.n) - 1, 0, 0)
    finally:
        sys.setrecursionlimit(limit)
    return total
