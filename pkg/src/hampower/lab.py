"""Seeded desk-scale experiments: G(n,p), the Posa-Seymour gadget, clique statistics."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy as np

from .calculus import lambda_profile
from .cliques import clique_count
from .errors import DomainError
from .exact import fmt_rational, surd_cmp, Surd
from .graphs import Graph
from .oracles import find_power_hamilton
from .rewire import induced_edges_positions

_BITS = 53


def _threshold(p: Fraction) -> int:
    """ceil(p * 2^53): a 53-bit uniform u is kept iff u < threshold."""
    return -((-p.numerator << _BITS) // p.denominator)


def pair_uniforms(n: int, seed: int, trial: Optional[int] = None) -> np.ndarray:
    """53-bit integers, one per pair (u, v), u < v, in row-major order.

    The Philox stream is keyed by the seed (and trial), so the draw for a pair
    does not depend on p.
    """
    key = [seed] if trial is None else [seed, trial]
    bitgen = np.random.Philox(np.random.SeedSequence(key))
    count = n * (n - 1) // 2
    return bitgen.random_raw(count) >> np.uint64(64 - _BITS)


def gnp(n: int, p, seed: int, trial: Optional[int] = None) -> Graph:
    """Binomial random graph with exact rational p; reproducible from (seed, trial)."""
    p = Fraction(p)
    if not 0 <= p <= 1 or n < 0:
        raise DomainError("need n >= 0 and 0 <= p <= 1")
    if n < 2:
        return Graph.from_edges(n, [])
    u = pair_uniforms(n, seed, trial)
    keep = u < np.uint64(_threshold(p))
    rows, cols = np.triu_indices(n, 1)
    return Graph.from_edges(n, zip(rows[keep].tolist(), cols[keep].tolist()))


@dataclass(frozen=True)
class GadgetSpec:
    n: int
    k: int
    eps: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "eps", Fraction(self.eps))
        if self.k < 1 or self.n < 1 or self.n % (self.k + 1):
            raise DomainError(f"n={self.n} must be a positive multiple of k+1={self.k + 1}")
        if not 0 < self.eps < Fraction(1, self.k + 1):
            raise DomainError("need 0 < eps < 1/(k+1)")
        if self.w_size >= self.class_size:
            raise DomainError("W_i would fill its whole class")

    @property
    def class_size(self) -> int:
        return self.n // (self.k + 1)

    @property
    def w_size(self) -> int:
        return math.ceil(self.eps * self.n)

    def classes(self) -> list[range]:
        u = self.class_size
        return [range(i * u, (i + 1) * u) for i in range(self.k + 1)]

    def w_sets(self) -> list[range]:
        return [range(c.start, c.start + self.w_size) for c in self.classes()]

    def degree_bound(self) -> int:
        """ceil((k/(k+1) + eps) n) - 1."""
        return math.ceil((Fraction(self.k, self.k + 1) + self.eps) * self.n) - 1


def posa_gadget(spec: GadgetSpec) -> Graph:
    """Complete balanced (k+1)-partite graph plus W_i x (U_i minus W_i) in every class."""
    owner = [i for i, c in enumerate(spec.classes()) for _ in c]
    w = spec.w_size
    edges = [(a, b) for a, b in combinations(range(spec.n), 2) if owner[a] != owner[b]]
    for c in spec.classes():
        edges.extend((a, b) for a in range(c.start, c.start + w) for b in range(c.start + w, c.stop))
    g = Graph.from_edges(spec.n, edges)
    if g.min_degree() < spec.degree_bound():
        raise DomainError(
            f"min degree {g.min_degree()} below {spec.degree_bound()}: "
            f"eps={spec.eps} too large for |U_i|={spec.class_size}")
    return g


@dataclass(frozen=True)
class SampleReport:
    seed: int
    n: int
    s: int
    p: Fraction
    trials: int
    counts: tuple[int, ...]
    mean: Fraction
    variance: Fraction
    expectation: Fraction
    within_band: bool

    def to_json(self) -> dict:
        return {
            "seed": self.seed, "n": self.n, "s": self.s, "p": fmt_rational(self.p),
            "trials": self.trials, "counts": list(self.counts),
            "mean": fmt_rational(self.mean), "variance": fmt_rational(self.variance),
            "expectation": fmt_rational(self.expectation),
            "within_3sigma": self.within_band,
            "mean_approx": float(self.mean), "expectation_approx": float(self.expectation),
        }


def expected_cliques(n: int, s: int, p: Fraction) -> Fraction:
    return math.comb(n, s) * Fraction(p) ** math.comb(s, 2)


def clique_experiment(n: int, s: int, p, trials: int, seed: int, threads: int = 1) -> SampleReport:
    """X_s over independent G(n,p) trials against C(n,s) p^C(s,2), with a 3-sigma band."""
    p = Fraction(p)
    if trials < 1 or s < 1:
        raise DomainError("need trials >= 1 and s >= 1")

    def one(t: int) -> int:
        return clique_count(gnp(n, p, seed, t), s)

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            counts = tuple(pool.map(one, range(trials)))
    else:
        counts = tuple(one(t) for t in range(trials))
    mean = Fraction(sum(counts), trials)
    var = (sum((Fraction(c) - mean) ** 2 for c in counts) / (trials - 1)) if trials > 1 else Fraction(0)
    expect = expected_cliques(n, s, p)
    # |mean - E| <= 3 sqrt(var/trials), squared to stay exact
    band = (mean - expect) ** 2 <= 9 * var / trials
    return SampleReport(seed, n, s, p, trials, counts, mean, var, expect, band)


def default_clique_size(n: int, p: Fraction, eps: Fraction) -> int:
    """Smallest s >= 3 with E[X_s] <= eps n."""
    s = 3
    while expected_cliques(n, s, p) > eps * n:
        s += 1
    return s


def _greedy_power_path(g: Graph, m: int, alive: set[int]) -> list[int]:
    best: list[int] = []
    for start in sorted(alive):
        path = [start]
        used = {start}
        while True:
            tail = path[-m:]
            cand = [v for v in sorted(alive - used) if all(g.has_edge(v, u) for u in tail)]
            if not cand:
                break
            path.append(cand[0])
            used.add(cand[0])
        if len(path) > len(best):
            best = path
    return best


def zero_statement_experiment(k: int, m: int, n: int, p, eps, seed: int,
                              budget: int = 10**6, s: Optional[int] = None) -> dict:
    """Gadget plus G(n,p): exact Hamilton-power search for n <= 16, else a proxy."""
    p, eps = Fraction(p), Fraction(eps)
    spec = GadgetSpec(n, k, eps)
    base = posa_gadget(spec)
    rnd = gnp(n, p, seed)
    host = base.union(rnd)
    report: dict = {
        "k": k, "m": m, "n": n, "p": fmt_rational(p), "eps": fmt_rational(eps),
        "seed": seed, "budget": budget, "edges": host.num_edges,
    }
    if n <= 16:
        res = find_power_hamilton(host, m, budget)
        report.update(mode="exact", verdict=res.status, nodes=res.nodes,
                      order=None if res.order is None else list(res.order))
        return report
    s = s or default_clique_size(n, p, eps)
    alive = set(range(n)) - {v for w in spec.w_sets() for v in w}
    removed = 0
    for clique in _cliques_of(rnd, s):
        if all(v in alive for v in clique):
            alive.discard(max(clique))
            removed += 1
    path = _greedy_power_path(host, m, alive)
    owner = {v: i for i, c in enumerate(spec.classes()) for v in c}
    class_edges = []
    lemma_ok = []
    _, f_lam = lambda_profile(k, m) if m > k else (None, None)
    for t in range(k + 1):
        pos = [i for i, v in enumerate(path) if owner[v] == t]
        e = induced_edges_positions(pos, m)
        class_edges.append(e)
        if f_lam is not None and m >= k + 1 and (k + 1) * len(pos) >= len(path) and pos:
            lemma_ok.append(surd_cmp(Surd(Fraction(e)), f_lam * len(pos) - m * (m + 1)) >= 0)
    report.update(mode="proxy", verdict="unknown", s=s, removed_for_cliques=removed,
                  path_length=len(path), class_edges=class_edges, weak_bound_holds=lemma_ok)
    return report


def _cliques_of(g: Graph, s: int):
    """All s-cliques of g as sorted tuples (small graphs only)."""
    out = []

    def grow(clique: list[int], cand: list[int]) -> None:
        if len(clique) == s:
            out.append(tuple(clique))
            return
        for idx, v in enumerate(cand):
            grow(clique + [v], [u for u in cand[idx + 1:] if g.has_edge(u, v)])

    grow([], list(range(g.n)))
    return out
