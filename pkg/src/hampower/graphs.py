"""Simple undirected graphs on vertices 0..n-1, and the constructions built on them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np

from .errors import DomainError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], strict: bool = False) -> "Graph":
        if n < 0:
            raise DomainError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"loop at {u}")
            if strict and v in nbrs[u]:
                raise DomainError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(s) for s in self.adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def bitmasks(self) -> np.ndarray:
        """Neighbour sets as int64 bitmasks; requires n <= 62."""
        if self.n > 62:
            raise DomainError("bitmask form needs n <= 62")
        out = np.zeros(self.n, np.int64)
        for v, s in enumerate(self.adj):
            out[v] = sum(1 << u for u in s)
        return out

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(len(vertices), (
            (index[u], index[v]) for u in vertices for v in self.adj[u]
            if v in index and index[u] < index[v]))

    def union(self, other: "Graph") -> "Graph":
        """Edge union of two graphs on the same vertex set."""
        if other.n != self.n:
            raise DomainError("union needs equal vertex counts")
        return Graph(self.n, tuple(a | b for a, b in zip(self.adj, other.adj)))

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and all(a <= b for a, b in zip(self.adj, other.adj))

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges())


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges())
        off += g.n
    return Graph.from_edges(off, edges)


# ------------------------------------------------------------- constructors

def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(*sizes: int) -> Graph:
    owner = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(owner)
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]))


def power_path(n: int, m: int) -> Graph:
    """P_n^m: vertices 0..n-1, u~v iff 0 < |u-v| <= m."""
    if n < 1 or m < 1:
        raise DomainError("power_path needs n >= 1 and m >= 1")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, min(n, u + m + 1))))


def power_cycle(n: int, m: int) -> Graph:
    """C_n^m; needs n >= 2m+1 so that it is simple with m*n edges."""
    if m < 1 or n < 2 * m + 1:
        raise DomainError(f"power_cycle needs n >= 2m+1, got n={n}, m={m}")
    return Graph.from_edges(n, (_norm(u, (u + d) % n) for u in range(n) for d in range(1, m + 1)))


@dataclass(frozen=True)
class BraidSpec:
    ell: int
    r: int
    t: int

    def __post_init__(self) -> None:
        if self.ell < 2 or self.t < 1:
            raise DomainError("braid needs ell >= 2 and t >= 1")
        if not 0 <= self.r <= self.ell:
            raise DomainError(f"braid needs 0 <= r <= ell, got r={self.r}, ell={self.ell}")

    @property
    def num_vertices(self) -> int:
        return self.t * self.ell

    @property
    def num_edges(self) -> int:
        return self.t * self.ell * (self.ell - 1) // 2 + (self.t - 1) * self.r * (self.r + 1) // 2


def braid_edges(ell: int, r: int, t: int) -> list[Edge]:
    """Edges of B(ell, r, t); clique i occupies positions [i*ell, (i+1)*ell)."""
    BraidSpec(ell, r, t)
    out = []
    for i in range(t):
        base = i * ell
        out.extend(combinations(range(base, base + ell), 2))
        if i + 1 < t:
            # v_a (a-th of the last r of clique i) sees u_1..u_a of clique i+1
            for a in range(r):
                v = base + ell - r + a
                out.extend((v, base + ell + b) for b in range(a + 1))
    return out


def braid(ell: int, r: int, t: int) -> Graph:
    spec = BraidSpec(ell, r, t)
    return Graph.from_edges(spec.num_vertices, braid_edges(ell, r, t))


def blow_up(g: Graph, ell: int) -> Graph:
    """Replace vertex v by the independent set {v*ell, ..., v*ell+ell-1}."""
    if ell < 1:
        raise DomainError("blow-up factor must be >= 1")
    return Graph.from_edges(g.n * ell, (
        (u * ell + a, v * ell + b) for u, v in g.edges() for a in range(ell) for b in range(ell)))


@dataclass(frozen=True)
class Decomposition:
    n: int
    m: int
    blowup_edges: frozenset[Edge]
    braid_edge_sets: tuple[frozenset[Edge], ...]
    verified: bool
    disjoint: bool
    covers: bool


def decompose_power_path(k: int, ell: int, r: int, t: int) -> Decomposition:
    """Split P_n^m (m = k*ell + r, n = (k+1)*t*ell) into the ell-blow-up of
    P_{(k+1)t}^k and k+1 braids B(ell, r, t).

    Consecutive ell-blocks of the path play the blow-up classes; block b lies in
    braid b mod (k+1). ``verified`` is true iff the pieces partition E(P_n^m)
    and every braid piece is exactly a relabelled B(ell, r, t).
    """
    if k < 1 or ell < 2 or t < 1 or not 1 <= r <= ell:
        raise DomainError(f"need k >= 1, ell >= 2, t >= 1, 1 <= r <= ell; got {(k, ell, r, t)}")
    m = k * ell + r
    blocks = (k + 1) * t
    n = blocks * ell
    target = power_path(n, m).edge_set()
    skeleton = power_path(blocks, k) if blocks > 1 else Graph(1, (frozenset(),))
    blow = blow_up(skeleton, ell).edge_set()
    pieces = []
    for c in range(k + 1):
        pos = [b * ell + a for b in range(c, blocks, k + 1) for a in range(ell)]
        members = set(pos)
        pieces.append(frozenset(
            e for e in target if e[0] in members and e[1] in members))
    disjoint = all(not (blow & p) for p in pieces) and all(
        not (pieces[i] & pieces[j]) for i in range(k + 1) for j in range(i + 1, k + 1))
    union = blow.union(*pieces)
    covers = target <= union
    exact = union == target
    shape_ok = True
    want = frozenset(braid_edges(ell, r, t))
    for c in range(k + 1):
        # braid vertex j*ell + a <-> path position (c + j(k+1))*ell + a
        back = {}
        for j in range(t):
            for a in range(ell):
                back[(c + j * (k + 1)) * ell + a] = j * ell + a
        image = frozenset(_norm(back[u], back[v]) for u, v in pieces[c])
        shape_ok &= image == want
    return Decomposition(n, m, blow, tuple(pieces), disjoint and exact and shape_ok,
                         disjoint, covers)


# ------------------------------------------------------------------ edge-list IO

def write_edgelist(g: Graph, fh: TextIO) -> None:
    edges = g.edges()
    fh.write(f"{g.n} {len(edges)}\n")
    for u, v in edges:
        fh.write(f"{u} {v}\n")


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise DomainError("edge list must start with 'n e'")
    try:
        n, e = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise DomainError(f"malformed edge list: {exc}") from exc
    if len(pairs) != e:
        raise DomainError(f"header announces {e} edges, found {len(pairs)}")
    for u, v in pairs:
        if not 0 <= u < v < n:
            raise DomainError(f"edge line '{u} {v}' must satisfy 0 <= u < v < n")
    return Graph.from_edges(n, pairs, strict=True)


def read_edgelist(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edgelist(fh.read())
