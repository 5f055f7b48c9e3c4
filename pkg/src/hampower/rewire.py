"""V_0-based run partitions of an m-path and the REWIRE reordering.

Positions are 0-indexed. In a run partition ``T[0] S[1] T[1] ... S[q] T[q]`` the
S-runs lie in V_0 and the T-runs avoid it; ``run_size`` x_i = |S_i| and
y_i = |T_i| (the far-edge counts of the small-case analysis are named
``far_count`` elsewhere to keep the two meanings of x_i apart).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Literal, Optional, Sequence

from .calculus import ell_argmin, f_eval, lambda_profile
from .errors import DomainError, InternalError
from .exact import Surd, surd_cmp

Vertex = Hashable


@dataclass(frozen=True)
class LabeledPowerPath:
    """An m-path given by its traversal order, optionally with class labels."""

    m: int
    order: tuple
    labels: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError("m must be >= 1")
        object.__setattr__(self, "order", tuple(self.order))
        if len(set(self.order)) != len(self.order):
            raise DomainError("order repeats a vertex")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.order):
                raise DomainError("one label per position is required")

    @classmethod
    def identity(cls, L: int, m: int, labels: Optional[Sequence[int]] = None) -> "LabeledPowerPath":
        return cls(m, tuple(range(L)), None if labels is None else tuple(labels))

    @property
    def L(self) -> int:
        return len(self.order)

    def class_positions(self, t: int) -> list[int]:
        if self.labels is None:
            raise DomainError("path carries no class labels")
        return [p for p, c in enumerate(self.labels) if c == t]


@dataclass(frozen=True)
class RunPartition:
    """Segments of vertices: ``T[0..q]`` and ``S[1..q]`` (``S[0]`` is unused)."""

    S: tuple[tuple, ...]
    T: tuple[tuple, ...]

    @property
    def q(self) -> int:
        return len(self.S) - 1

    @property
    def x(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.S[1:])

    @property
    def y(self) -> tuple[int, ...]:
        """|T_1|, ..., |T_q|; |T_0| is ``head``."""
        return tuple(len(t) for t in self.T[1:])

    @property
    def head(self) -> int:
        return len(self.T[0])

    @property
    def runs(self) -> tuple[tuple, ...]:
        out = [self.T[0]]
        for i in range(1, self.q + 1):
            out += [self.S[i], self.T[i]]
        return tuple(out)

    def order(self) -> tuple:
        return tuple(v for run in self.runs for v in run)


def v0_runs(path: LabeledPowerPath, v0: Iterable[int]) -> RunPartition:
    """Maximal-run partition of the order with respect to the position set v0."""
    pos = set(v0)
    if not pos:
        raise DomainError("V_0 must be nonempty")
    if min(pos) < 0 or max(pos) >= path.L:
        raise DomainError("V_0 positions out of range")
    S: list[tuple] = [()]
    T: list[list] = [[]]
    cur: list = []
    for p, v in enumerate(path.order):
        if p in pos:
            cur.append(v)
        else:
            if cur:
                S.append(tuple(cur))
                T.append([])
                cur = []
            T[-1].append(v)
    if cur:
        S.append(tuple(cur))
        T.append([])
    return RunPartition(tuple(S), tuple(tuple(t) for t in T))


def induced_edges_positions(positions: Iterable[int], m: int) -> int:
    """Pairs of the given positions at distance <= m."""
    ps = sorted(set(positions))
    count, lo = 0, 0
    for hi, p in enumerate(ps):
        while p - ps[lo] > m:
            lo += 1
        count += hi - lo
    return count


def induced_edges(path: LabeledPowerPath, s: Iterable[int]) -> int:
    """|E(P[s])| for a set of positions s."""
    return induced_edges_positions(s, path.m)


def _vertex_edges(order: Sequence, members: set, m: int) -> int:
    return induced_edges_positions((p for p, v in enumerate(order) if v in members), m)


def shift(direction: Literal["left", "right"], a: tuple[int, int], b: tuple[int, int],
          h: int, order: Sequence) -> list:
    """SHIFT_RIGHT/SHIFT_LEFT on half-open position segments a = [a0, a1), b = [b0, b1).

    right moves the last min(h, |A|) entries of A to the front of B; left moves
    the first min(h, |B|) entries of B to the end of A.
    """
    (a0, a1), (b0, b1) = a, b
    if not (0 <= a0 <= a1 <= b0 <= b1 <= len(order)):
        raise DomainError("segments must be ordered, disjoint and in range")
    if h < 1:
        raise DomainError("h must be >= 1")
    seq = list(order)
    A, C, B = seq[a0:a1], seq[a1:b0], seq[b0:b1]
    if direction == "right":
        g = min(h, len(A))
        mid = A[:len(A) - g] + C + A[len(A) - g:] + B
    elif direction == "left":
        g = min(h, len(B))
        mid = A + B[:g] + C + B[g:]
    else:
        raise DomainError(f"unknown direction {direction!r}")
    return seq[:a0] + mid + seq[b1:]


@dataclass(frozen=True)
class RewireCertificate:
    edge_count_before: int
    edge_count_after: int
    conditions: tuple[bool, bool, bool, bool]
    iterations: int
    max_y_over_x: Optional[Fraction] = None
    permutation: bool = True

    @property
    def valid(self) -> bool:
        return self.permutation and self.edge_count_after <= self.edge_count_before and all(self.conditions)

    def to_json(self, part: RunPartition) -> dict:
        return {
            "before": self.edge_count_before,
            "after": self.edge_count_after,
            "conds": list(self.conditions),
            "x": list(part.x),
            "y": list(part.y),
            "head": part.head,
            "iterations": self.iterations,
            "valid": self.valid,
        }


def lemma_conditions(x: Sequence[int], y: Sequence[int], m: int) -> tuple[bool, bool, bool, bool]:
    """Run-size conditions (i)-(iv); x, y are 0-based lists of |S_i|, |T_i| for i = 1..q."""
    q = len(x)
    c1 = all(1 <= xi <= m for xi in x)
    c2 = all(0 <= y[i] <= m for i in range(q - 1))
    c3 = all(x[i] + y[i] >= m for i in range(q - 1))
    c4 = all(y[i] + x[i + 1] >= m for i in range(q - 2))
    return c1, c2, c3, c4


class _Runs:
    """Mutable S/T lists for the algorithm; S[0] is a placeholder."""

    def __init__(self, part: RunPartition):
        self.S = [list(s) for s in part.S]
        self.T = [list(t) for t in part.T]

    @property
    def q(self) -> int:
        return len(self.S) - 1

    def shift_right(self, A: list, B: list, h: int) -> None:
        g = min(h, len(A))
        if g:
            B[:0] = A[len(A) - g:]
            del A[len(A) - g:]

    def shift_left(self, A: list, B: list, h: int) -> None:
        g = min(h, len(B))
        A.extend(B[:g])
        del B[:g]

    def freeze(self) -> RunPartition:
        return RunPartition(tuple(tuple(s) for s in self.S), tuple(tuple(t) for t in self.T))


def rewire(path: LabeledPowerPath, v0: Iterable[int]) -> tuple[tuple, RunPartition, RewireCertificate]:
    """Algorithm REWIRE; returns (new order, final run partition, certificate)."""
    v0 = set(v0)
    part = v0_runs(path, v0)
    members = {path.order[p] for p in v0}
    m, L = path.m, path.L
    before = induced_edges(path, v0)
    R = _Runs(part)
    S, T = R.S, R.T
    cap = 10 * L * L
    steps = 0

    def tick() -> None:
        nonlocal steps
        steps += 1
        if steps > cap:
            raise InternalError(f"REWIRE exceeded {cap} steps")

    i = 1
    while i <= R.q:
        tick()
        # (1)
        if len(S[i]) > m:
            if i == R.q:
                S.append([])
                T.append([])
            R.shift_right(S[i], S[i + 1], len(S[i]) - m)
        step = 2
        while step in (2, 3):
            tick()
            if step == 2:
                # (2)
                if len(T[i]) > m and i < R.q:
                    R.shift_right(T[i], T[i + 1], len(T[i]) - m)
                step = 3
                continue
            # (3)
            step = 4
            if len(S[i]) + len(T[i]) < m and i < R.q:
                R.shift_left(S[i], S[i + 1], m - len(S[i]) - len(T[i]))
                if not S[i + 1]:
                    T[i].extend(T[i + 1])
                    del S[i + 1]
                    del T[i + 1]
                    if len(T[i]) > m and i < R.q:
                        step = 2
                    elif i < R.q:
                        step = 3
        # (4)
        while len(T[i]) + len(S[i + 1] if i + 1 <= R.q else []) < m and i < R.q - 1:
            tick()
            R.shift_left(T[i], T[i + 1], m - len(T[i]) - len(S[i + 1]))
            if T[i + 1]:
                break
            S[i + 1].extend(S[i + 2])
            T[i + 1] = T[i + 2]
            del S[i + 2]
            del T[i + 2]
        i += 1

    final = R.freeze()
    new_order = final.order()
    after = _vertex_edges(new_order, members, m)
    x, y = final.x, final.y
    ratios = [Fraction(yi, xi) for xi, yi in zip(x, y) if xi > 0]
    cert = RewireCertificate(
        edge_count_before=before,
        edge_count_after=after,
        conditions=lemma_conditions(x, y, m),
        iterations=steps,
        max_y_over_x=max(ratios) if ratios else None,
        permutation=Counter(new_order) == Counter(path.order),
    )
    if any(v not in members for s in final.S for v in s) or any(v in members for t in final.T for v in t):
        raise InternalError("run partition lost its V_0 structure")
    return new_order, final, cert


# ------------------------------------------------------------- Lemma bounds

BoundVariant = Literal["weak", "pathedges"]


def bound_check(variant: BoundVariant, path: LabeledPowerPath, part, k: int) -> tuple[bool, int, object]:
    """Evaluate one of the two lower bounds on an instance, exactly.

    weak: ``part`` is a V_0 position set with |V_0| >= L/(k+1); checks
    |E(P[V_0])| >= f(lambda_{k,m})|V_0| - m(m+1).
    pathedges: k = 1, ``part`` is a 0/1 labelling (A = label 0); checks
    |E(P[A])| + |E(P[B])| >= f(ell_m)L - 2m^2.
    """
    m, L = path.m, path.L
    if variant == "weak":
        v0 = set(part)
        if not v0 or (k + 1) * len(v0) < L:
            raise DomainError("weak bound needs |V_0| >= L/(k+1)")
        if m < k + 1:
            raise DomainError("weak bound needs m >= k+1")
        lhs = induced_edges(path, v0)
        _, f_lam = lambda_profile(k, m)
        rhs: object = f_lam * len(v0) - m * (m + 1)
        return surd_cmp(Surd(Fraction(lhs)), rhs) >= 0, lhs, rhs
    if variant == "pathedges":
        if k != 1:
            raise DomainError("pathedges bound is stated for k = 1")
        if m < 2:
            raise DomainError("pathedges bound needs m >= 2")
        labels = list(part)
        if len(labels) != L or not set(labels) <= {0, 1}:
            raise DomainError("pathedges needs a 0/1 label per position")
        lhs = sum(induced_edges(path, [p for p, c in enumerate(labels) if c == side]) for side in (0, 1))
        rhs = f_eval(1, m, ell_argmin(1, m)) * L - 2 * m * m
        return lhs >= rhs, lhs, rhs
    raise DomainError(f"unknown bound variant {variant!r}")
