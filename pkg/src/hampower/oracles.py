"""Brute-force oracles: exhaustive partitions, subset densities, Hamilton-power search."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

import numpy as np

from . import _kernels
from .calculus import ell_argmin, f_eval
from .errors import DomainError, InternalError, ResourceError
from .graphs import Graph

# enumeration bounds; each can be lifted with override=True
PARTITION_L_LIMIT = {1: 18, 2: 13}
PARTITION_BUDGET = 3 ** 12
DENSITY_N_LIMIT = 20
HAM_N_LIMIT = 62


@dataclass(frozen=True)
class PartitionResult:
    minimum: int
    witness: tuple[int, ...]
    enumerated: int


def partition_cost(labels: Sequence[int], m: int) -> int:
    """sum_j |E(P_L^m[V_j])| for a labelling of the path positions."""
    L = len(labels)
    return sum(1 for i in range(L) for j in range(i + 1, min(L, i + m + 1)) if labels[i] == labels[j])


def _check_bounds(L: int, k: int, override: bool) -> None:
    if L < 0 or k < 1:
        raise DomainError("need L >= 0 and k >= 1")
    if override:
        return
    limit = PARTITION_L_LIMIT.get(k)
    if limit is not None:
        if L > limit:
            raise ResourceError(f"L={L} exceeds the k={k} enumeration bound {limit}; pass override")
    elif L > 0 and (k + 1) ** (L - 1) > PARTITION_BUDGET:
        raise ResourceError(f"(k+1)^(L-1) = {(k + 1) ** (L - 1)} exceeds {PARTITION_BUDGET}; pass override")


def _round_robin(L: int, k: int) -> list[int]:
    return [i % (k + 1) for i in range(L)]


def min_partition_edges(L: int, m: int, k: int, override: bool = False) -> PartitionResult:
    """Exact min over (k+1)-labelings of P_L^m of the within-class edge count."""
    if m < 1:
        raise DomainError("m must be >= 1")
    _check_bounds(L, k, override)
    suffix_lb = np.zeros(L + 1, np.int64)
    result = None
    total_nodes = 0
    # bounds for the last r positions come from the same problem on r vertices
    for r in range(1, L + 1):
        upper = partition_cost(_round_robin(r, k), m)
        best, lab, nodes = _kernels.min_partition(r, m, k, suffix_lb, upper)
        total_nodes += int(nodes)
        if lab[0] < 0:
            lab = np.asarray(_round_robin(r, k), np.int64)
        suffix_lb[r] = best
        result = (int(best), tuple(int(x) for x in lab))
    if result is None:
        return PartitionResult(0, (), 1)
    best, witness = result
    if partition_cost(witness, m) != best:
        raise InternalError("partition witness does not attain the reported minimum")
    return PartitionResult(best, witness, total_nodes)


def conjecture_deficit(L: int, m: int, k: int, override: bool = False) -> Fraction:
    """min over labelings of max_j (|E(P[V_j])| - f(ell_{k,m})|V_j|); empty classes give 0."""
    _check_bounds(L, k, override)
    fl = f_eval(k, m, ell_argmin(k, m))
    if L == 0:
        return Fraction(0)
    best, _, _ = _kernels.min_deficit(L, m, k, fl.numerator, fl.denominator)
    return Fraction(int(best), fl.denominator)


def exhaustive_density(g: Graph, override: bool = False) -> Fraction:
    """max e_H/(v_H - 1) over all vertex subsets with >= 2 vertices."""
    if g.n < 2:
        raise DomainError("density needs at least two vertices")
    if g.n > DENSITY_N_LIMIT and not override:
        raise ResourceError(f"n={g.n} exceeds the subset-enumeration bound {DENSITY_N_LIMIT}")
    if g.n > HAM_N_LIMIT:
        raise ResourceError("bitmask enumeration supports n <= 62")
    num, den, _ = _kernels.subset_density(g.n, g.bitmasks())
    return Fraction(int(num), int(den))


Status = Literal["found", "absent", "unknown"]


@dataclass(frozen=True)
class HamResult:
    status: Status
    order: Optional[tuple[int, ...]]
    nodes: int


def is_power_cycle_order(g: Graph, order: Sequence[int], m: int) -> bool:
    n = len(order)
    if sorted(order) != list(range(g.n)):
        return False
    for i in range(n):
        for d in range(1, m + 1):
            j = (i + d) % n
            if j != i and not g.has_edge(order[i], order[j]):
                return False
    return True


def find_power_hamilton(g: Graph, m: int, budget: int = 10**6) -> HamResult:
    """Search for a cyclic vertex order whose m-th power is a subgraph of g."""
    if m < 1 or budget < 1:
        raise DomainError("need m >= 1 and budget >= 1")
    n = g.n
    if n == 0:
        return HamResult("absent", None, 0)
    if n > HAM_N_LIMIT:
        raise ResourceError("search supports n <= 62")
    need = min(2 * m, n - 1)
    if g.min_degree() < need:
        return HamResult("absent", None, 0)
    status, order, nodes = _kernels.ham_power(n, g.bitmasks(), m, budget)
    if status == 1:
        found = tuple(int(v) for v in order)
        if not is_power_cycle_order(g, found, m):
            raise InternalError("reported Hamilton-power order fails verification")
        return HamResult("found", found, int(nodes))
    return HamResult("absent" if status == 0 else "unknown", None, int(nodes))
