import itertools
import random
from fractions import Fraction as F

import networkx as nx
import pytest

from hampower.calculus import ell_argmin, f_eval
from hampower.errors import DomainError, ResourceError
from hampower.graphs import Graph, braid, complete, complete_multipartite, disjoint_union, power_cycle
from hampower.oracles import (conjecture_deficit, exhaustive_density, find_power_hamilton,
                              is_power_cycle_order, min_partition_edges, partition_cost)


def brute_partition(L, m, k):
    return min(partition_cost(lab, m) for lab in itertools.product(range(k + 1), repeat=L))


def _class_edges(lab, m, j):
    L = len(lab)
    return sum(1 for a in range(L) for b in range(a + 1, min(L, a + m + 1)) if lab[a] == lab[b] == j)


def brute_deficit(L, m, k):
    fl = f_eval(k, m, ell_argmin(k, m))
    best = None
    for lab in itertools.product(range(k + 1), repeat=L):
        worst = max(_class_edges(lab, m, j) - fl * lab.count(j) if j in lab else F(0)
                    for j in range(k + 1))
        best = worst if best is None else min(best, worst)
    return best


def test_partition_examples():
    assert min_partition_edges(4, 3, 1).minimum == 2
    assert min_partition_edges(10, 3, 1).minimum == 8
    for k in (1, 2, 3):
        for L in range(0, k + 2):
            assert min_partition_edges(L, 3, k).minimum == 0
        assert min_partition_edges(k + 2, k + 1, k).minimum == 1


def test_partition_matches_brute_force():
    for k in (1, 2):
        for m in (1, 2, 3):
            for L in range(0, 9 if k == 1 else 7):
                res = min_partition_edges(L, m, k)
                assert res.minimum == brute_partition(L, m, k)
                assert partition_cost(res.witness, m) == res.minimum


def test_partition_reversal_invariant():
    for L in range(2, 12):
        res = min_partition_edges(L, 3, 1)
        assert partition_cost(res.witness[::-1], 3) == res.minimum


def test_partition_bounds():
    with pytest.raises(ResourceError):
        min_partition_edges(19, 3, 1)
    with pytest.raises(ResourceError):
        min_partition_edges(14, 3, 2)
    assert min_partition_edges(19, 2, 1, override=True).minimum >= 0
    with pytest.raises(DomainError):
        min_partition_edges(5, 0, 1)


def test_lemma_3_3_at_desk_scale():
    for m in range(2, 6):
        fl = f_eval(1, m, ell_argmin(1, m))
        for L in range(1, 17):
            assert min_partition_edges(L, m, 1).minimum >= fl * L - 2 * m * m


def test_deficit_matches_brute_force():
    for k, m in [(1, 2), (1, 3), (2, 3), (2, 4)]:
        for L in range(0, 8 if k == 1 else 6):
            assert conjecture_deficit(L, m, k) == brute_deficit(L, m, k)


def test_deficit_small_and_large():
    assert conjecture_deficit(3, 4, 2) <= 0
    value = conjecture_deficit(12, 4, 2)
    assert isinstance(value, F) and value == 0


def test_deficit_changes_by_at_most_f_per_vertex():
    for k, m in [(1, 2), (1, 3), (2, 3), (2, 5)]:
        fl = f_eval(k, m, ell_argmin(k, m))
        vals = [conjecture_deficit(L, m, k) for L in range(0, 11)]
        assert all(b <= a + fl for a, b in zip(vals, vals[1:]))


def test_exhaustive_density_examples():
    assert exhaustive_density(complete(4)) == 2
    assert exhaustive_density(braid(3, 2, 2)) == F(9, 5)
    assert exhaustive_density(disjoint_union(complete(3), complete(4))) == 2
    with pytest.raises(ResourceError):
        exhaustive_density(complete(21))
    with pytest.raises(DomainError):
        exhaustive_density(Graph.from_edges(1, []))


def test_hamilton_examples():
    assert find_power_hamilton(complete(8), 3).status == "found"
    res = find_power_hamilton(power_cycle(9, 2), 2)
    assert res.status == "found" and is_power_cycle_order(power_cycle(9, 2), res.order, 2)
    assert find_power_hamilton(complete_multipartite(2, 2, 2), 2).status == "found"


def test_hamilton_complete_graphs():
    for n in range(1, 13):
        for m in range(1, n // 2 + 1):
            res = find_power_hamilton(complete(n), m)
            assert res.status == "found"
            assert is_power_cycle_order(complete(n), res.order, m)


def test_hamilton_absent_and_unknown():
    # the 2-power of a Hamilton cycle in K_{3,3} would need triangles
    assert find_power_hamilton(complete_multipartite(3, 3), 2).status == "absent"
    assert find_power_hamilton(power_cycle(11, 2), 3).status == "absent"
    g = Graph.from_edges(12, [(u, v) for u in range(12) for v in range(u + 1, 12) if (u + v) % 5])
    full = find_power_hamilton(g, 3)
    capped = find_power_hamilton(g, 3, budget=1)
    assert capped.nodes <= full.nodes
    if full.nodes > 1:
        assert capped.status in {"unknown", full.status}


def test_hamilton_agrees_with_brute_force():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(3, 7)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.75])
        m = rng.randint(1, 2)
        brute = any(is_power_cycle_order(g, (0,) + p, m) for p in itertools.permutations(range(1, n)))
        res = find_power_hamilton(g, m)
        assert (res.status == "found") == brute
        if brute:
            assert is_power_cycle_order(g, res.order, m)


def test_hamilton_cycle_matches_networkx_for_m1():
    rng = random.Random(19)
    for _ in range(30):
        n = rng.randint(3, 8)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        ng = nx.Graph(g.edges())
        ng.add_nodes_from(range(n))
        cyc = any(len(c) == n for c in nx.simple_cycles(ng)) if ng.number_of_edges() else False
        assert (find_power_hamilton(g, 1).status == "found") == cyc
