"""Hot integer kernels, compiled with numba unless ``HAMPOWER_NO_NUMBA`` is set.

Each kernel is written once as plain Python over numpy arrays. ``pure`` holds the
interpreted originals (used by the benchmark); the module-level names are the
compiled versions when numba is enabled and importable.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

_DISABLED = os.environ.get("HAMPOWER_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False


# ---------------------------------------------------------------- max-flow

def _dinic(n_nodes, eu, ev, ecap, s, t):
    """Maximum s-t flow; arcs given as (eu[i] -> ev[i], ecap[i]), all int64."""
    n_arcs = 2 * eu.shape[0]
    head = np.full(n_nodes, -1, np.int64)
    nxt = np.empty(n_arcs, np.int64)
    to = np.empty(n_arcs, np.int64)
    cap = np.empty(n_arcs, np.int64)
    for i in range(eu.shape[0]):
        a = 2 * i
        to[a] = ev[i]
        cap[a] = ecap[i]
        nxt[a] = head[eu[i]]
        head[eu[i]] = a
        to[a + 1] = eu[i]
        cap[a + 1] = 0
        nxt[a + 1] = head[ev[i]]
        head[ev[i]] = a + 1
    level = np.empty(n_nodes, np.int64)
    it = np.empty(n_nodes, np.int64)
    queue = np.empty(n_nodes, np.int64)
    stack = np.empty(n_nodes, np.int64)
    path = np.empty(n_nodes, np.int64)
    flow = 0
    while True:
        level[:] = -1
        level[s] = 0
        qh, qt = 0, 1
        queue[0] = s
        while qh < qt:
            x = queue[qh]
            qh += 1
            a = head[x]
            while a != -1:
                if cap[a] > 0 and level[to[a]] < 0:
                    level[to[a]] = level[x] + 1
                    queue[qt] = to[a]
                    qt += 1
                a = nxt[a]
        if level[t] < 0:
            return flow
        for x in range(n_nodes):
            it[x] = head[x]
        # iterative blocking-flow search along level graph
        while True:
            depth = 0
            stack[0] = s
            found = False
            while depth >= 0:
                x = stack[depth]
                if x == t:
                    found = True
                    break
                advanced = False
                while it[x] != -1:
                    a = it[x]
                    y = to[a]
                    if cap[a] > 0 and level[y] == level[x] + 1:
                        path[depth] = a
                        depth += 1
                        stack[depth] = y
                        advanced = True
                        break
                    it[x] = nxt[a]
                if not advanced:
                    level[x] = -1
                    depth -= 1
                    if depth >= 0:
                        it[stack[depth]] = nxt[it[stack[depth]]]
            if not found:
                break
            push = cap[path[0]]
            for j in range(1, depth):
                if cap[path[j]] < push:
                    push = cap[path[j]]
            for j in range(depth):
                cap[path[j]] -= push
                cap[path[j] ^ 1] += push
            flow += push


# ------------------------------------------------------- partition search

def _min_partition(L, m, k, suffix_lb, upper):
    """Branch and bound over canonical labelings of P_L^m into k+1 classes.

    ``suffix_lb[r]`` lower-bounds the cost among the last r positions alone;
    ``upper`` is any achievable cost. Returns (best, witness, nodes).
    """
    labels = np.zeros(L, np.int64)
    best_lab = np.zeros(L, np.int64)
    cost = np.zeros(L + 1, np.int64)
    nxt_c = np.zeros(L, np.int64)
    maxc = np.zeros(L + 1, np.int64)
    best = upper + 1
    nodes = 0
    if L == 0:
        return 0, best_lab, 1
    # position 0 is class 0 by canonical symmetry
    labels[0] = 0
    maxc[1] = 0
    i = 1
    if L == 1:
        return 0, best_lab, 1
    nxt_c[1] = 0
    while i >= 1:
        c = nxt_c[i]
        lim = maxc[i] + 1
        if lim > k:
            lim = k
        if c > lim:
            i -= 1
            if i >= 1:
                nxt_c[i] += 1
            continue
        nodes += 1
        add = 0
        lo = i - m
        if lo < 0:
            lo = 0
        for j in range(lo, i):
            if labels[j] == c:
                add += 1
        cst = cost[i] + add
        if cst + suffix_lb[L - 1 - i] >= best:
            nxt_c[i] += 1
            continue
        labels[i] = c
        cost[i + 1] = cst
        mc = maxc[i]
        if c > mc:
            mc = c
        maxc[i + 1] = mc
        if i == L - 1:
            best = cst
            for j in range(L):
                best_lab[j] = labels[j]
            nxt_c[i] += 1
            continue
        i += 1
        nxt_c[i] = 0
    if best > upper:
        best = upper
        best_lab[:] = -1
    return best, best_lab, nodes


def _min_deficit(L, m, k, p, q):
    """min over labelings of max_j (q*E_j - p*|V_j|), empty classes counting 0."""
    K = k + 1
    labels = np.zeros(L, np.int64)
    best_lab = np.zeros(L, np.int64)
    E = np.zeros(K, np.int64)
    V = np.zeros(K, np.int64)
    nxt_c = np.zeros(L, np.int64)
    maxc = np.zeros(L + 1, np.int64)
    adds = np.zeros(L, np.int64)
    best = np.int64(1) << np.int64(62)
    nodes = 0
    if L == 0:
        return 0, best_lab, 1
    labels[0] = 0
    V[0] = 1
    maxc[1] = 0
    if L == 1:
        val = -p
        if K > 1:
            val = 0
        return val, best_lab, 1
    i = 1
    nxt_c[1] = 0
    while i >= 1:
        c = nxt_c[i]
        lim = maxc[i] + 1
        if lim > k:
            lim = k
        if c > lim:
            # undo the assignment at i-1
            i -= 1
            if i >= 1:
                cc = labels[i]
                E[cc] -= adds[i]
                V[cc] -= 1
                nxt_c[i] += 1
            continue
        nodes += 1
        add = 0
        lo = i - m
        if lo < 0:
            lo = 0
        for j in range(lo, i):
            if labels[j] == c:
                add += 1
        labels[i] = c
        adds[i] = add
        E[c] += add
        V[c] += 1
        rem = L - 1 - i
        lb = -(np.int64(1) << np.int64(62))
        for j in range(K):
            v = q * E[j] - p * (V[j] + rem)
            if v > lb:
                lb = v
        if lb >= best:
            E[c] -= add
            V[c] -= 1
            nxt_c[i] += 1
            continue
        mc = maxc[i]
        if c > mc:
            mc = c
        maxc[i + 1] = mc
        if i == L - 1:
            val = -(np.int64(1) << np.int64(62))
            for j in range(K):
                v = q * E[j] - p * V[j]
                if v > val:
                    val = v
            if val < best:
                best = val
                for j in range(L):
                    best_lab[j] = labels[j]
            E[c] -= add
            V[c] -= 1
            nxt_c[i] += 1
            continue
        i += 1
        nxt_c[i] = 0
    return best, best_lab, nodes


# ------------------------------------------------------- subset density

def _subset_density(n, adj):
    """Max of e_H/(v_H - 1) over vertex subsets with >= 2 vertices.

    ``adj`` holds neighbour bitmasks. Returns (num, den, mask).
    """
    size = 1 << n
    e = np.zeros(size, np.int64)
    best_num, best_den, best_mask = 0, 1, 0
    for S in range(1, size):
        low = S & (-S)
        v = 0
        while (1 << v) != low:
            v += 1
        rest = S ^ low
        x = adj[v] & rest
        cnt = 0
        while x:
            x &= x - 1
            cnt += 1
        e[S] = e[rest] + cnt
        pc = 0
        y = S
        while y:
            y &= y - 1
            pc += 1
        if pc >= 2 and e[S] * best_den > best_num * (pc - 1):
            best_num = e[S]
            best_den = pc - 1
            best_mask = S
    return best_num, best_den, best_mask


# ---------------------------------------------------- Hamilton power search

def _ham_power(n, adj, m, budget):
    """Backtracking for a cyclic order whose m-th power lies in the graph.

    Vertex 0 is pinned to position 0. Returns (status, order, nodes) with
    status 1 found, 0 absent, -1 budget exhausted.
    """
    order = np.full(n, -1, np.int64)
    cursor = np.zeros(n + 1, np.int64)
    used = np.zeros(n, np.bool_)
    order[0] = 0
    used[0] = True
    nodes = 0
    if n == 1:
        return 1, order, 1
    i = 1
    cursor[1] = 0
    while i >= 1:
        v = cursor[i]
        if v >= n:
            # level exhausted: release position i-1 and advance its cursor
            i -= 1
            if i >= 1:
                used[order[i]] = False
                order[i] = -1
            continue
        cursor[i] = v + 1
        if used[v]:
            continue
        nodes += 1
        if nodes > budget:
            return -1, order, nodes
        ok = True
        lo = i - m
        if lo < 0:
            lo = 0
        for j in range(lo, i):
            if not (adj[v] >> order[j]) & 1:
                ok = False
                break
        if ok:
            wrap = i + m - n
            if wrap > i - 1:
                wrap = i - 1
            for j in range(0, wrap + 1):
                if not (adj[v] >> order[j]) & 1:
                    ok = False
                    break
        if not ok:
            continue
        order[i] = v
        used[v] = True
        if i == n - 1:
            return 1, order, nodes
        i += 1
        cursor[i] = 0
    return 0, order, nodes


pure = SimpleNamespace(
    dinic=_dinic,
    min_partition=_min_partition,
    min_deficit=_min_deficit,
    subset_density=_subset_density,
    ham_power=_ham_power,
)

if NUMBA_ENABLED:
    dinic = njit(cache=True)(_dinic)
    min_partition = njit(cache=True)(_min_partition)
    min_deficit = njit(cache=True)(_min_deficit)
    subset_density = njit(cache=True)(_subset_density)
    ham_power = njit(cache=True)(_ham_power)
else:
    dinic = _dinic
    min_partition = _min_partition
    min_deficit = _min_deficit
    subset_density = _subset_density
    ham_power = _ham_power
