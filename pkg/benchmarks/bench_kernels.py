"""Compiled vs interpreted timings for the integer kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Each case runs once untimed (so compilation is excluded), then the best of N
runs is reported for both variants, together with a check that the outputs agree.
"""

import argparse
import time

import numpy as np

from hampower import _kernels
from hampower.calculus import ell_argmin, f_eval
from hampower.graphs import braid, complete_multipartite
from hampower.lab import gnp
from hampower.oracles import partition_cost


def _best(fn, args, repeat):
    fn(*args)
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def cases():
    L, m, k = 16, 4, 1
    upper = partition_cost([i % 2 for i in range(L)], m)
    yield "min_partition L=16 m=4 k=1", "min_partition", (L, m, k, np.zeros(L + 1, np.int64), upper)
    fl = f_eval(2, 5, ell_argmin(2, 5))
    yield "min_deficit L=9 m=5 k=2", "min_deficit", (9, 5, 2, fl.numerator, fl.denominator)
    g = braid(3, 2, 5)
    yield "subset_density B(3,2,5), n=15", "subset_density", (g.n, g.bitmasks())
    g = complete_multipartite(5, 5, 5)
    yield "ham_power K_{5,5,5}, m=2", "ham_power", (g.n, g.bitmasks(), 2, 10**6)
    g = gnp(300, 1 / 10, seed=1)
    eu = np.array([u for u, _ in g.edges()] + [g.n] * g.n, np.int64)
    ev = np.array([v for _, v in g.edges()] + list(range(g.n)), np.int64)
    cap = np.array([3] * g.num_edges + [5] * g.n, np.int64)
    yield "dinic G(300,1/10)", "dinic", (g.n + 2, eu, ev, cap, g.n, 0)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.NUMBA_ENABLED:
        print("numba disabled (HAMPOWER_NO_NUMBA set or numba missing); both columns are interpreted")
    print(f"{'kernel':34} {'numba [s]':>10} {'pure [s]':>10} {'speedup':>8}  agree")
    for label, name, fn_args in cases():
        t_fast, out_fast = _best(getattr(_kernels, name), fn_args, args.repeat)
        t_pure, out_pure = _best(getattr(_kernels.pure, name), fn_args, 1)
        print(f"{label:34} {t_fast:10.5f} {t_pure:10.5f} {t_pure / t_fast:8.1f}  {_same(out_fast, out_pure)}")


if __name__ == "__main__":
    main()
