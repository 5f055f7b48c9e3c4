"""Acceptance criteria 1-12. Each check records one PASS/FAIL line.

The lines are printed in pytest's terminal summary, or directly when this
file is run as a script.
"""

import json
import math
import time
from fractions import Fraction as F

import pytest

from hampower.calculus import (classify, ell_argmin, f_eval, lambda_profile, pell_integer_lambdas,
                               scan_inequalities)
from hampower.density import max_density
from hampower.exact import Surd
from hampower.far import segment_far_minimum, zero_statement_slope
from hampower.graphs import braid, decompose_power_path, power_path
from hampower.lab import GadgetSpec, clique_experiment, gnp, posa_gadget
from hampower.oracles import exhaustive_density, min_partition_edges
from hampower.rewire import LabeledPowerPath, bound_check, rewire
from hampower.tables import emit_table

from golden_tables import NEW_EXPONENTS, PARAM_TABLES
from instances import rewire_instances
from test_far import EXACT_SLOPES, FAR_COUNTS, ORDINARY_SLOPES
from test_lab import GADGET_GRID

LINES: list[str] = []


def report(n: int, ok: bool, detail: str) -> bool:
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    LINES.append(line)
    print(line)
    return ok


class Clock:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.s = time.perf_counter() - self.t0


def _cell(v):
    return None if v is None else F(v)


def check_1() -> bool:
    bad = []
    with Clock() as c:
        for k, table in PARAM_TABLES.items():
            doc = json.loads(emit_table(k, table, "json"))
            for row in doc["rows"]:
                want = table[row["m"]]
                got = (row["r_cr"], row["ell_cr"], row["ell"], row["ell_star"], F(row["f_ell"]),
                       _cell(row["f_ell_star"]), set(row["circled"]))
                bad += [(k, row["m"], i) for i, (g, w) in enumerate(zip(got, want)) if g != w]
    cells = sum(len(t) for t in PARAM_TABLES.values()) * 7
    return report(1, not bad and c.s < 1.0,
                  f"{cells - len(bad)}/{cells} table cells equal, {c.s:.3f}s (< 1s); mismatched (k,m,col): {bad}")


def check_2() -> bool:
    wrong = [(k, m) for (k, m), (exp, _) in NEW_EXPONENTS.items() if classify(k, m).exponent != exp]
    return report(2, not wrong, f"{len(NEW_EXPONENTS) - len(wrong)}/{len(NEW_EXPONENTS)} listed exponents exact; wrong: {wrong}")


def check_3() -> bool:
    with Clock() as c:
        rows = scan_inequalities("prop_rcr", 2, range(15, 101))
    fails = {r.m for r in rows if r.holds is False}
    odd = {m for m in fails if m % 2}
    even = {m for m in fails if m % 2 == 0 and m >= 24}
    rest = {m for m in fails if m >= 21}
    ok = odd == {27, 29, 31, 33} and even == {44, 46} and rest == {22, 27, 29, 31, 33, 44, 46} and c.s < 1.0
    return report(3, ok, f"odd {sorted(odd)}, even>=24 {sorted(even)}, [21,100] {sorted(rest)}, {c.s:.3f}s (< 1s)")


def check_4() -> bool:
    bad, oracle = [], 0
    with Clock() as c:
        for ell in range(2, 7):
            for r in range(ell + 1):
                for t in range(1, 6):
                    g = braid(ell, r, t)
                    if ell >= r * (r + 1):
                        want = F(ell, 2)
                    else:
                        want = F(t * math.comb(ell, 2) + (t - 1) * math.comb(r + 1, 2), t * ell - 1)
                    got = max_density(g)
                    if got != want:
                        bad.append((ell, r, t))
                    if g.n <= 14:
                        oracle += 1
                        if exhaustive_density(g) != got:
                            bad.append((ell, r, t, "oracle"))
    return report(4, not bad and c.s < 60, f"150 braids, {oracle} oracle-confirmed, mismatches {bad}, {c.s:.2f}s (< 60s)")


def check_5() -> bool:
    bad = []
    with Clock() as c:
        for k in range(1, 4):
            for ell in range(2, 5):
                for r in range(1, ell + 1):
                    for t in range(1, 5):
                        if not decompose_power_path(k, ell, r, t).verified:
                            bad.append((k, ell, r, t))
        d = decompose_power_path(2, 3, 2, 2)
        fig = (d.verified and len(d.blowup_edges) == 81 and [len(s) for s in d.braid_edge_sets] == [9, 9, 9]
               and power_path(18, 8).num_edges == 108)
    narrow = all(r < ell - 1 for _, ell, r, _ in bad)
    return report(5, not bad and fig and c.s < 10,
                  f"108 = 81 + 3*9 instance {'ok' if fig else 'broken'}; {108 - len(bad)}/108 grid instances "
                  f"partition exactly; {len(bad)} failures{' all with r < ell-1' if narrow else ''}, {c.s:.2f}s (< 10s)")


def _rewire_pass():
    results = []
    for k, m, L, order, v0 in rewire_instances():
        path = LabeledPowerPath(m, order)
        new, _, cert = rewire(path, v0)
        results.append((k, m, L, order, v0, new, cert))
    return results


_REWIRE_CACHE: dict = {}


def rewire_results():
    if "r" not in _REWIRE_CACHE:
        t0 = time.perf_counter()
        _REWIRE_CACHE["r"] = _rewire_pass()
        _REWIRE_CACHE["s"] = time.perf_counter() - t0
    return _REWIRE_CACHE["r"], _REWIRE_CACHE["s"]


def check_6() -> bool:
    results, secs = rewire_results()
    fails = sum(1 for *_, cert in results if not cert.valid)
    return report(6, fails == 0 and len(results) == 10_000 and secs < 60,
                  f"{len(results)} instances, {fails} certificate failures, {secs:.2f}s (< 60s)")


def check_7() -> bool:
    with Clock() as c:
        results, _ = rewire_results()
        eligible = weak_fail = 0
        for k, m, L, order, v0, new, cert in results:
            if m < k + 1 or (k + 1) * len(v0) < L:
                continue
            eligible += 1
            members = {order[p] for p in v0}
            moved = {p for p, v in enumerate(new) if v in members}
            if not bound_check("weak", LabeledPowerPath(m, order), v0, k)[0]:
                weak_fail += 1
            if not bound_check("weak", LabeledPowerPath(m, new), moved, k)[0]:
                weak_fail += 1
        lemma33 = []
        for m in range(2, 6):
            fl = f_eval(1, m, ell_argmin(1, m))
            for L in range(1, 17):
                if min_partition_edges(L, m, 1).minimum < fl * L - 2 * m * m:
                    lemma33.append((m, L))
    return report(7, weak_fail == 0 and not lemma33 and c.s < 300,
                  f"weak bound on {eligible} eligible instances (before and after REWIRE): {weak_fail} failures; "
                  f"exhaustive k=1, m<=5, L<=16: {len(lemma33)} violations, {c.s:.2f}s (< 300s)")


def check_8() -> bool:
    with Clock() as c:
        exact = {key: zero_statement_slope(*key).slope for key in EXACT_SLOPES}
        ordinary = {key: zero_statement_slope(*key).slope for key in ORDINARY_SLOPES}
    ok = all(exact[key] == v for key, v in EXACT_SLOPES.items()) and all(
        ordinary[key] > v for key, v in ORDINARY_SLOPES.items())
    shown = ", ".join(f"{key}={v}" for key, v in {**exact, **ordinary}.items())
    return report(8, ok and c.s < 5, f"{shown}; {c.s:.2f}s (< 5s)")


def check_9() -> bool:
    with Clock() as c:
        got = {key: segment_far_minimum(*key) for key in FAR_COUNTS}
    wrong = [key for key, v in FAR_COUNTS.items() if got[key] != v]
    return report(9, not wrong and c.s < 1, f"{len(FAR_COUNTS) - len(wrong)}/{len(FAR_COUNTS)} composition counts, {c.s:.3f}s (< 1s)")


def check_10() -> bool:
    k2, k3 = pell_integer_lambdas(2, 3), pell_integer_lambdas(3, 3)
    integral = all(lambda_profile(k, m)[0] == Surd(F(p)) for k, sols in ((2, k2), (3, k3)) for p, _, m in sols)
    ok = (2, 9, 4) in k2 and (3, 19, 9) in k3 and integral
    return report(10, ok, f"k=2 {k2[:2]}, k=3 {k3[:2]}, lambda integral: {integral}")


def check_11() -> bool:
    with Clock() as c:
        ad = {k: [r.m for r in scan_inequalities("ad", k, range(30 * k**3, 30 * k**3 + 301)) if not r.holds]
              for k in (1, 2, 3)}
        diff = {k: [r.m for r in scan_inequalities("diff", k, range(6 * k * k, 2001)) if not r.holds]
                for k in (1, 2, 3, 4)}
        small = {k: [r.m for r in scan_inequalities("diff", k, range(k + 1, 6 * k * k)) if not r.holds]
                 for k in (1, 2, 3, 4)}
    ok = not any(ad.values()) and not any(diff.values()) and c.s < 30
    return report(11, ok, f"ad violations {ad}; diff violations {diff}; reported for m < 6k^2: {small}; {c.s:.2f}s (< 30s)")


def check_12() -> bool:
    p = F(60 ** -0.9).limit_denominator(10**7)
    close = abs(float(p) - 60 ** -0.9) < 1e-6
    rep = clique_experiment(60, 3, p, 200, seed=2024)
    coupled = all(gnp(60, F(1, 10), s).is_subgraph_of(gnp(60, F(1, 5), s)) for s in range(100))
    gadget_ok = all(posa_gadget(GadgetSpec(*cfg)).min_degree() >= GadgetSpec(*cfg).degree_bound()
                    for cfg in GADGET_GRID)
    sd = math.sqrt(float(rep.variance) / rep.trials)
    ok = close and rep.within_band and coupled and gadget_ok
    return report(12, ok, f"mean X_3 {float(rep.mean):.4f} vs {float(rep.expectation):.4f} (3 sigma = {3 * sd:.4f}); "
                          f"100 coupled pairs nested: {coupled}; gadget grid ({len(GADGET_GRID)}) ok: {gadget_ok}")


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9, check_10,
          check_11, check_12]

# The transcribed f(ell*) at k=2, m=16 reads 17/4, which f never takes; the
# computed 25/6 is f at the printed ell* = 6 (see notes/decisions.md).
XFAIL_1 = pytest.mark.xfail(strict=True, reason="one printed table cell contradicts its own column")
# The blow-up joins positions up to (k+1)ell-1 apart, beyond m = k*ell + r when r < ell-1.
XFAIL_5 = pytest.mark.xfail(strict=True, reason="decomposition is an exact partition only when r >= ell-1")


@XFAIL_1
def test_criterion_01_tables():
    assert check_1()


def test_criterion_02_new_exponents():
    assert check_2()


def test_criterion_03_rcr_scan():
    assert check_3()


def test_criterion_04_braid_densities():
    assert check_4()


@XFAIL_5
def test_criterion_05_decomposition():
    assert check_5()


def test_criterion_06_rewire():
    assert check_6()


def test_criterion_07_lemma_bounds():
    assert check_7()


def test_criterion_08_slopes():
    assert check_8()


def test_criterion_09_far_census():
    assert check_9()


def test_criterion_10_pell():
    assert check_10()


def test_criterion_11_inequality_scans():
    assert check_11()


def test_criterion_12_random_lab():
    assert check_12()


if __name__ == "__main__":
    for check in CHECKS:
        check()
