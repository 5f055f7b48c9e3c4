"""Command-line entry point: ``hampower <command> [flags]``.

Exit codes: 0 success, 1 domain or usage error, 2 resource bound, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Optional, Sequence

from . import calculus, far, graphs, lab, oracles, tables
from .density import max_density
from .errors import DomainError, HampowerError, InternalError
from .exact import fmt_rational, parse_rational
from .rewire import LabeledPowerPath, rewire

FORMATS = ("markdown", "csv", "json")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise DomainError(f"{self.prog}: {message}")


def _rational(text: str):
    return parse_rational(text)


# ------------------------------------------------------------------ output

def _flat(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _emit_records(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        payload = records[0] if len(records) == 1 else records
        return json.dumps(payload, indent=2) + "\n"
    cols: list[str] = []
    for rec in records:
        cols += [c for c in rec if c not in cols]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for rec in records:
            w.writerow([_flat(rec.get(c)) for c in cols])
        return buf.getvalue()
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    lines += ["| " + " | ".join(_flat(rec.get(c)) for c in cols) + " |" for rec in records]
    return "\n".join(lines) + "\n"


def _write_graph(g: graphs.Graph, out: Optional[str]) -> str:
    text = graphs.format_edgelist(g)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        return ""
    return text


def _read_ints(path: str) -> list[int]:
    with open(path, encoding="utf-8") as fh:
        try:
            return [int(tok) for tok in fh.read().split()]
        except ValueError as exc:
            raise DomainError(f"{path}: expected whitespace-separated integers") from exc


# ------------------------------------------------------------------ commands

def _cmd_params(a) -> str:
    return _emit_records([calculus.profile(a.k, a.m).to_json()], a.format or "json")


def _cmd_table(a) -> str:
    return tables.emit_table(a.k, range(a.lo, a.hi + 1), a.format or "markdown")


def _cmd_scan(a) -> str:
    rows = calculus.scan_inequalities(a.mode, a.k, range(a.lo, a.hi + 1))
    recs = [{"m": r.m, "holds": r.holds, **r.witness} for r in rows]
    if (a.format or "json") == "json":
        failures = [r.m for r in rows if r.holds is False]
        return json.dumps({"mode": calculus.SCAN_ALIASES.get(a.mode, a.mode), "k": a.k,
                           "failures": failures, "rows": recs}, indent=2) + "\n"
    return _emit_records(recs, a.format)


def _cmd_pell(a) -> str:
    sols = calculus.pell_integer_lambdas(a.k, a.count)
    recs = [{"k": a.k, "p": p, "q": q, "m": m, "lambda": str(calculus.lambda_profile(a.k, m)[0])}
            for p, q, m in sols]
    if (a.format or "json") == "json":
        return json.dumps(recs, indent=2) + "\n"
    return _emit_records(recs, a.format)


def _cmd_rewire(a) -> str:
    path = LabeledPowerPath(a.m, tuple(_read_ints(a.order)))
    new_order, part, cert = rewire(path, _read_ints(a.v0))
    if not cert.valid:
        raise InternalError(f"REWIRE certificate failed: {cert.to_json(part)}")
    out = {"m": a.m, "order": list(new_order)}
    if a.emit_cert:
        out["certificate"] = cert.to_json(part)
    return json.dumps(out, indent=2) + "\n"


def _cmd_slope(a) -> str:
    res = far.zero_statement_slope(a.k, a.m, a.s)
    return json.dumps({"k": a.k, "m": a.m, "s": a.s, **res.to_json()}, indent=2) + "\n"


def _cmd_far_min(a) -> str:
    z = far.segment_far_minimum(a.k, a.m, a.s, a.i)
    return _emit_records([{"k": a.k, "m": a.m, "s": a.s, "i": a.i, "minimum": z}], a.format or "json")


def _cmd_oracle(a) -> str:
    fmt = a.format or "json"
    if a.oracle == "min-partition":
        res = oracles.min_partition_edges(a.L, a.m, a.k, override=a.override_limits)
        rec = {"L": a.L, "m": a.m, "k": a.k, "minimum": res.minimum,
               "witness": list(res.witness), "enumerated": res.enumerated}
    elif a.oracle == "density":
        g = graphs.read_edgelist(a.file)
        rec = {"file": a.file, "n": g.n, "edges": g.num_edges,
               "max_density": fmt_rational(max_density(g))}
        if a.exhaustive:
            rec["exhaustive"] = fmt_rational(oracles.exhaustive_density(g, override=a.override_limits))
    else:
        g = graphs.read_edgelist(a.file)
        res = oracles.find_power_hamilton(g, a.m, a.budget)
        rec = {"file": a.file, "m": a.m, "budget": a.budget, "status": res.status,
               "order": None if res.order is None else list(res.order), "nodes": res.nodes}
    return _emit_records([rec], fmt)


def _need_seed(a) -> int:
    if a.seed is None:
        raise DomainError("--seed is required")
    return a.seed


def _cmd_lab(a) -> str:
    fmt = a.format or "json"
    if a.lab == "gnp":
        return _write_graph(lab.gnp(a.n, a.p, _need_seed(a)), a.out)
    if a.lab == "gadget":
        return _write_graph(lab.posa_gadget(lab.GadgetSpec(a.n, a.k, a.eps)), a.out)
    if a.lab == "cliques":
        rep = lab.clique_experiment(a.n, a.s, a.p, a.trials, _need_seed(a), threads=a.threads)
        return _emit_records([rep.to_json()], fmt)
    rep = lab.zero_statement_experiment(a.k, a.m, a.n, a.p, a.eps, _need_seed(a), budget=a.budget)
    return _emit_records([rep], fmt)


def _cmd_graph(a) -> str:
    if a.command == "path":
        g = graphs.power_path(a.n, a.m)
    elif a.command == "cycle":
        g = graphs.power_cycle(a.n, a.m)
    elif a.command == "braid":
        g = graphs.braid(a.ell, a.r, a.t)
    else:
        g = graphs.blow_up(graphs.read_edgelist(a.file), a.ell)
    return _write_graph(g, a.out)


def _cmd_decompose(a) -> str:
    d = graphs.decompose_power_path(a.k, a.ell, a.r, a.t)
    rec = {"k": a.k, "ell": a.ell, "r": a.r, "t": a.t, "n": d.n, "m": d.m,
           "path_edges": graphs.power_path(d.n, d.m).num_edges,
           "blowup_edges": len(d.blowup_edges),
           "braid_edges": [len(s) for s in d.braid_edge_sets],
           "disjoint": d.disjoint, "covers": d.covers, "verified": d.verified}
    return _emit_records([rec], a.format or "json")


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--override-limits", action="store_true")

    p = _Parser(prog="hampower", description="Dirac thresholds for powers of Hamilton cycles.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name: str, fn: Callable, help_: str):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = cmd("params", _cmd_params, "threshold profile of one (k, m)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)

    sp = cmd("table", _cmd_table, "threshold table over a range of m")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--from", dest="lo", type=int, required=True)
    sp.add_argument("--to", dest="hi", type=int, required=True)

    sp = cmd("scan", _cmd_scan, "scan an inequality over a range of m")
    sp.add_argument("--mode", choices=sorted(calculus.SCAN_ALIASES), required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--from", dest="lo", type=int, required=True)
    sp.add_argument("--to", dest="hi", type=int, required=True)

    sp = cmd("pell", _cmd_pell, "m with integral lambda")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--count", type=int, default=3)

    sp = cmd("rewire", _cmd_rewire, "run REWIRE on an order file and a V_0 position file")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--order", required=True)
    sp.add_argument("--v0", required=True)
    sp.add_argument("--emit-cert", action="store_true")

    sp = cmd("slope", _cmd_slope, "slope constant of the small-case edge count")
    for flag in ("--k", "--m", "--s"):
        sp.add_argument(flag, type=int, required=True)

    sp = cmd("far-min", _cmd_far_min, "minimum i-far edges in an (m+1)-segment")
    for flag in ("--k", "--m", "--s", "--i"):
        sp.add_argument(flag, type=int, required=True)

    sp = cmd("oracle", _cmd_oracle, "brute-force oracles")
    osub = sp.add_subparsers(dest="oracle", required=True, parser_class=_Parser)
    op = osub.add_parser("min-partition", parents=[common])
    for flag in ("--L", "--m", "--k"):
        op.add_argument(flag, type=int, required=True)
    op = osub.add_parser("density", parents=[common])
    op.add_argument("file")
    op.add_argument("--exhaustive", action="store_true")
    op = osub.add_parser("ham-power", parents=[common])
    op.add_argument("file")
    op.add_argument("--m", type=int, required=True)
    op.add_argument("--budget", type=int, default=10**6)

    sp = cmd("lab", _cmd_lab, "seeded random experiments")
    lsub = sp.add_subparsers(dest="lab", required=True, parser_class=_Parser)
    lp = lsub.add_parser("gnp", parents=[common])
    lp.add_argument("--n", type=int, required=True)
    lp.add_argument("--p", type=_rational, required=True)
    lp.add_argument("--out")
    lp = lsub.add_parser("gadget", parents=[common])
    lp.add_argument("--n", type=int, required=True)
    lp.add_argument("--k", type=int, required=True)
    lp.add_argument("--eps", type=_rational, required=True)
    lp.add_argument("--out")
    lp = lsub.add_parser("cliques", parents=[common])
    lp.add_argument("--n", type=int, required=True)
    lp.add_argument("--s", type=int, required=True)
    lp.add_argument("--p", type=_rational, required=True)
    lp.add_argument("--trials", type=int, default=100)
    lp = lsub.add_parser("zero", parents=[common])
    for flag in ("--k", "--m", "--n"):
        lp.add_argument(flag, type=int, required=True)
    lp.add_argument("--p", type=_rational, required=True)
    lp.add_argument("--eps", type=_rational, required=True)
    lp.add_argument("--budget", type=int, default=10**6)

    for name, help_ in (("path", "m-th power of a path"), ("cycle", "m-th power of a cycle")):
        sp = cmd(name, _cmd_graph, help_)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--out")
    sp = cmd("braid", _cmd_graph, "braid graph B(ell, r, t)")
    for flag in ("--ell", "--r", "--t"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--out")
    sp = cmd("blowup", _cmd_graph, "blow every vertex of an edge-list graph up to ell vertices")
    sp.add_argument("file")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--out")

    sp = cmd("decompose", _cmd_decompose, "split P_n^m into a blow-up and k+1 braids")
    for flag in ("--k", "--ell", "--r", "--t"):
        sp.add_argument(flag, type=int, required=True)
    return p


def run_command(argv: Sequence[str], out=None, err=None) -> int:
    """Parse and execute; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        if args.threads < 1:
            raise DomainError("--threads must be >= 1")
        out.write(args.fn(args))
        return 0
    except HampowerError as exc:
        err.write(f"error: {exc}\n")
        return exc.exit_code
    except (OSError, RecursionError) as exc:
        err.write(f"error: {exc}\n")
        return 1 if isinstance(exc, OSError) else 3
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
