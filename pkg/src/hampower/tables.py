"""Parameter tables for one k over a range of m, as markdown, csv or json."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Literal, Optional

from .calculus import DiracProfile, profile
from .errors import DomainError
from .exact import fmt_rational

Format = Literal["markdown", "csv", "json"]

COLUMNS = ("m", "r_cr", "ell_cr", "ell", "ell_star", "f_ell", "f_ell_star",
           "verdict", "exponent", "known", "nature", "circled")


def _nature(p: DiracProfile) -> Optional[str]:
    known = p.verdict.proven
    return None if known is None else known.nature


def circled_cells(p: DiracProfile) -> tuple[str, ...]:
    """Cells that determine the proven exponent; empty when nothing is proven."""
    nature = _nature(p)
    if nature == "ordinary":
        return ("ell_cr",) if p.ell_cr is not None else ()
    if nature == "over":
        if p.ell_star is None:
            return ("f_ell",)
        if p.ell == p.ell_star:
            return ("f_ell", "f_ell_star")
        return ("f_ell_star",)
    return ()


def table_rows(k: int, m_range: Iterable[int]) -> list[dict]:
    rows = []
    for m in m_range:
        p = profile(k, m)
        known = p.verdict.proven
        rows.append({
            "m": m,
            "r_cr": p.r_cr,
            "ell_cr": p.ell_cr,
            "ell": p.ell,
            "ell_star": p.ell_star,
            "f_ell": fmt_rational(p.f_ell),
            "f_ell_star": None if p.f_ell_star is None else fmt_rational(p.f_ell_star),
            "verdict": p.verdict.kind,
            "exponent": fmt_rational(p.verdict.exponent),
            "known": None if known is None else fmt_rational(known.reciprocal_exponent),
            "nature": _nature(p),
            "circled": list(circled_cells(p)),
        })
    return rows


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, list):
        return ";".join(value)
    return str(value)


def emit_table(k: int, m_range: Iterable[int], fmt: Format = "markdown") -> str:
    rows = table_rows(k, m_range)
    if fmt == "json":
        return json.dumps({"k": k, "rows": rows}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in rows:
            w.writerow([_cell(r[c]) for c in COLUMNS])
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(COLUMNS) + " |",
                 "|" + "---|" * len(COLUMNS)]
        for r in rows:
            cells = []
            for c in COLUMNS:
                text = _cell(r[c])
                if c in r["circled"]:
                    text = f"({text})"
                cells.append(text)
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    raise DomainError(f"unknown format {fmt!r}")
