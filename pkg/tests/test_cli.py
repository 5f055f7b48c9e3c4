import csv
import io
import json
import os
import subprocess
import sys


from hampower.cli import run_command
from hampower.exact import Surd, parse_rational
from hampower.graphs import parse_edgelist, power_cycle

from golden_tables import PARAM_TABLES


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_params():
    code, out, _ = run("params", "--k", "2", "--m", "12")
    doc = json.loads(out)
    assert code == 0 and doc["exponent"] == "5/13"
    assert parse_rational(doc["f_ell"]) == parse_rational("5/2")
    Surd.parse(doc["lambda"])


def test_params_domain_error():
    code, out, err = run("params", "--k", "2", "--m", "2")
    assert code == 1 and out == "" and "m > k" in err


def test_unknown_flag_rejected():
    assert run("params", "--k", "2", "--m", "5", "--bogus")[0] == 1
    assert run("frobnicate")[0] == 1


def test_table_csv():
    code, out, _ = run("table", "--k", "1", "--from", "2", "--to", "10", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [int(r["m"]) for r in rows] == list(range(2, 11))
    for r in rows:
        assert int(r["ell"]) == PARAM_TABLES[1][int(r["m"])][2]


def test_table_markdown_default():
    code, out, _ = run("table", "--k", "3", "--from", "10", "--to", "12")
    assert code == 0 and out.startswith("| m |")


def test_scan():
    code, out, _ = run("scan", "--mode", "rcr", "--k", "2", "--from", "21", "--to", "100")
    assert code == 0 and json.loads(out)["failures"] == [22, 27, 29, 31, 33, 44, 46]


def test_pell():
    code, out, _ = run("pell", "--k", "2", "--count", "2")
    assert json.loads(out)[0] == {"k": 2, "p": 2, "q": 9, "m": 4, "lambda": "2/1+0/1*sqrt(1)"}


def test_graph_constructors(tmp_path):
    code, out, _ = run("cycle", "--n", "9", "--m", "2")
    assert code == 0 and parse_edgelist(out) == power_cycle(9, 2)
    assert parse_edgelist(run("path", "--n", "12", "--m", "3")[1]).num_edges == 30
    assert parse_edgelist(run("braid", "--ell", "4", "--r", "1", "--t", "3")[1]).num_edges == 20
    f = tmp_path / "k2.txt"
    f.write_text("2 1\n0 1\n")
    assert parse_edgelist(run("blowup", str(f), "--ell", "3")[1]).num_edges == 9
    assert run("cycle", "--n", "5", "--m", "3")[0] == 1
    out_file = tmp_path / "p.txt"
    assert run("path", "--n", "5", "--m", "2", "--out", str(out_file)) == (0, "", "")
    assert parse_edgelist(out_file.read_text()).num_edges == 7


def test_decompose():
    doc = json.loads(run("decompose", "--k", "2", "--ell", "3", "--r", "2", "--t", "2")[1])
    assert doc["path_edges"] == 108 == doc["blowup_edges"] + sum(doc["braid_edges"]) and doc["verified"]


def test_rewire(tmp_path):
    order, v0 = tmp_path / "o.txt", tmp_path / "v.txt"
    order.write_text(" ".join(map(str, range(12))))
    v0.write_text("0 1 7 10 11")
    code, out, _ = run("rewire", "--m", "3", "--order", str(order), "--v0", str(v0), "--emit-cert")
    cert = json.loads(out)["certificate"]
    assert code == 0 and cert["before"] == 3 and cert["after"] <= 3 and all(cert["conds"])
    assert set(cert) >= {"before", "after", "conds", "x", "y"}
    v0.write_text("")
    assert run("rewire", "--m", "3", "--order", str(order), "--v0", str(v0))[0] == 1
    assert run("rewire", "--m", "3", "--order", str(tmp_path / "none"), "--v0", str(v0))[0] == 1


def test_slope_and_far_min():
    doc = json.loads(run("slope", "--k", "2", "--m", "17", "--s", "8")[1])
    assert doc["slope"] == "27/7" and doc["certificate"]
    doc = json.loads(run("far-min", "--k", "2", "--m", "13", "--s", "6", "--i", "4")[1])
    assert doc["minimum"] == 2


def test_oracles(tmp_path):
    assert json.loads(run("oracle", "min-partition", "--L", "4", "--m", "3", "--k", "1")[1])["minimum"] == 2
    code, _, err = run("oracle", "min-partition", "--L", "20", "--m", "3", "--k", "1")
    assert code == 2 and "override" in err
    assert run("oracle", "min-partition", "--L", "19", "--m", "2", "--k", "1", "--override-limits")[0] == 0
    f = tmp_path / "b.txt"
    f.write_text(run("braid", "--ell", "3", "--r", "2", "--t", "2")[1])
    doc = json.loads(run("oracle", "density", str(f), "--exhaustive")[1])
    assert doc["max_density"] == doc["exhaustive"] == "9/5"
    f.write_text(run("cycle", "--n", "9", "--m", "2")[1])
    doc = json.loads(run("oracle", "ham-power", str(f), "--m", "2", "--budget", "1000")[1])
    assert doc["status"] == "found"
    f.write_text("3 3\n0 1\n0 1\n1 2\n")
    assert run("oracle", "density", str(f))[0] == 1


def test_lab(tmp_path):
    out = tmp_path / "g.txt"
    assert run("lab", "gnp", "--n", "20", "--p", "1/3", "--seed", "4", "--out", str(out))[0] == 0
    g1 = parse_edgelist(out.read_text())
    assert parse_edgelist(run("lab", "gnp", "--n", "20", "--p", "1/3", "--seed", "4")[1]) == g1
    assert run("lab", "gnp", "--n", "20", "--p", "1/3")[0] == 1
    g = parse_edgelist(run("lab", "gadget", "--n", "6", "--k", "1", "--eps", "1/6")[1])
    assert g.min_degree() >= 4
    doc = json.loads(run("lab", "cliques", "--n", "20", "--s", "3", "--p", "1", "--trials", "2",
                         "--seed", "1", "--threads", "2")[1])
    assert doc["counts"] == [1140, 1140] and doc["expectation"] == "1140/1"
    doc = json.loads(run("lab", "zero", "--k", "2", "--m", "2", "--n", "9", "--p", "0",
                         "--eps", "1/10", "--seed", "1", "--budget", "1000")[1])
    assert doc["verdict"] == "found" and doc["budget"] == 1000


def test_formats_for_records():
    code, out, _ = run("params", "--k", "1", "--m", "5", "--format", "csv")
    (row,) = list(csv.DictReader(io.StringIO(out)))
    assert row["verdict"] == "boundary_tie"
    assert run("params", "--k", "1", "--m", "5", "--format", "markdown")[1].startswith("| k |")


def test_help_exits_zero():
    assert run("--help")[0] == 0


def test_console_entry_point():
    env = dict(os.environ)
    res = subprocess.run([sys.executable, "-m", "hampower.cli", "params", "--k", "3", "--m", "17"],
                         capture_output=True, text=True, env=env)
    assert res.returncode == 0 and json.loads(res.stdout)["exponent"] == "5/13"
    res = subprocess.run([sys.executable, "-m", "hampower.cli", "params", "--k", "0", "--m", "3"],
                         capture_output=True, text=True, env=env)
    assert res.returncode == 1
