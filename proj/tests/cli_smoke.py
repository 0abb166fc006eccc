"""@file cli_smoke.py
@brief End-to-end checks of the jfock command line: exit codes, reports, kernel tables and transform round trips.

Usage: cli_smoke.py <path-to-jfock> <case>
"""
import csv
import io
import json
import math
import os
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
TMP = tempfile.mkdtemp(prefix="jfock_smoke_")


def run(*args, expect=0):
    p = subprocess.run([EXE, *args], capture_output=True, text=True)
    if p.returncode != expect:
        sys.exit(f"{' '.join(args)}: exit {p.returncode}, expected {expect}\n{p.stderr}")
    return p.stdout


def rows(text):
    return list(csv.DictReader(io.StringIO("".join(l + "\n" for l in text.splitlines() if not l.startswith("#")))))


def write(name, text):
    path = os.path.join(TMP, name)
    with open(path, "w") as f:
        f.write(text)
    return path


def sampled(algebra, radial, decay, f):
    """Quadrature CSV with f(trace) appended as f_re, f_im."""
    table = rows(run("quadrature", "--algebra", algebra, "--radial-order", str(radial), "--decay", str(decay),
                     "--format", "csv"))
    cols = list(table[0].keys())
    out = [",".join(cols + ["f_re", "f_im"])]
    for r in table:
        out.append(",".join([r[c] for c in cols] + [repr(f(float(r["x0"]))), "0"]))
    return write(f"in_{radial}_{decay}.csv", "\n".join(out) + "\n")


def case_verify():
    out = os.path.join(TMP, "report.json")
    run("verify", "--algebra", "minkowski:4", "--no-runtime", "--out", out)
    rep = json.load(open(out))
    checks = rep["checks"]
    assert len(checks) >= 25, len(checks)
    assert all(c["status"] in ("pass", "skip") for c in checks)
    assert sum(c["status"] == "pass" for c in checks) >= 25
    assert all(c["anchor"] for c in checks)
    assert [c["name"] for c in checks] == sorted(c["name"] for c in checks)


def case_reproducible():
    a, b = os.path.join(TMP, "a.json"), os.path.join(TMP, "b.json")
    for path in (a, b):
        run("verify", "--algebra", "symmat:2", "--max-degree", "3", "--no-runtime", "--seed", "9", "--out", path)
    assert open(a).read() == open(b).read()
    names = {c["name"] for c in json.load(open(a))["checks"] if c["status"] == "pass"}
    assert "folding.scalar" in names


def case_usage_errors():
    run("verify", "--algebra", "minkowski:2", expect=2)
    run("verify", "--algebra", "octonion:3", expect=2)
    run("verify", "--config", write("bad.json", '{"algebra": "minkowski:3", "unknown_key": 1}'), expect=2)
    run("verify", "--config", write("bad2.json", '{"tolerances": {"no.such.check": 1e-6}}'), expect=2)
    run("verify", "--no-such-flag", expect=2)


def case_kernels():
    table = rows(run("kernels", "B", "--algebra", "rank1:1", "--from", "0", "--to", "4", "--steps", "5",
                     "--format", "csv"))
    assert float(table[0]["re"]) == 1.0
    assert abs(float(table[1]["re"]) - 2.2795853023360673) < 1e-13
    f = rows(run("kernels", "F", "--algebra", "rank1:1", "--from", "0", "--to", "60", "--steps", "61",
                 "--format", "csv"))
    signs = {math.copysign(1, float(r["re"])) for r in f[1:]}
    assert signs == {1.0, -1.0}
    for algebra in ("rank1:1", "minkowski:3", "symmat:3"):
        heat = rows(run("kernels", "heat", "--algebra", algebra, "--from", "0.5", "--to", "2", "--steps", "4", "--t", "1",
                        "--format", "csv"))
        assert len(heat) == 4 and all(float(r["gamma"]) > 0 for r in heat)
    run("kernels", "heat", "--algebra", "rank1:1", "--from", "0", "--to", "1", "--steps", "2", expect=2)


def case_transform_sb():
    inp = sampled("rank1:5/2", 40, 2.0, lambda x: math.exp(-x))
    out = rows(run("transform", "sb", "--algebra", "rank1:5/2", "--input", inp, "--format", "csv"))
    assert out and all(abs(complex(float(r["f_re"]), float(r["f_im"])) - 1) < 1e-8 for r in out)


def case_inversion_twice():
    inp = sampled("rank1:1", 80, 1.0, lambda x: math.exp(-x) * (1 + 0.5 * x))
    coarse = write("coarse.csv", run("quadrature", "--algebra", "rank1:1", "--radial-order", "24", "--decay", "1",
                                     "--format", "csv"))
    once = write("once.csv", run("transform", "inversion", "--algebra", "rank1:1", "--input", inp, "--points", coarse,
                                 "--format", "csv"))
    pts = write("pts.csv", "x0\n0.25\n1\n2.5\n5\n")
    twice = rows(run("transform", "inversion", "--algebra", "rank1:1", "--input", once, "--points", pts,
                     "--format", "csv"))
    for r in twice:
        x = float(r["x0"])
        assert abs(float(r["f_re"]) - math.exp(-x) * (1 + 0.5 * x)) < 1e-5, r


def case_heat_semigroup():
    inp = sampled("rank1:1", 80, 1.0, lambda x: math.exp(-x))
    coarse = write("coarse_h.csv", run("quadrature", "--algebra", "rank1:1", "--radial-order", "40", "--decay", "1",
                                       "--format", "csv"))
    half = write("half.csv", run("transform", "heat", "--t", "0.5", "--algebra", "rank1:1", "--input", inp,
                                 "--points", coarse, "--format", "csv"))
    pts = write("pts_h.csv", "x0\n0.5\n1\n3\n")
    two = rows(run("transform", "heat", "--t", "0.5", "--algebra", "rank1:1", "--input", half, "--points", pts,
                   "--format", "csv"))
    one = rows(run("transform", "heat", "--t", "1.0", "--algebra", "rank1:1", "--input", inp, "--points", pts,
                   "--format", "csv"))
    for a, b in zip(two, one):
        assert abs(float(a["f_re"]) - float(b["f_re"])) < 1e-6, (a, b)


def case_off_orbit_rows():
    inp = write("off.csv", "x0,x1,x2,weight,f_re,f_im\n1,0.6,0.8,1,1,0\n1,0.1,0.1,1,1,0\n")
    pts = write("off_pts.csv", "x0,x1,x2\n1,0.6,0.8\n1,0.1,0.1\n")
    text = run("transform", "inversion", "--algebra", "minkowski:3", "--input", inp, "--points", pts, "--format", "csv")
    assert "# input row 1" in text
    out = rows(text)
    assert len(out) == 2 and out[0]["error"] == "" and out[1]["error"] != "", out


CASES = {k[5:]: v for k, v in globals().items() if k.startswith("case_")}

if __name__ == "__main__":
    CASES[sys.argv[2]]()
    print("ok", sys.argv[2])
