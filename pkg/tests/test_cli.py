import io
import json
import subprocess
import sys

import pytest

from kshapes.cli import main


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err, inp=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def lines(text):
    return [json.loads(line) for line in text.splitlines()]


def test_pistols_lists_sp2_with_heights():
    code, out, _ = run(["pistols", "--k", "3"])
    recs = lines(out)
    assert code == 0 and len(recs) == 3
    assert all(r["k"] == 3 and r["height"] == 2 for r in recs)
    code, out, _ = run(["pistols", "--k", "3", "--stats"])
    assert lines(out)[1]["stats"]["max"] == 1


def test_shapes_lists_irreducible_shapes():
    code, out, _ = run(["shapes", "--k", "4", "--stats"])
    recs = lines(out)
    assert code == 0 and len(recs) == 17
    assert {"stats", "sites", "pistol"} <= set(recs[0])


def test_poly_outputs():
    assert run(["poly", "--family", "gandhi", "--k", "2"])[1] == "2*x^3 + x^2\n"
    assert run(["poly", "--family", "genocchi", "--k", "6"])[1] == "2073\n"
    assert run(["poly", "--family", "genocchi", "--k", "6", "--source", "pistols"])[1] == "2073\n"
    code, out, _ = run(["poly", "--family", "dumont-foata", "--k", "3", "--source", "shapes", "--format", "json"])
    assert code == 0 and lines(out)[0]["monomials"][0]["coef"] == "1"
    assert run(["poly", "--family", "gamma", "--k", "2", "--source", "pistols"])[1] == "z*xbar + x*ybar + y*zbar\n"


def test_map_round_trip_and_bad_lines():
    code, out, err = run(["map", "--dir", "varphi", "--k", "6"],
                         '{"height":5,"values":[2,8,4,10,10,6,8,10,10,10]}\n{oops\n[2,4,4,4]\n')
    assert code == 0
    (rec,) = lines(out)
    assert rec["parts"] == [12, 9, 7, 6, 5, 3, 3, 2, 1, 1, 1, 1] and rec["fr_vector"] == [0, 0, 1, 0]
    errors = lines(err)
    assert [e["line"] for e in errors] == [2, 3]
    code, out, _ = run(["map", "--dir", "phi", "--k", "6"], json.dumps({"parts": rec["parts"]}) + "\n")
    assert lines(out)[0]["values"] == [2, 8, 4, 10, 10, 6, 8, 10, 10, 10]


def test_stats_annotates():
    _, out, _ = run(["stats", "--kind", "shape", "--k", "5"], "[4,2,2,1]\n")
    assert lines(out)[0]["stats"]["fr_vector"] == [1, 0, 1]
    _, out, _ = run(["stats", "--kind", "shape", "--k", "3"], "[1,1]\n[4,2,2,1]\n")
    a, b = lines(out)
    assert a["k_shape"] and not a["irreducible"] and "stats" not in a
    assert not b["k_shape"] and not b["irreducible"]
    _, out, _ = run(["stats", "--kind", "pistol", "--k", "5"], "[2,4,4,8,8,6,8,8]\n")
    assert lines(out)[0]["stats"]["sur"] == 2


def test_render():
    _, out, _ = run(["render", "--kind", "shape", "--k", "5"], '{"parts":[4,2,2,1]}\n')
    assert out.startswith("[1]\n[3][1]\n[4][2]\n[7][5][2][1]\n5-boundary:")
    _, out, _ = run(["render", "--kind", "pistol"], "[2,2]\n")
    assert "[*][*]" in out


def test_verify_exit_codes():
    code, out, _ = run(["verify", "--k", "4", "--suite", "all"])
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(["verify", "--k", "3", "--format", "json"])
    assert code == 0 and all(r["status"] != "FAIL" for r in lines(out))


def test_usage_errors():
    assert run(["pistols"])[0] == 2
    assert run(["pistols", "--k", "3", "--nope"])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["shapes", "--k", "2"])[0] == 2
    assert run(["poly", "--family", "gamma", "--k", "2", "--source", "shapes"])[0] == 2
    assert run(["poly", "--family", "gandhi", "--k", "9", "--source", "pistols"])[0] == 2


def test_seed_is_accepted_and_output_is_deterministic():
    a = run(["--seed", "1", "shapes", "--k", "4"])[1]
    b = run(["shapes", "--k", "4", "--seed", "2"])[1]
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kshapes", "poly", "--family", "gandhi", "--k", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2*x^3 + x^2\n"
