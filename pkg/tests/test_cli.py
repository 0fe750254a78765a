import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from resinterp import Ring, Subscheme, moment_functionals
from resinterp.cli import main, read_conditions_json
from resinterp.matrix import row_span_equal

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def run(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = main(list(argv), out, err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def problem(name):
    return str(PROBLEMS / name)


def write(tmp_path, text):
    p = tmp_path / "p.txt"
    p.write_text(text)
    return str(p)


GOLDEN = [
    (("conditions", "square.txt"), 0, "g(0,0) - g(1,0) - g(0,1) + g(1,1) = 0\n"),
    (("conditions", "collinear.txt"), 0, "1/2*g(0,0) - g(0,1) + 1/2*g(0,2) = 0\n"),
    (("conditions", "square.txt", "--d", "2"), 0, "no conditions; every g has an interpolant of degree <= 2\n"),
    (("conditions", "fat_point.txt"), 0, "-g(0,0) - g_z1(0,0) + g(1,1) = 0\ng_z1(0,0) = 0\n"),
    (("conditions", "hermite.txt"), 0, "g[0,1,2] = 0\n"),
    (("check", "square.txt"), 0, "interpolant exists\n"),
    (("check", "hermite.txt"), 1, "no interpolant: g[0,1,2] = 1 != 0\n"),
    (("check", "hermite.txt", "--d", "2"), 0, "interpolant exists\n"),
    (("check", "fat_point.txt"), 1, "no interpolant: -g(0,0) - g_z1(0,0) + g(1,1) = 2 != 0\n"),
    (("interpolate", "square.txt"), 0, "z1 + z2\n"),
    (("interpolate", "collinear.txt"), 0, "5*z1 + z2\n"),
    (("interpolate", "hermite.txt"), 1, "none\n"),
    (("interpolate", "hermite.txt", "--d", "2"), 0, "z^2\n"),
    (("degree", "square.txt"), 0, "interpolation degree: 2; betti bound: 2; conditions: d=0:3, d=1:1, d=2:0\n"),
    (("degree", "collinear.txt"), 0, "interpolation degree: 2; betti bound: 2; conditions: d=0:3, d=1:1, d=2:0\n"),
    (("degree", "fat_point.txt"), 0, "interpolation degree: 1; betti bound: 1; conditions: d=0:2, d=1:0\n"),
]


@pytest.mark.parametrize("argv, code, expected", GOLDEN, ids=lambda x: " ".join(x) if isinstance(x, tuple) else None)
def test_golden(argv, code, expected):
    cmd, name, *rest = argv
    got_code, out, err = run(cmd, problem(name), *rest)
    assert (got_code, out, err) == (code, expected, "")


def test_stdin():
    text = (PROBLEMS / "square.txt").read_text()
    assert run("interpolate", "-", stdin=text)[:2] == (0, "z1 + z2\n")


def test_json_round_trip():
    code, out, _ = run("conditions", problem("collinear.txt"), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["vars"] == ["z1", "z2"] and doc["d"] == 1
    (rec,) = doc["conditions"]
    assert rec["v_degree"] == 1 and rec["ell"] == 4
    R = Ring(("z1", "z2"))
    X = Subscheme.from_points(R, [(0, 0), (1, 0), (0, 1), (0, 2)])
    rows = read_conditions_json(out)
    assert row_span_equal(rows, [list(m.coords) for m in moment_functionals(X, 1)], X.length)
    weights = {tuple(t["point"]): t["coefficient"] for t in rec["terms"]}
    assert weights == {("0", "0"): "1/2", ("0", "1"): "-1", ("0", "2"): "1/2"}


def test_json_other_commands():
    assert json.loads(run("degree", problem("square.txt"), "--json")[1])["interpolation_degree"] == 2
    assert json.loads(run("interpolate", problem("square.txt"), "--json")[1])["interpolant"] == "z1 + z2"
    doc = json.loads(run("check", problem("hermite.txt"), "--json")[1])
    assert doc["interpolable"] is False


def test_lex_order_changes_basis_not_conditions():
    grevlex = read_conditions_json(run("conditions", problem("collinear.txt"), "--json")[1])
    code, out, _ = run("conditions", problem("collinear.txt"), "--json", "--order", "lex")
    assert code == 0 and len(read_conditions_json(out)) == len(grevlex) == 1
    assert run("conditions", problem("collinear.txt"), "--order", "lex")[1] == (
        "1/2*g(0,0) - g(0,1) + 1/2*g(0,2) = 0\n"
    )


BAD = [
    ("points: (0,0); (1,0)\nbogus: 3\n", "line 2"),
    ("points: (0,0); (1,\n", "line 1"),
    ("vars: z1, z2\nideal: z1 +* z2\n", "line 2"),
    ("ideal: z1\n", "vars"),
    ("points: (0,0)\nhermite: 1, 2\n", "exactly one"),
    ("points: (0,0)\nd: -1\n", "line 2"),
]


@pytest.mark.parametrize("text, fragment", BAD)
def test_parse_errors(tmp_path, text, fragment):
    code, out, err = run("conditions", write(tmp_path, text))
    assert code == 2 and out == ""
    assert err.startswith("error:") and fragment in err


def test_missing_file():
    code, out, err = run("conditions", "/nonexistent/problem.txt")
    assert code == 2 and out == "" and err


SEMANTIC = [
    "vars: z1, z2\nideal: z1*z2\nd: 1\n",  # not zero-dimensional
    "points: (0,0); (1,0)\nvalues: 1\nd: 0\n",  # wrong number of values
    "hermite: 0, 0\nvalues: 1\nd: 0\n",  # missing derivative
    "vars: z1, z2\nideal: z1^2; z2\njets: g(0,0) = 1\nd: 0\n",  # missing jet at a fat point
]


@pytest.mark.parametrize("text", SEMANTIC)
def test_semantic_errors(tmp_path, text):
    code, out, err = run("check", write(tmp_path, text))
    assert code == 3 and out == "" and err.startswith("error:")


def test_missing_function_and_degree(tmp_path):
    assert run("check", write(tmp_path, "points: (0,0)\nd: 0\n"))[0] == 3
    assert run("conditions", write(tmp_path, "points: (0,0)\n"))[0] == 3
    assert run("conditions")[0] == 3


def test_selftest_file():
    code, out, _ = run("selftest", problem("collinear.txt"))
    assert code == 0 and out.endswith("selftest: ok\n")


def test_selftest_corpus():
    code, out, _ = run("selftest", "--count", "12", "--seed", "5")
    assert code == 0
    assert out.splitlines()[-1] == "selftest: 12 instances, 0 mismatches"


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "resinterp.cli", "degree", problem("hermite.txt")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "interpolation degree: 2; betti bound: 2; conditions: d=0:2, d=1:1, d=2:0\n"
