import io
import json
import subprocess
import sys

import pytest

from toric_alpha.cli import COMMANDS, run

SQUARE = {"vertices": [[-1, -1], [1, -1], [1, 1], [-1, 1]]}
TRI = {"vertices": [[1, 0], [0, 1], [-3, -2]]}
P2 = {"rays": [[1, 0], [0, 1], [-1, -1]], "a": ["1", "1", "1"]}


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, json.loads(out.getvalue())


def js(obj):
    return json.dumps(obj)


def test_sixteen_subcommands():
    assert sorted(COMMANDS) == sorted([
        "sylvester", "gamma-point", "dual", "width", "lattice-points", "volume", "lhn-solve",
        "simplex-verify", "census", "toric-alpha", "toric-mld", "toric-check", "product-check",
        "rank1-analyze", "rank1-extremal", "fano-census"])


def test_rank1_extremal():
    code, out = call("rank1-extremal", "--d", "2", "--q", "1")
    assert code == 0
    assert (out["alpha"], out["mld"], out["volumeQScaled"]) == ("1/6", "1", "6")
    code, out = call("rank1-extremal", "--d", "2", "--q", "2")
    assert (out["alpha"], out["mld"], out["volumeQScaled"]) == ("1/21", "1/2", "21")


def test_sylvester():
    code, out = call("sylvester", "--p", "4", "--q", "1")
    assert code == 0 and out["u"] == "42" and out["identities"] == "pass"
    assert out["terms"] == ["2", "3", "7", "43"]
    assert call("sylvester", "--p", "4")[0] == 1


def test_polytope_commands():
    assert call("gamma-point", "--json", js(SQUARE))[1]["gamma"] == "1/2"
    code, out = call("gamma-point", "--json", js({**TRI, "point": ["0", "0"]}))
    assert out["gamma"] == "1/6" and out["asymmetry"] == "5"
    assert call("width", "--json", js({**SQUARE, "direction": [1, 0]}))[1]["width"] == "2"
    assert call("volume", "--json", js(TRI))[1]["normalizedVolume"] == "3"
    out = call("lattice-points", "--json", js({**TRI, "mode": "interior"}))[1]
    assert out["count"] == 1 and out["points"] == [[0, 0]]
    assert call("gamma-point", "--json", js({**TRI, "point": [5, 5]}))[0] == 2


def test_dual_output_reads_back():
    code, out = call("dual", "--json", js(TRI))
    assert code == 0
    assert sorted(out["vertices"]) == [["-1", "-1"], ["-1", "2"], ["1", "-1"]]
    # both the vertex and the halfspace form of the output are accepted again
    back = call("dual", "--json", js({"vertices": out["vertices"]}))[1]
    assert sorted(back["vertices"]) == sorted([[str(x) for x in v] for v in TRI["vertices"]])
    again = call("volume", "--json", js({"halfspaces": out["halfspaces"], "dim": 2}))[1]
    assert again["normalizedVolume"] == "3"


def test_lhn_solve():
    code, out = call("lhn-solve", "--q", "1", "--c", "1,1", "--x", "1/2,7/20")
    assert code == 0 and out["z"] == [1, 1]
    code, out = call("lhn-solve", "--q", "1", "--c", "1,1", "--x", "1/2,1/3")
    assert code == 2 and out["code"] == "extremal-instance"
    code, out = call("lhn-solve", "--q", "1", "--c", "1", "--x", "1/10")
    assert code == 2 and out["code"] == "hypothesis"
    assert call("lhn-solve", "--q", "1", "--x", "1/2")[0] == 1


def test_simplex_verify_and_census():
    out = call("simplex-verify", "--q", "1", "--json", js(TRI))[1]
    assert out["gamma"] == "1/6" and out["equality"] is True
    half = {"vertices": [["1/2", "0"], ["0", "1/2"], ["-3/2", "-1"]]}
    assert call("simplex-verify", "--q", "2", "--json", js(half))[1]["gamma"] == "1/6"
    code, out = call("simplex-verify", "--q", "1", "--json", js({"vertices": [[3, 0], [0, 3], [-3, -3]]}))
    assert code == 2 and out["code"] == "precondition" and out["data"]["point"]
    out = call("census", "--radius", "2")[1]
    assert out["passed"] and out["minGamma"] == "1/6"


def test_toric_commands():
    out = call("toric-alpha", "--json", js(P2))[1]
    assert out["alpha"] == "1/3" and out["widths"] == ["3", "3", "3"]
    out = call("toric-alpha", "--json", js({**P2, "l": [2, 0, 0], "lct": [0, 0, 3]}))[1]
    assert out["alpha"] == "1/2" and out["lct"] == "1/3"
    out = call("toric-mld", "--json", js(P2))[1]
    assert out["mld"] == "1" and out["gammaAnticanonical"] == "1/3"
    out = call("toric-check", "--json", js(P2))[1]
    assert out["passed"] and out["gbAndVb"]["gamma"] == "1/3"
    first = {"rays": [[1], [-1]], "a": [1, 1], "l": [1, 0]}
    second = {"rays": [[1], [-1]], "a": [1, 1], "l": [2, 0]}
    out = call("product-check", "--json", js({"first": first, "second": second}))[1]
    assert out["passed"] and out["values"]["product"] == "1/2"


def test_rank1_analyze():
    data = {"x": ["1/5", "1/5", "3/5"], "a": [1, 1, 1]}
    code, out = call("rank1-analyze", "--json", js(data), "--epsilon", "1")
    assert code == 0 and out["mld"] == "2/3" and out["witness"] == [0, 0, 1]
    assert out["mldAtLeastEpsilon"] is False and out["gammaToric"] == out["alpha"] == "1/5"
    code, out = call("rank1-analyze", "--json", js({"x": ["1/7", "2/7", "4/7"], "a": [1, 1, 1]}))
    assert code == 2 and out["data"]["n"] == [2, 1, 1]


def test_fano_census():
    out = call("fano-census", "--d", "1")[1]
    assert out["passed"] and out["count"] == 1


def test_rank1_file_input(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(js({"x": ["1/6", "1/2", "1/3"], "a": ["1", "1", "1"]}))
    code, out = call("rank1-analyze", "--file", str(path))
    assert code == 0 and out["w"] == ["6", "2", "3"] and out["q"] == 6
    # the emitted x and a are accepted back
    code, again = call("rank1-analyze", "--json", js({"x": out["x"], "a": out["a"]}))
    assert again == out


def test_malformed_input_exits_1():
    assert call("bogus")[0] == 1
    assert call("gamma-point", "--json", "{bad")[0] == 1
    assert call("gamma-point")[0] == 1
    assert call("gamma-point", "--json", js({"vertices": [["1/0", 0]]}))[0] == 1
    assert call("toric-mld", "--json", js({"rays": [[1, 0]]}))[0] == 1
    code, out = call("volume", "--file", "/nonexistent/x.json")
    assert code == 1 and out["code"] == "malformed-input"


def test_seeded_commands_are_deterministic():
    for cmd in ("toric-check", "product-check"):
        a = io.StringIO()
        b = io.StringIO()
        assert run([cmd, "--seed", "7", "--count", "3"], a) == 0
        run([cmd, "--seed", "7", "--count", "3"], b)
        assert a.getvalue() == b.getvalue()
        assert json.loads(a.getvalue())["passed"]


def test_approx_adds_decimals_alongside_exact_values():
    out = call("gamma-point", "--json", js(TRI), "--approx")[1]
    assert out["gamma"] == "1/6"
    assert out["approx"]["gamma"].startswith("0.16666")


@pytest.mark.parametrize("argv", [["sylvester", "--p", "3", "--q", "2"], ["rank1-extremal", "--d", "1"]])
def test_console_entry_point(argv):
    res = subprocess.run([sys.executable, "-m", "toric_alpha.cli", *argv],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout) == call(*argv)[1]
