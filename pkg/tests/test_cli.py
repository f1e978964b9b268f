import json
import subprocess
import sys

import pytest

from parkfn import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_prime(capsys):
    code, out, _ = run(capsys, "check", "3,2,1,1", "--prime")
    v = json.loads(out)
    assert code == 0 and v["prime"] and v["parking"] and v["displacement"] == 3
    assert v["stats"]["tie_set"] == [3]


def test_check_not_prime(capsys):
    code, out, _ = run(capsys, "check", "1,2,3", "--prime")
    assert code == 1 and json.loads(out)["prime"] is False


def test_check_not_parking(capsys):
    code, out, _ = run(capsys, "check", "3,3,3")
    v = json.loads(out)
    assert code == 1 and v["displacement"] is None


@pytest.mark.parametrize("prefs", ["0,1", "a,b", "1,,2"])
def test_check_parse_error(capsys, prefs):
    code, out, err = run(capsys, "check", prefs)
    assert code == 2 and out == "" and err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--prime")
    assert code == 0 and out.splitlines() == ["1,1,1", "1,1,2", "1,2,1", "2,1,1"]
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--prime", "--stat", "displacement")
    assert [line.split(",")[-1] for line in out.splitlines()] == ["3", "2", "2", "2"]
    code, out, _ = run(capsys, "enumerate", "--n", "1")
    assert out == "1\n"


def test_enumerate_json_stats(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--prime", "--format", "json", "--stat", "ties", "--stat", "fdiff")
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[0] == {"prefs": [1, 1, 1], "ties": 2, "fdiff": [2, 0]}


def test_enumerate_limit(capsys, monkeypatch):
    code, _, err = run(capsys, "enumerate", "--n", "5", "--limit", "4")
    assert code == 3 and "limit" in err
    monkeypatch.setenv("PARKFN_LIMIT", "2")
    code, _, _ = run(capsys, "enumerate", "--n", "3")
    assert code == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "displacement-enum", "--n", "4")
    v = json.loads(out)
    assert code == 0 and v["pass"] and v["lhs"] == v["rhs"]
    code, out, _ = run(capsys, "verify", "--theorem", "quasisym", "--n", "3", "--vars", "3")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--theorem", "ell-genfun", "--n", "4", "--ell", "1")
    v = json.loads(out)
    assert code == 0 and v["details"]["text"] == "q^3 + 6q^2 + 12q + 8"
    assert v["lhs"]["coeffs"] == ["8", "12", "6", "1"]


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "nope", "--n", "3")
    assert code == 2 and "nope" in err


@pytest.mark.parametrize("theorem", sorted(cli.verify.THEOREMS))
def test_every_theorem_passes_small(capsys, theorem):
    n = "4"
    code, out, _ = run(capsys, "verify", "--theorem", theorem, "--n", n)
    assert code == 0, out


def test_sample_rows(capsys):
    code, out, _ = run(capsys, "sample", "--n", "4", "--samples", "3", "--seed", "7")
    _, again, _ = run(capsys, "sample", "--n", "4", "--samples", "3", "--seed", "7")
    assert code == 0 and out == again and len(out.splitlines()) == 3
    _, out, _ = run(capsys, "sample", "--n", "2", "--samples", "5")
    assert out.splitlines() == ["1,1"] * 5


def test_sample_report(capsys):
    code, out, _ = run(capsys, "sample", "--n", "50", "--samples", "20000", "--seed", "1", "--report")
    rep = json.loads(out)
    t = rep["stats"]["ties"]
    assert code == 0 and abs(t["mean"] - 1) < 4 * t["se"]


def test_expect(capsys):
    _, out, _ = run(capsys, "expect", "--n", "2")
    assert json.loads(out)["pi1"]["exact"] == "5/4"
    _, out, _ = run(capsys, "expect", "--n", "3")
    assert json.loads(out)["pi1"]["exact"] == "14/9"
    _, out, _ = run(capsys, "expect", "--n", "10000", "--asymptotic")
    assert json.loads(out)["pi1"]["abs_error"] < 0.05
    _, out, _ = run(capsys, "expect", "--n", "2", "--format", "csv")
    assert out.splitlines()[0].startswith("pi1,5/4,1.25")


def test_count(capsys):
    _, out, _ = run(capsys, "count", "--n", "8", "--prime")
    assert json.loads(out)["count"] == "823543"
    _, out, _ = run(capsys, "count", "--n", "3", "--first", "2", "--ones", "1")
    assert json.loads(out)["count"] == "4"
    _, out, _ = run(capsys, "count", "--n", "5", "--method", "paths")
    assert json.loads(out)["count"] == "1296"


def test_disp_enum_and_genfun(capsys):
    _, out, _ = run(capsys, "disp-enum", "--n", "3", "--method", "paths")
    assert json.loads(out)["poly"] == "q^3 + 3q^2"
    code, out, _ = run(capsys, "genfun", "--n", "4", "--ell", "0", "--m", "2")
    assert code == 0 and json.loads(out)["equal"]


def test_bijection(capsys):
    code, out, _ = run(capsys, "bijection", "2,1,3,1,3,1,6,4")
    v = json.loads(out)
    assert code == 0 and v["dyck"]["word"] == "NNNENENNENEENEEE" and v["alpha"] == [2, 4, 6, 1, 3, 5, 8, 7]
    code, _, _ = run(capsys, "bijection", "3,3,3")
    assert code == 2


def test_abel(capsys):
    code, out, _ = run(capsys, "abel", "--n", "2", "--x", "1", "--y", "1")
    v = json.loads(out)
    assert code == 0 and v["value"] == "16/1" == v["closed"]
    code, _, err = run(capsys, "abel", "--n", "2", "--x", "0", "--y", "1")
    assert code == 2 and ("x = 0" in err or "0 raised" in err)


def test_output_file(capsys, tmp_path):
    path = tmp_path / "out.csv"
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--output", str(path))
    assert code == 0 and out == "" and path.read_text() == "1,1\n1,2\n2,1\n"


def test_usage_error_exit_code():
    r = subprocess.run([sys.executable, "-m", "parkfn.cli", "enumerate"], capture_output=True, text=True)
    assert r.returncode == 2


def test_byte_identical_runs():
    cmd = [sys.executable, "-m", "parkfn.cli", "sample", "--n", "7", "--samples", "50", "--seed", "9", "--report"]
    a = subprocess.run(cmd, capture_output=True).stdout
    b = subprocess.run(cmd, capture_output=True).stdout
    assert a == b and a
