import json
import os
import subprocess
import sys

import pytest

from opoly.algebra import parse_scalar
from opoly.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, out


HAHN = ["--family", "hahn", "--alpha", "1", "--beta", "1", "--N", "5"]


def test_coeffs(capsys):
    code, out = run(capsys, "coeffs", *HAHN, "--n", "2")
    assert code == 0
    assert json.loads(out)["coeffs"] == ["4", "-5", "1"]
    code, out = run(capsys, "coeffs", "--family", "hahn", "--alpha", "1", "--beta", "1",
                    "--N", "1", "--n", "2")
    assert json.loads(out)["coeffs"] == ["0", "-1", "1"]
    code, out = run(capsys, "coeffs", *HAHN, "--n", "0")
    assert json.loads(out)["coeffs"] == ["1"]


def test_coeffs_paths_agree(capsys):
    _, a = run(capsys, "coeffs", "--family", "krawtchouk", "--p", "2/7", "--N", "3", "--n", "6")
    _, b = run(capsys, "coeffs", "--family", "krawtchouk", "--p", "2/7", "--N", "3", "--n", "6",
               "--path", "ttrr")
    assert json.loads(a)["coeffs"] == json.loads(b)["coeffs"]


def test_rational_round_trip(capsys):
    _, out = run(capsys, "coeffs", "--family", "hahn", "--alpha", "1/3", "--beta", "5/7",
                 "--N", "2", "--n", "4")
    for c in json.loads(out)["coeffs"]:
        assert str(parse_scalar(c)) == c


def test_parse_error_exit_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["coeffs", "--family", "hahn", "--alpha", "x", "--n", "2"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 1
    assert run(capsys, "coeffs", "--family", "hahn", "--alpha", "1", "--n", "2")[0] == 1
    assert run(capsys, "coeffs", "--family", "jacobi", "--n", "2")[0] == 1


def test_degenerate_exit_2(capsys):
    code, out = run(capsys, "coeffs", "--family", "hahn", "--alpha", "-1", "--beta", "-1",
                    "--N", "3", "--n", "1")
    assert code == 2
    assert json.loads(out)["factor"]


def test_gram(capsys):
    code, out = run(capsys, "gram", *HAHN, "--nmax", "0")
    assert code == 0 and json.loads(out)["certified"] is True
    code, out = run(capsys, "gram", "--family", "hahn", "--alpha", "-3", "--beta", "1",
                    "--N", "5", "--nmax", "8")
    assert code == 2
    assert "-α" in json.loads(out)["message"]


def test_gram_not_certified_exit_3(capsys):
    code, _ = run(capsys, "gram", *HAHN, "--nmax", "8", "--panels", "4",
                  "--order", "2", "--rule", "trapezoid")
    assert code == 3


def test_check_factorization(capsys):
    code, out = run(capsys, "check", "--id", "factorization", "--family", "krawtchouk",
                    "--p", "1/2", "--N", "3", "--n", "5")
    assert code == 0 and json.loads(out)["verdict"] == "ExactPass"


def test_check_fail_exit_3(capsys):
    code, out = run(capsys, "gf", "--family", "krawtchouk", "--p", "1/2", "--N", "2", "--K", "4",
                    "--normalization", "printed")
    assert code == 3 and json.loads(out)["verdict"] == "Fail"


def test_check_random_deterministic(capsys, monkeypatch):
    args = ["check", "--id", "difference", "--random", "5", "--n", "6", "--N", "3", "--seed", "9"]
    _, a = run(capsys, *args)
    monkeypatch.setenv("OPOLY_THREADS", "4")
    _, b = run(capsys, *args)
    assert a == b
    lines = a.strip().splitlines()
    assert len(lines) == 5 and all(json.loads(l)["verdict"] == "ExactPass" for l in lines)


def test_limits(capsys):
    code, out = run(capsys, "limits", "--relation", "hahn-to-krawtchouk", "--p", "1/2", "--N", "3",
                    "--n", "2", "--ladder", "1e2,1e3,1e4")
    assert code == 0
    rep = json.loads(out)
    assert rep["strictly_decreasing"] and abs(rep["slope"] + 1) <= 0.2
    assert run(capsys, "limits", "--relation", "nowhere", "--n", "2")[0] == 1


def test_zeros_csv(capsys):
    code, out = run(capsys, "zeros", *HAHN, "--n", "15", "--format", "csv")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "re,im,kind" and len(rows) == 16
    assert sum(r.endswith(",integer") for r in rows) == 6


def test_module_entry_point():
    env = dict(os.environ)
    res = subprocess.run([sys.executable, "-m", "opoly", "coeffs", *HAHN, "--n", "2"],
                         capture_output=True, text=True, env=env)
    assert res.returncode == 0
    assert json.loads(res.stdout)["coeffs"] == ["4", "-5", "1"]
