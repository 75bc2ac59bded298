import json
import subprocess
import sys

import pytest

from threshfree.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_convert_both_ways(capsys):
    assert call(capsys, "convert", "1^4", "0^3", "1^2")[1].strip() == "T(2,3,4)"
    assert call(capsys, "convert", "T(2,3,4)")[1].strip() == "111100011"
    code, out, _ = call(capsys, "convert", "T(1,2)", "--format", "json")
    assert json.loads(out)["binary"] == "101"


def test_rfi_prints_cotree_and_trace(capsys):
    code, out, _ = call(capsys, "rfi", "--n", "4.8", "--r", "5")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "T(5,145,5,145,6)"
    assert lines[1].split() == ["depth", "bound", "chosen", "remaining", "permanent"]
    assert len(lines) == 7


def test_lfi_json(capsys):
    code, out, _ = call(capsys, "lfi", "--m", "-3.3", "--r", "7", "--format", "json")
    data = json.loads(out)
    assert data["cotree"]["parts"] == [11, 4, 46, 3, 35, 2, 2]
    assert len(data["trace"]["levels"]) == 7


def test_theta(capsys):
    code, out, _ = call(capsys, "theta", "T(1,1,1,1,1,1,2)", "--side", "minus", "--tol", "1e-9")
    assert code == 0 and abs(float(out) - -1.24338010982) <= 1e-9
    code, out, _ = call(capsys, "theta", "T(1,1,1,1,1,1,2)", "--side", "minus", "--tol", "1e-11")
    assert out.strip() == "-1.24338010983"


def test_diag_counts_and_trace(capsys):
    code, out, _ = call(capsys, "diag", "T(2,3,4)", "--at", "1", "--format", "json", "--diagonal", "--trace")
    data = json.loads(out)
    assert data["counts"] == {"greater": 2, "equal": 0, "less": 7}
    assert len(data["diagonal"]) == 9
    assert data["trace"][0]["depth"] == 3


def test_inertia_and_check(capsys):
    code, out, _ = call(capsys, "inertia", "T(2,3,4)", "--format", "json")
    data = json.loads(out)
    assert data["inertia"] == {"greater": 2, "equal": 2, "less": 5}
    assert data["mult_minus_one"] == 4
    code, out, _ = call(capsys, "check", "T(6,44,6,36,5,2)", "--right", "4.81", "--format", "json")
    assert code == 0 and json.loads(out)["free"] is False


def test_search_and_oracle(capsys, monkeypatch):
    monkeypatch.setenv("THRESHFREE_WORKERS", "1")
    code, out, err = call(capsys, "search", "T(4,14,5)", "--right", "2.2360679774997896", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["complete"] and len(data["counterexamples"]) == 33
    assert "shards" in err
    code, out, _ = call(capsys, "oracle", "T(4)", "--format", "csv")
    assert out.split() == ["-1", "-1", "-1", "3"]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["diag", "T(2,3,1)", "--at", "0"], 1),
        (["diag", "T(2,3", "--at", "0"], 1),
        (["theta", "T(2)", "--side", "minus"], 1),
        (["rfi", "--n", "4.8", "--r", "3", "--choices", "1,1,1"], 1),
        (["check", "T(2,2)", "--left", "-0.5"], 1),
        (["oracle", "T(400,200)"], 1),
        (["convert", "1^3 0^2"], 1),
        (["bogus"], 2),
        (["diag", "T(2,3,4)", "--at", "x"], 2),
        (["check", "T(2,2)"], 2),
        (["search", "T(2,2)", "--right", "1", "--workers", "0"], 2),
        (["theta", "T(2,2)", "--side", "plus", "--tol", "0"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, _, err = call(capsys, *argv)
    assert got == code
    assert err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "threshfree", "convert", "T(2,3,4)"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "111100011"
