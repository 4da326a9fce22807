import json
import subprocess
import sys

import pytest

from umbral.cli import main


def run(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_examples(capsys):
    assert run(["eval", "x.chi", "3"], capsys)[1] == "x^3 - 3x^2 + 2x\n"
    assert run(["eval", "ubar", "4"], capsys)[1] == "24\n"
    assert run(["eval", "eps", "5"], capsys)[1] == "0\n"
    assert run(["eval", "--", "-1.-chi", "4"], capsys)[1] == "24\n"


def test_gf_examples(capsys):
    assert run(["gf", "delta", "5"], capsys)[1] == "1, 1, 2, 3, 5, 8\n"
    assert run(["gf", "eps", "3"], capsys)[1] == "1, 0, 0, 0\n"
    assert run(["gf", "bell", "4"], capsys)[1] == "1, 1, 1, 5/6, 5/8\n"
    assert run(["gf", "chi", "--order", "2"], capsys)[1] == "1, 1, 0\n"


def test_table_dyck(capsys):
    code, out, _ = run(["table", "dyck", "--n", "0..5", "--m", "0..6"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,m,value"
    rows = {(int(a), int(b)): int(c) for a, b, c in (l.split(",") for l in lines[1:])}
    assert rows[(4, 6)] == 46 and rows[(5, 5)] == 23 and rows[(2, 5)] == 11
    keys = list(rows)
    assert keys == sorted(keys)
    assert "\r" not in out


def test_table_fibonacci_diagonal(capsys):
    out = run(["table", "fibonacci", "--diagonal", "--n", "0..10"], capsys)[1]
    assert [l.split(",")[1] for l in out.splitlines()[1:]] == "1 1 2 3 5 8 13 21 34 55 89".split()


def test_table_integral_flag(capsys):
    out = run(["table", "integral", "--n", "0..3"], capsys)[1].splitlines()
    assert out[0] == "n,value,integral_is_one"
    assert out[2] == "1,x + 1/2,true"
    assert all(l.endswith(",true") for l in out[1:])


def test_table_json(capsys):
    out = run(["table", "dyck", "--n", "1..2", "--m", "2..2", "--format", "json"], capsys)[1]
    data = json.loads(out)
    assert data == [{"case": "dyck", "n": 1, "m": 2, "value": 2}, {"case": "dyck", "n": 2, "m": 2, "value": 2}]
    out = run(["table", "integral", "--n", "1", "--format", "json"], capsys)[1]
    data = json.loads(out)
    assert data[1]["value"] == "x + 1/2" and data[1]["integral_is_one"] is True


def test_table_out_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    assert run(["table", "pascal", "--n", "0..2", "--out", str(path)], capsys)[1] == ""
    assert path.read_bytes() == b"n,value\n0,1\n1,x + 1\n2,(1/2)x^2 + (3/2)x + 3\n"


def test_table_order_guard(capsys):
    code, _, err = run(["table", "pascal", "--n", "0..9", "--order", "8"], capsys)
    assert code != 0 and "error" in err


def test_errors_exit_nonzero(capsys):
    code, out, err = run(["eval", "gamma", "2"], capsys)
    assert code != 0 and out == "" and "gamma" in err
    code, _, err = run(["eval", "u +", "2"], capsys)
    assert code != 0 and "position" in err
    code, _, _ = run(["eval", "u", "20"], capsys)
    assert code != 0
    with pytest.raises(SystemExit):
        main(["table", "nope"])


def test_verify_series_text_and_json(capsys):
    code, out, _ = run(["verify", "series"], capsys)
    assert code == 0 and "[PASS]" in out and "FAIL" not in out
    code, out, _ = run(["verify", "bell", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["ok"] and all(c["status"] == "pass" for c in data["checks"])


def test_deterministic_output():
    cmd = [sys.executable, "-m", "umbral", "table", "dyck", "--n", "0..4", "--m", "0..5", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
