import csv
import io
import json
import math
import subprocess
import sys

import pytest

from logint.cli import main

J3 = 0.113291506110304231223910344988


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_j3(capsys):
    code, out, _ = run(capsys, "eval", "j", "--m", "3")
    assert code == 0
    lines = out.splitlines()
    assert float(lines[0].split(": ")[1]) == pytest.approx(J3, abs=1e-15)
    assert lines[1] == "terms: 1/2*Li2(0.75) + 3/2*LOG2_SQ - 1/9*PI_SQ"


def test_eval_values(capsys):
    _, out, _ = run(capsys, "eval", "j", "--m", "1")
    assert out.startswith("value: 0.240226506959100")
    _, out, _ = run(capsys, "eval", "lemma3", "--q", "1", "--json")
    doc = json.loads(out)
    assert doc["kind"] == "lemma3" and doc["params"] == {"q": 1.0}
    assert doc["value"] == pytest.approx(math.pi / 2 * math.log(2) - 0.915965594177219, abs=1e-14)


def test_seventeen_digits(capsys):
    from logint.closedform import i_odd

    _, out, _ = run(capsys, "eval", "i", "--m", "3")
    text = out.splitlines()[0].split(": ")[1]
    assert text == f"{i_odd(3).value:.17g}"
    assert float(text) == i_odd(3).value


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "j", "--m", "4"],
        ["eval", "j"],
        ["eval", "jeven", "--b", "0"],
        ["eval", "lemma3", "--q", "0"],
        ["oracle", "--name", "J", "--x", "-1"],
        ["oracle", "--name", "J", "--x", "3", "--tol", "1e-20"],
        ["table", "j", "--m-max", "4"],
        ["table", "j", "--m-max", "201"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize("argv", [["eval", "nope"], ["oracle", "--name", "BOGUS"], []])
def test_argparse_errors_use_code_2(argv):
    proc = subprocess.run([sys.executable, "-m", "logint", *argv], capture_output=True, text=True)
    assert proc.returncode == 2


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--name", "J", "--x", "3")
    assert code == 0
    assert float(out.splitlines()[0].split(": ")[1]) == pytest.approx(J3, abs=1e-13)
    assert "converged: yes" in out
    code, out, _ = run(capsys, "oracle", "--name", "T", "--x", "1", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["converged"] and doc["value"] == pytest.approx(math.pi**2 / 32, abs=1e-14)
    code, out, _ = run(capsys, "oracle", "--name", "HZN", "--x", "2", "--u", "0.5", "--v", "0.5")
    assert code == 0 and "converged: yes" in out


def test_nonconvergence_from_table(capsys, monkeypatch):
    from logint import cli
    from logint.quadrature import QuadResult

    monkeypatch.setattr(cli, "oracle", lambda *a, **k: QuadResult(0.0, 1.0, 10, False))
    code, _, err = run(capsys, "table", "j", "--m-max", "3")
    assert code == 3 and "did not converge" in err


def test_verify_specfun(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "specfun")
    assert code == 0
    assert " ti2-inversion-x=7 " in out
    assert out.splitlines()[-1].endswith("passed / 0 failed")


def test_verify_all_json(capsys):
    code, out, err = run(capsys, "verify", "--suite", "all", "--json", "--parallel")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) >= 60
    assert all(r["passed"] for r in reports)
    assert set(reports[0]) == {"check_id", "closed_form", "oracle", "abs_err", "rel_err", "tolerance", "passed"}
    ids = [r["check_id"] for r in reports]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    assert err.strip() == f"{len(reports)} passed / 0 failed"
    # round trip
    assert json.loads(json.dumps(reports)) == reports


def test_verify_failure_exit_1(capsys, monkeypatch):
    from logint import cli
    from logint.verify import Report

    bad = [Report.build("bad", 1.0, 2.0, 1e-10)]
    monkeypatch.setattr(cli, "run_checks", lambda *a, **k: bad)
    code, out, _ = run(capsys, "verify", "--suite", "specfun")
    assert code == 1 and out.startswith("FAIL bad") and "0 passed / 1 failed" in out


def test_verify_parallel_matches_serial(capsys):
    _, a, _ = run(capsys, "verify", "--suite", "closedform", "--json")
    _, b, _ = run(capsys, "verify", "--suite", "closedform", "--json", "--parallel")
    assert a == b


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "j", "--m-max", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert out.splitlines()[0] == "m,closed_form,oracle,abs_err"
    assert [r["m"] for r in rows] == ["1", "3", "5"]
    assert float(rows[1]["closed_form"]) == pytest.approx(J3, abs=1e-14)
    assert float(rows[1]["abs_err"]) <= 1e-10


def test_table_json_and_md(capsys):
    _, out, _ = run(capsys, "table", "i", "--m-max", "1", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 1 and rows[0]["closed_form"] == pytest.approx(math.pi / 8 * math.log(2), abs=1e-16)
    _, out, _ = run(capsys, "table", "i", "--m-max", "3", "--format", "md")
    assert out.splitlines()[0] == "| m | closed_form | oracle | abs_err |"
    assert len(out.splitlines()) == 4


def test_env_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("LOGINT_DEFAULT_TOL", "1e-6")
    code, out, _ = run(capsys, "oracle", "--name", "J", "--x", "3", "--json")
    assert code == 0 and json.loads(out)["converged"]
    monkeypatch.setenv("LOGINT_DEFAULT_TOL", "1e-2")
    code, _, err = run(capsys, "oracle", "--name", "J", "--x", "3")
    assert code == 2 and "outside" in err
    monkeypatch.setenv("LOGINT_DEFAULT_TOL", "tiny")
    code, _, err = run(capsys, "oracle", "--name", "J", "--x", "3")
    assert code == 2


def test_out_file(capsys, tmp_path):
    path = tmp_path / "table.csv"
    code, out, _ = run(capsys, "table", "j", "--m-max", "3", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().splitlines()[0] == "m,closed_form,oracle,abs_err"


def test_deterministic(capsys):
    first = [run(capsys, "table", "i", "--m-max", "9", "--format", "json")[1] for _ in range(2)]
    assert first[0] == first[1]
    second = [run(capsys, "verify", "--suite", "funceq")[1] for _ in range(2)]
    assert second[0] == second[1]


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "logint", "eval", "jeven", "--b", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert float(proc.stdout.split()[1]) == pytest.approx(0.154723002082622763941274998914, abs=1e-15)
