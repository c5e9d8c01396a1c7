import json
import subprocess
import sys

import pytest

from cansyz.cli import main

GENUS4 = "field 3\nring w0 w1 w2 w3\ngenus 4\nw0*w3-w1*w2\nw0^3+w1^3+w2^3+w3^3+w0*w1*w2\n"


def test_gen_then_analyze(tmp_path, capsys):
    out = tmp_path / "c.ideal"
    assert main(["gen", "--genus", "7", "--char", "2", "--seed", "42", "--out", str(out)]) == 0
    capsys.readouterr()
    assert main(["analyze", str(out)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [2, 4] in [e[:2] for e in data["betti"]] or data["critical_betti"] == 0
    assert "critical_betti" in data and data["m"] == 3


def test_betti_genus4(tmp_path, capsys):
    f = tmp_path / "g4.ideal"
    f.write_text(GENUS4)
    assert main(["betti", str(f), "--json", "--oracle"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["betti"]["betti"] == [[0, 0, 1], [1, 2, 1], [1, 3, 1], [2, 5, 1]]
    assert out["oracle"]["status"] == "agree"


def test_oracle_budget_exit(tmp_path, capsys):
    f = tmp_path / "g4.ideal"
    f.write_text(GENUS4)
    assert main(["oracle", str(f), "--cap", "1"]) == 3


def test_usage_errors(tmp_path, capsys):
    assert main(["gen", "--genus", "12", "--char", "2", "--out", str(tmp_path / "x")]) == 1
    assert main(["betti", str(tmp_path / "missing.ideal")]) == 1
    bad = tmp_path / "bad.ideal"
    bad.write_text("field 3\nring w0 w1 w2\ngenus 4\nw0\n")
    assert main(["betti", str(bad)]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["experiment", "--genus", "7"])
    assert exc.value.code == 1
    assert main(["experiment", "--genus", "7", "--char", "2", "--trials", "0"]) == 1


def test_not_canonical_is_verification_failure(tmp_path, capsys):
    f = tmp_path / "tc.ideal"
    f.write_text("field 3\nring w0 w1 w2 w3\ngenus 4\nw0*w2-w1^2\nw1*w3-w2^2\nw0*w3-w1*w2\n")
    assert main(["betti", str(f)]) == 2


def test_experiment_resume_and_render(tmp_path, capsys):
    led = tmp_path / "l.jsonl"
    args = ["experiment", "--genus", "6", "--char", "2", "--trials", "3", "--out", str(led), "--json"]
    assert main(args) == 0
    first = json.loads(capsys.readouterr().out)
    assert first["computed"] == 3
    assert main(args + ["--resume", "--jobs", "2"]) == 0
    second = json.loads(capsys.readouterr().out)
    assert second["computed"] == 0 and second["classes"] == first["classes"]
    csv_path = tmp_path / "t.csv"
    assert main(["render", str(led), "--csv", str(csv_path)]) == 0
    assert csv_path.read_text().startswith("genus,char,count")
    assert main(["render", str(tmp_path / "none.jsonl")]) == 1


def test_console_module():
    r = subprocess.run([sys.executable, "-m", "cansyz", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "experiment" in r.stdout
