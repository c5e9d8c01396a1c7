import csv
import io
from pathlib import Path

import pytest

from cansyz.betti import BettiTable
from cansyz.harness import (
    INCOMPLETE, ClassKey, ExperimentConfig, RunLedger, classify, dominant, load_ledger, render, run_experiment,
    summarize, trial_seed,
)

DATA = Path(__file__).parent / "data"
G11_ROWS = [[1], [0, 36, 160, 315, 288, 28], [0, 0, 0, 0, 28, 288, 315, 160, 36], [0] * 9 + [1]]


def report(rows, pair, finite, status="ok"):
    t = BettiTable.from_rows(rows)
    return {"status": status, "betti": t.to_json()["betti"],
            "rgc": {"pair": list(pair) if pair else None, "finite_length": finite}}


def test_trial_seed_stable():
    assert trial_seed(0, 0) == trial_seed(0, 0)
    assert trial_seed(0, 1) != trial_seed(1, 0)
    assert trial_seed(5, 3) == int.from_bytes(__import__("hashlib").sha256(b"5:3").digest()[:8], "big")


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(7, 2, trials=0)
    with pytest.raises(ValueError):
        ExperimentConfig(7, 2, time_budget=-1)
    with pytest.raises(ValueError):
        ExperimentConfig(7, 2, jobs=0)
    assert ExperimentConfig(7, 2, gonality=3, base_seed=4).ledger_path().name == "ledger-g7-p2-k3-s4.jsonl"


def test_classify():
    a = report(G11_ROWS, (60, 0), True)
    b = report(G11_ROWS, (60, 0), True)
    assert classify(a) == classify(b)
    assert classify(report(G11_ROWS, (6, 5), False)) != classify(report(G11_ROWS, (12, 5), False))
    assert classify(report(G11_ROWS, None, None)) == INCOMPLETE
    assert classify({"status": "timeout", "betti": None}) == INCOMPLETE


def test_render_empty():
    md, csv_text = render(summarize([]))
    assert md == "| genus | char | # | RGC | Betti table |\n|---|---|---|---|---|\n"
    assert csv_text == "genus,char,count,rgc_deg,rgc_dim,finite_length,betti\n"


def test_render_golden_genus11_class():
    records = [report(G11_ROWS, (60, 0), True) for _ in range(230)]
    md, csv_text = render(summarize(records, 11, 2))
    assert md == (DATA / "genus11_dominant_class.md").read_text()
    rows = list(csv.reader(io.StringIO(csv_text)))
    assert rows[1] == ["11", "2", "230", "60", "0", "True", "1 / 36,160,315,288,28 / 28,288,315,160,36 / 1"]


def test_summary_conservation():
    recs = [report(G11_ROWS, (60, 0), True)] * 3 + [report(G11_ROWS, (6, 5), False), {"status": "timeout"}]
    s = summarize(recs, 11, 2)
    assert sum(c["count"] for c in s["classes"]) + sum(s["failures"].values()) == 5
    assert dominant(s)["count"] == 3 and dominant(s)["key"].rgc == (60, 0)


def test_ledger_torn_tail(tmp_path):
    path = tmp_path / "l.jsonl"
    path.write_text('{"trial": 0, "status": "ok"}\n{"trial": 1, "sta')
    led = RunLedger(path)
    assert led.torn and set(led.records) == {0}


def test_experiment_resume_and_jobs(tmp_path):
    out = tmp_path / "run.jsonl"
    first = run_experiment(ExperimentConfig(6, 3, trials=3, base_seed=2, out=str(out)))
    assert first["computed"] == 3
    text = out.read_text()
    again = run_experiment(ExperimentConfig(6, 3, trials=5, base_seed=2, out=str(out), resume=True, jobs=2))
    assert again["computed"] == 2
    assert out.read_text().startswith(text)
    fresh = tmp_path / "fresh.jsonl"
    run_experiment(ExperimentConfig(6, 3, trials=5, base_seed=2, out=str(fresh), jobs=2))

    def strip(recs):
        return [{k: v for k, v in r.items() if k != "timings"} for r in recs]

    assert strip(load_ledger(out)) == strip(load_ledger(fresh))


def test_timeout_is_recorded(tmp_path):
    s = run_experiment(ExperimentConfig(9, 3, trials=1, time_budget=0.01, out=str(tmp_path / "t.jsonl")))
    assert s["failures"] == {"timeout": 1}
