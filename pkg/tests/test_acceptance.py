"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines are written
straight to the terminal (and so to any tee'd log).
"""

import os
from pathlib import Path

import pytest

from cansyz.analysis import analyze
from cansyz.betti import BettiTable, check_canonical_shape
from cansyz.curves import random_canonical_curve, verify_canonical
from cansyz.harness import ExperimentConfig, classify, dominant, load_ledger, oracle_check, run_experiment, summarize
from cansyz.io import ingest
from cansyz.resolution import betti_table, canonical_resolution, free_resolution, koszul_betti

pytestmark = pytest.mark.slow

GENERAL7 = BettiTable.from_rows([[1], [0, 10, 16, 1], [0, 0, 1, 16, 10], [0, 0, 0, 0, 0, 1]])
GENERAL9 = BettiTable.from_rows([[1], [0, 21, 64, 70, 6], [0, 0, 0, 6, 70, 64, 21], [0] * 7 + [1]])
GENUS11_CRITICAL = {28, 30, 32, 34, 36, 38, 40, 42, 44, 50}
GENUS11_PAIRS = {(60, 0), (6, 5), (12, 5), (18, 5), (24, 5), (30, 5), (36, 5), (42, 5), (48, 5), (60, 5)}


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
        assert ok, detail
    return emit


def strip(records):
    return [{k: v for k, v in r.items() if k != "timings"} for r in records]


@pytest.fixture(scope="module")
def runs(tmp_path_factory):
    return {"dir": tmp_path_factory.mktemp("acceptance"), "ledgers": []}


@pytest.fixture(scope="module")
def genus7_f2(runs):
    path = runs["dir"] / "g7p2.jsonl"
    summary = run_experiment(ExperimentConfig(7, 2, trials=50, base_seed=0, out=str(path), jobs=4))
    runs["ledgers"].append(path)
    return path, summary


def test_criterion1_genus7_f2(genus7_f2, verdict):
    _, s = genus7_f2
    dom = dominant(s)
    key = dom["key"] if dom else None
    wall = s["wall"].get("max", 0)
    ok = (key is not None and key.table() == GENERAL7 and key.finite_length is True
          and dom["fraction"] >= 0.60 and wall <= 120)
    verdict(1, ok, f"dominant {key.table().compact() if key else None} finite={key.finite_length if key else None} "
                   f"share {dom['fraction'] if dom else 0:.2f} of {s['successful']}/{s['trials']} (need >= 0.60), "
                   f"max trial {wall:.1f}s")


def test_criterion2_genus9_f3(runs, verdict):
    path = runs["dir"] / "g9p3.jsonl"
    s = run_experiment(ExperimentConfig(9, 3, trials=20, base_seed=0, out=str(path), jobs=4))
    runs["ledgers"].append(path)
    dom = dominant(s)
    key = dom["key"] if dom else None
    oracle = []
    for seed in (0, 1):
        rec = random_canonical_curve(9, 3, seed)
        oracle.append(oracle_check(rec.ideal, canonical_resolution(rec.ideal, 9).betti)["status"])
    ok = key is not None and key.table() == GENERAL9 and dom["fraction"] >= 0.50 and oracle == ["agree", "agree"]
    verdict(2, ok, f"dominant {key.table().compact() if key else None} share {dom['fraction'] if dom else 0:.2f} "
                   f"of {s['successful']}/{s['trials']} (need >= 0.50); oracle on 2 curves: {oracle}")


def test_criterion3_generic_vanishing(runs, verdict):
    shares = {}
    for p in (3, 5, 7):
        path = runs["dir"] / f"g7p{p}.jsonl"
        s = run_experiment(ExperimentConfig(7, p, trials=10, base_seed=0, out=str(path), jobs=4))
        runs["ledgers"].append(path)
        recs = load_ledger(path)
        vanish = sum(1 for r in recs if classify(r) != "incomplete"
                     and BettiTable({(i, j): v for i, j, v in r["betti"]}).get(2, 4) == 0)
        dom = dominant(s)
        shares[p] = (vanish / len(recs), dom["key"].table().get(2, 4) if dom else None)
    ok = all(share >= 0.70 and b24 == 0 for share, b24 in shares.values())
    verdict(3, ok, "; ".join(f"p={p}: beta_24=0 in {sh:.0%}, dominant beta_24={b}" for p, (sh, b) in shares.items()))


def test_criterion4_trigonal_scrolls(runs, verdict):
    lines = []
    ok = True
    for g, p in ((7, 2), (8, 3)):
        path = runs["dir"] / f"g{g}p{p}k3.jsonl"
        run_experiment(ExperimentConfig(g, p, trials=5, base_seed=0, gonality=3, out=str(path), jobs=4))
        runs["ledgers"].append(path)
        got = []
        for r in load_ledger(path):
            rg = r.get("rgc") or {}
            sc = rg.get("scroll") or {}
            good = (r["status"] == "ok" and rg.get("finite_length") is False
                    and (rg.get("ann_dim"), rg.get("ann_deg")) == (2, g - 2)
                    and sc.get("is_scroll") is True and sc.get("contained") is True)
            ok &= good
            got.append((rg.get("ann_dim"), rg.get("ann_deg")) if good else r["status"])
        lines.append(f"g={g}: {got}")
    verdict(4, ok, "; ".join(lines) + " (need (2, g-2) scroll containing C, all 5)")


def test_criterion5_oracle_equivalence(verdict):
    import time
    t0 = time.perf_counter()
    cases = [(4, 2), (4, 7), (5, 3), (5, 5), (6, 2), (6, 7), (7, 2), (7, 3), (8, 2), (8, 3)]
    bad = []
    for n, (g, p) in enumerate(cases):
        rec = random_canonical_curve(g, p, 100 + n)
        table = betti_table(free_resolution(rec.ideal))
        for i in range(g - 1):
            for j in range(i, i + 4):
                if koszul_betti(rec.ideal, i, j) != table.get(i, j):
                    bad.append((g, p, i, j))
    wall = time.perf_counter() - t0
    verdict(5, not bad and wall <= 600, f"{len(cases)} curves g=4..8, p in 2,3,5,7: mismatches {bad}, {wall:.0f}s (cap 600s)")


def test_criterion6_structural_invariants(runs, verdict):
    failures = []
    count = 0
    for path in runs["ledgers"]:
        for r in load_ledger(path):
            if r.get("shape") is None:
                continue
            count += 1
            if not all(r["shape"].values()):
                failures.append((path.name, r["trial"], r["shape"]))
    for g, p in ((4, 5), (5, 2), (6, 3), (9, 2), (10, 2)):
        rec = random_canonical_curve(g, p, 7)
        rep = verify_canonical(rec.ideal, g)
        t = canonical_resolution(rec.ideal, g).betti
        count += 1
        shape = check_canonical_shape(t, g)
        dual = all(t.get(i, i + 1) == t.get(g - 2 - i, g - i) for i in range(g - 1))
        if not (all(shape.values()) and dual and rep.hilbert_polynomial == [1 - g, 2 * g - 2]):
            failures.append((g, p, shape, rep.hilbert_polynomial))
    verdict(6, count > 0 and not failures,
            f"self-duality, K-polynomial and Hilbert polynomial on {count} curves; failures {failures}")


def test_criterion7_low_genus(verdict):
    ci = {(0, 0): 1, (1, 2): 1, (1, 3): 1, (2, 5): 1}
    three_quadrics = {(0, 0): 1, (1, 2): 3, (2, 4): 3, (3, 6): 1}
    got = []
    ok = True
    for g, expect in ((4, ci), (5, three_quadrics)):
        for p, seed in ((2, 0), (3, 1), (5, 2)):
            rec = random_canonical_curve(g, p, seed)
            entries = betti_table(free_resolution(rec.ideal)).entries
            ok &= entries == expect
            got.append(f"g={g},p={p}:{'ok' if entries == expect else entries}")
    verdict(7, ok, ", ".join(got))


def test_criterion8_resume_determinism(genus7_f2, runs, verdict):
    full, s_full = genus7_f2
    part = runs["dir"] / "g7p2-resume.jsonl"
    run_experiment(ExperimentConfig(7, 2, trials=20, base_seed=0, out=str(part), jobs=1))
    prefix = part.read_bytes()
    s_res = run_experiment(ExperimentConfig(7, 2, trials=50, base_seed=0, out=str(part), jobs=3, resume=True))
    again = part.read_bytes()
    s_noop = run_experiment(ExperimentConfig(7, 2, trials=50, base_seed=0, out=str(part), jobs=2, resume=True))
    same_prefix = again.startswith(prefix) and part.read_bytes() == again
    same_records = strip(load_ledger(part)) == strip(load_ledger(full))
    counts = [(c["key"], c["count"]) for c in s_res["classes"]]
    same_counts = counts == [(c["key"], c["count"]) for c in s_full["classes"]]
    ok = same_prefix and same_records and same_counts and s_res["computed"] == 30 and s_noop["computed"] == 0
    verdict(8, ok, f"prefix byte-identical={same_prefix}, records match jobs=4 run={same_records}, "
                   f"class counts equal={same_counts}, resumed {s_res['computed']} then {s_noop['computed']}")


def test_criterion9_genus11_ingestion(verdict, capsys):
    src = os.environ.get("CANSYZ_GENUS11_DIR")
    files = sorted(Path(src).glob("*.ideal")) if src else []
    if not files:
        with capsys.disabled():
            print("\nSKIP criterion 9: no genus-11 ideals supplied (set CANSYZ_GENUS11_DIR); "
                  "in-core generation stops at genus 10")
        pytest.skip("no external genus-11 data")
    bad = []
    for f in files:
        rec = ingest(f)
        rep = analyze(canonical_resolution(rec.ideal, rec.genus), rec.ideal, rec.genus)
        if not (rec.report["passed"] and rep.critical_betti in GENUS11_CRITICAL and rep.rgc_pair() in GENUS11_PAIRS):
            bad.append((f.name, rep.critical_betti, rep.rgc_pair()))
    verdict(9, not bad, f"{len(files)} ingested genus-11 ideals; outside the tabulated key set: {bad}")


def test_class_summary_is_consistent(genus7_f2):
    path, s = genus7_f2
    again = summarize(load_ledger(path), 7, 2)
    assert [(c["key"], c["count"]) for c in again["classes"]] == [(c["key"], c["count"]) for c in s["classes"]]
