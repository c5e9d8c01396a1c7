"""Seeded batch experiments with a JSON-lines ledger and class tables."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import math
import os
import signal
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable

from .analysis import analyze
from .betti import BettiTable, check_canonical_shape
from .curves import ConstructionExhausted, random_canonical_curve
from .resolution import OracleBudgetError, canonical_resolution, koszul_betti

log = logging.getLogger(__name__)


class TrialTimeout(Exception):
    pass


@dataclass
class ExperimentConfig:
    genus: int
    char: int
    trials: int = 1
    base_seed: int = 0
    gonality: int | None = None
    attempt_cap: int | None = None
    time_budget: float | None = None
    oracle: bool = False
    out: str | None = None
    jobs: int = 1
    resume: bool = False
    node_policy: str = "orbit"

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")
        if self.attempt_cap is not None and self.attempt_cap < 1:
            raise ValueError("attempt cap must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")

    def ledger_path(self) -> Path:
        if self.out:
            return Path(self.out)
        suffix = f"-k{self.gonality}" if self.gonality else ""
        return Path(f"ledger-g{self.genus}-p{self.char}{suffix}-s{self.base_seed}.jsonl")


def trial_seed(base_seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{base_seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


# ---------------------------------------------------------------- one trial

def oracle_check(ideal, table: BettiTable, cap: int = 40000) -> dict:
    g = table.genus
    checked = 0
    mismatches = []
    for i in range(g - 1):
        for j in range(i + 1, i + 3):
            try:
                v = koszul_betti(ideal, i, j, cap=cap)
            except OracleBudgetError:
                return {"status": "out_of_budget", "checked": checked, "mismatches": mismatches}
            checked += 1
            if v != table.get(i, j):
                mismatches.append([i, j, table.get(i, j), v])
    return {"status": "agree" if not mismatches else "mismatch", "checked": checked, "mismatches": mismatches}


def _alarm(signum, frame):
    raise TrialTimeout()


def run_trial(cfg: ExperimentConfig, index: int) -> dict:
    seed = trial_seed(cfg.base_seed, index)
    rec = {"trial": index, "seed": seed, "genus": cfg.genus, "char": cfg.char, "gonality": cfg.gonality,
           "status": "ok", "attempts": None, "betti": None, "rgc": None,
           "timings": {}}
    use_alarm = cfg.time_budget is not None and hasattr(signal, "setitimer")
    if use_alarm:
        old = signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, cfg.time_budget)
    t0 = time.perf_counter()
    try:
        try:
            curve = random_canonical_curve(cfg.genus, cfg.char, seed, gonality=cfg.gonality,
                                           attempt_cap=cfg.attempt_cap, node_policy=cfg.node_policy)
        except ConstructionExhausted as exc:
            rec.update(status="construction_exhausted", attempts=exc.attempts, failures=exc.failures)
            return rec
        t1 = time.perf_counter()
        rec["attempts"] = curve.meta["attempts"]
        rec["failures"] = curve.meta["failures"]
        rec["orbit_nodes"] = curve.meta["orbit_nodes"]
        res = canonical_resolution(curve.ideal, cfg.genus)
        table = res.betti
        rec["betti"] = table.to_json()["betti"]
        rec["shape"] = check_canonical_shape(table, cfg.genus)
        t2 = time.perf_counter()
        report = analyze(res, curve.ideal, cfg.genus)
        t3 = time.perf_counter()
        rec["rgc"] = {
            "finite_length": report.finite_length,
            "ann_deg": report.ann_deg, "ann_dim": report.ann_dim,
            "M_deg": report.M_deg, "M_dim": report.M_dim,
            "pair": list(report.rgc_pair()) if report.rgc_pair() else None,
            "scroll": report.scroll.to_json() if report.scroll else None,
            "multiplicity_note": report.multiplicity_note,
            "phi_n": report.phi_n,
            "critical_betti": report.critical_betti, "green_profile": report.green_profile,
        }
        if not report.complete:
            rec["status"] = "incomplete"
            rec["note"] = report.note
        if not all(rec["shape"].values()):
            rec["status"] = "verification_failed"
        rec["timings"] = {"construct": round(t1 - t0, 3), "resolve": round(t2 - t1, 3), "analyze": round(t3 - t2, 3)}
        if cfg.oracle:
            rec["oracle"] = oracle_check(curve.ideal, table)
            rec["timings"]["oracle"] = round(time.perf_counter() - t3, 3)
            if rec["oracle"]["status"] == "mismatch":
                rec["status"] = "verification_failed"
        return rec
    except TrialTimeout:
        rec["status"] = "timeout"
        return rec
    finally:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old)
        rec["timings"]["total"] = round(time.perf_counter() - t0, 3)


def _run_trial_args(args):
    return run_trial(*args)


# ---------------------------------------------------------------- ledger

class RunLedger:
    """Append-only JSON lines, one record per trial, written in trial order."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.records: dict[int, dict] = {}
        self.torn = False
        if self.path.exists():
            for lineno, line in enumerate(self.path.read_text().splitlines(), start=1):
                if not line.strip():
                    continue
                try:
                    r = json.loads(line)
                except json.JSONDecodeError:
                    # a torn final line from an interrupted run; drop it and everything after
                    log.warning("ledger %s: unreadable line %d ignored", self.path, lineno)
                    self.torn = True
                    break
                if r["trial"] in self.records:
                    raise ValueError(f"ledger {self.path}: trial {r['trial']} appears twice")
                self.records[r["trial"]] = r

    def completed(self) -> set[int]:
        return set(self.records)

    def rewrite(self) -> None:
        with self.path.open("w") as fh:
            for i in sorted(self.records):
                fh.write(json.dumps(self.records[i], sort_keys=True) + "\n")

    def append(self, rec: dict) -> None:
        if rec["trial"] in self.records:
            raise ValueError(f"trial {rec['trial']} already recorded")
        self.records[rec["trial"]] = rec
        with self.path.open("a") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
            fh.flush()
            os.fsync(fh.fileno())


def run_experiment(cfg: ExperimentConfig, progress=None) -> dict:
    path = cfg.ledger_path()
    if path.exists() and not cfg.resume:
        path.unlink()
    ledger = RunLedger(path)
    if cfg.resume and (ledger.records or ledger.torn):
        # keep only a contiguous prefix so the file stays in trial order
        keep = {}
        for i in range(cfg.trials):
            if i not in ledger.records:
                break
            keep[i] = ledger.records[i]
        if len(keep) != len(ledger.records) or ledger.torn:
            ledger.records = keep
            ledger.rewrite()
    todo = [i for i in range(cfg.trials) if i not in ledger.records]
    if todo:
        pending: dict[int, dict] = {}
        nxt = todo[0]

        def flush():
            nonlocal nxt
            while nxt in pending:
                rec = pending.pop(nxt)
                ledger.append(rec)
                if progress:
                    progress(rec)
                nxt += 1
                while nxt < cfg.trials and nxt in ledger.records:
                    nxt += 1

        if cfg.jobs == 1:
            for i in todo:
                pending[i] = run_trial(cfg, i)
                flush()
        else:
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                for rec in pool.map(_run_trial_args, [(cfg, i) for i in todo]):
                    pending[rec["trial"]] = rec
                    flush()
    records = [ledger.records[i] for i in sorted(ledger.records) if i < cfg.trials]
    summary = summarize(records, cfg.genus, cfg.char)
    summary["ledger"] = str(path)
    summary["computed"] = len(todo)
    smoke = statistical_smoke(summary)
    if smoke:
        log.info("smoke check: %s", smoke)
        summary["smoke"] = smoke
    return summary


# ---------------------------------------------------------------- classes

@dataclass(frozen=True)
class ClassKey:
    betti: tuple[tuple[int, ...], ...]
    rgc: tuple[int, int] | None
    finite_length: bool | None

    def table(self) -> BettiTable:
        return BettiTable.from_rows([list(r) for r in self.betti])


INCOMPLETE = "incomplete"


def classify(rec: dict) -> ClassKey | str:
    """Ledger record (or RGCReport JSON) to its class; anything unfinished is quarantined."""
    if rec.get("status", "ok") not in ("ok", "complete") or not rec.get("betti"):
        return INCOMPLETE
    table = BettiTable({(i, j): v for i, j, v in rec["betti"]})
    rgc = rec.get("rgc")
    if isinstance(rgc, dict):
        pair = rgc.get("pair")
        finite = rgc.get("finite_length")
    else:
        pair = rgc
        finite = rec.get("finite_length")
    if finite is None:
        return INCOMPLETE
    return ClassKey(tuple(tuple(r) for r in table.rows()), tuple(pair) if pair else None, finite)


def summarize(records: Iterable[dict], genus: int | None = None, char: int | None = None) -> dict:
    records = list(records)
    classes: Counter = Counter()
    failures: Counter = Counter()
    attempts = []
    times = []
    for r in records:
        key = classify(r)
        if key == INCOMPLETE:
            failures[r.get("status", INCOMPLETE)] += 1
        else:
            classes[key] += 1
        if r.get("attempts"):
            attempts.append(r["attempts"])
        if r.get("timings", {}).get("total") is not None:
            times.append(r["timings"]["total"])
    ordered = sorted(classes.items(), key=lambda kv: (-kv[1], kv[0].betti, kv[0].rgc or (0, 0)))
    ok = sum(classes.values())
    return {
        "genus": genus, "char": char, "trials": len(records), "successful": ok,
        "classes": [{"key": k, "count": c, "fraction": c / ok if ok else 0.0} for k, c in ordered],
        "failures": dict(failures),
        "attempts": {"mean": sum(attempts) / len(attempts), "max": max(attempts)} if attempts else {},
        "wall": {"mean": sum(times) / len(times), "max": max(times)} if times else {},
    }


def dominant(summary: dict) -> dict | None:
    return summary["classes"][0] if summary["classes"] else None


def statistical_smoke(summary: dict) -> str | None:
    """Soft check: non-generic share near 1/p for odd genus (logged, never asserted)."""
    g, p, n = summary.get("genus"), summary.get("char"), summary.get("successful", 0)
    if not g or not p or g % 2 == 0 or n < 20 * p:
        return None
    m = math.ceil((g - 2) / 2)
    odd = sum(c["count"] for c in summary["classes"] if c["key"].table().get(m - 1, m + 1))
    dom = dominant(summary)
    if dom and dom["key"].table().get(m - 1, m + 1):
        odd = n - dom["count"]
    sigma = math.sqrt(n * (1 / p) * (1 - 1 / p))
    ok = abs(odd - n / p) <= 3 * sigma
    return f"non-generic {odd}/{n}, expected ~{n / p:.1f} ± {3 * sigma:.1f}: {'within' if ok else 'outside'} band"


# ---------------------------------------------------------------- rendering

def _pair_str(rgc) -> str:
    return f"({rgc[0]},{rgc[1]})" if rgc else "-"


def render(summary: dict) -> tuple[str, str]:
    """Markdown and CSV tables, one row per class, Betti tables dot-style."""
    md = ["| genus | char | # | RGC | Betti table |", "|---|---|---|---|---|"]
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["genus", "char", "count", "rgc_deg", "rgc_dim", "finite_length", "betti"])
    g, p = summary.get("genus"), summary.get("char")
    for c in summary["classes"]:
        key: ClassKey = c["key"]
        layout = key.table().layout().replace("\n", "<br>")
        md.append(f"| {g} | {p} | {c['count']} | {_pair_str(key.rgc)} | <pre>{layout}</pre> |")
        deg, dim = key.rgc if key.rgc else ("", "")
        w.writerow([g, p, c["count"], deg, dim, key.finite_length, key.table().compact()])
    return "\n".join(md) + "\n", out.getvalue()


def load_ledger(path: str | Path) -> list[dict]:
    led = RunLedger(path)
    return [led.records[i] for i in sorted(led.records)]


def summary_from_ledger(path: str | Path) -> dict:
    records = load_ledger(path)
    genus = records[0].get("genus") if records else None
    char = records[0].get("char") if records else None
    return summarize(records, genus, char)


def summary_to_json(summary: dict) -> dict:
    out = dict(summary)
    out["classes"] = [{"betti": BettiTable.from_rows([list(r) for r in c["key"].betti]).compact(),
                       "rgc": list(c["key"].rgc) if c["key"].rgc else None,
                       "finite_length": c["key"].finite_length, "count": c["count"],
                       "fraction": round(c["fraction"], 4)} for c in summary["classes"]]
    return out


__all__ = [
    "ExperimentConfig", "trial_seed", "run_trial", "RunLedger", "run_experiment", "ClassKey", "classify",
    "summarize", "dominant", "render", "load_ledger", "summary_from_ledger", "summary_to_json",
    "oracle_check", "statistical_smoke", "INCOMPLETE",
]
