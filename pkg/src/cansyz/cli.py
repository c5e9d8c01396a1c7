"""Command line: gen, betti, analyze, experiment, oracle, render.

Exit status: 0 success, 1 usage, 2 verification failure, 3 resource exhaustion.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .analysis import analyze
from .betti import check_canonical_shape
from .curves import ConstructionExhausted, UnsupportedGenusError, random_canonical_curve, rgc_range
from .harness import (
    ExperimentConfig, dominant, oracle_check, render, run_experiment, summary_from_ledger, summary_to_json,
)
from .io import CurveFileError, ingest, write_curve
from .resolution import canonical_resolution

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="cansyz", description="Syzygies of random canonical curves over small prime fields.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="construct one canonical curve and write it to a file")
    gen.add_argument("--genus", type=int, required=True)
    gen.add_argument("--char", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--gonality", type=int)
    gen.add_argument("--attempt-cap", type=int)
    gen.add_argument("--out", required=True)

    betti = sub.add_parser("betti", help="Betti table of a curve file")
    betti.add_argument("file")
    betti.add_argument("--oracle", action="store_true", help="also compare against Koszul cohomology")
    betti.add_argument("--json", action="store_true")

    an = sub.add_parser("analyze", help="strand analysis report (JSON) for a curve file")
    an.add_argument("file")
    an.add_argument("--gonality", type=int, help="known gonality, recorded with the report")

    ex = sub.add_parser("experiment", help="batch of seeded trials into a JSON-lines ledger")
    ex.add_argument("--genus", type=int, required=True)
    ex.add_argument("--char", type=int, required=True)
    ex.add_argument("--trials", type=int, default=10)
    ex.add_argument("--seed", type=int, default=0)
    ex.add_argument("--gonality", type=int)
    ex.add_argument("--attempt-cap", type=int)
    ex.add_argument("--out")
    ex.add_argument("--resume", action="store_true")
    ex.add_argument("--jobs", type=int, default=1)
    ex.add_argument("--time-budget", type=float, help="seconds per trial")
    ex.add_argument("--oracle", action="store_true")
    ex.add_argument("--json", action="store_true", help="print the summary as JSON")

    orc = sub.add_parser("oracle", help="Koszul cross-check of a curve file's Betti table")
    orc.add_argument("file")
    orc.add_argument("--cap", type=int, default=40000)

    ren = sub.add_parser("render", help="class tables from a ledger")
    ren.add_argument("ledger")
    ren.add_argument("--csv")
    ren.add_argument("--md")
    return ap


def _load(path: str):
    rec = ingest(path)
    if not rec.report["passed"]:
        failed = [k for k, v in rec.report["canonical"].items() if not v]
        print(f"{path}: not a canonical curve ideal ({', '.join(failed)})", file=sys.stderr)
        return None
    return rec


def cmd_gen(a) -> int:
    try:
        rec = random_canonical_curve(a.genus, a.char, a.seed, gonality=a.gonality, attempt_cap=a.attempt_cap)
    except ConstructionExhausted as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_RESOURCE
    write_curve(a.out, rec)
    print(f"wrote {a.out}: genus {rec.genus} over F_{rec.char}, {rec.meta['attempts']} attempt(s)")
    return EXIT_OK


def cmd_betti(a) -> int:
    rec = _load(a.file)
    if rec is None:
        return EXIT_VERIFY
    res = canonical_resolution(rec.ideal, rec.genus)
    shape = check_canonical_shape(res.betti, rec.genus)
    out = {"betti": res.betti.to_json(), "shape": shape}
    status = EXIT_OK if all(shape.values()) else EXIT_VERIFY
    if a.oracle:
        out["oracle"] = orc = oracle_check(rec.ideal, res.betti)
        if orc["status"] == "mismatch":
            status = EXIT_VERIFY
        elif orc["status"] == "out_of_budget" and status == EXIT_OK:
            status = EXIT_RESOURCE
    if a.json:
        print(json.dumps(out, sort_keys=True))
    else:
        print(res.betti.layout())
        if a.oracle:
            print(f"oracle: {out['oracle']['status']} ({out['oracle']['checked']} entries)")
    return status


def cmd_analyze(a) -> int:
    rec = _load(a.file)
    if rec is None:
        return EXIT_VERIFY
    res = canonical_resolution(rec.ideal, rec.genus)
    report = analyze(res, rec.ideal, rec.genus)
    data = report.to_json()
    k = a.gonality or rec.meta.get("gonality")
    if k:
        data["gonality"] = k
        data["conjecture_range"] = rgc_range(rec.genus, k)
    print(json.dumps(data, sort_keys=True))
    return EXIT_OK if report.complete else EXIT_RESOURCE


def cmd_experiment(a) -> int:
    try:
        cfg = ExperimentConfig(a.genus, a.char, a.trials, a.seed, a.gonality, a.attempt_cap, a.time_budget,
                               a.oracle, a.out, a.jobs, a.resume)
    except ValueError as exc:
        print(f"cansyz experiment: {exc}", file=sys.stderr)
        return EXIT_USAGE
    summary = run_experiment(cfg)
    if a.json:
        print(json.dumps(summary_to_json(summary), sort_keys=True))
    else:
        md, _ = render(summary)
        print(md, end="")
        print(f"{summary['successful']}/{summary['trials']} successful; failures {summary['failures']}; "
              f"ledger {summary['ledger']} ({summary['computed']} computed)")
    if summary["successful"] == 0:
        return EXIT_RESOURCE
    if summary["failures"].get("verification_failed"):
        return EXIT_VERIFY
    return EXIT_OK


def cmd_oracle(a) -> int:
    rec = _load(a.file)
    if rec is None:
        return EXIT_VERIFY
    res = canonical_resolution(rec.ideal, rec.genus)
    out = oracle_check(rec.ideal, res.betti, cap=a.cap)
    print(json.dumps(out, sort_keys=True))
    return {"agree": EXIT_OK, "mismatch": EXIT_VERIFY, "out_of_budget": EXIT_RESOURCE}[out["status"]]


def cmd_render(a) -> int:
    if not Path(a.ledger).exists():
        print(f"no ledger at {a.ledger}", file=sys.stderr)
        return EXIT_USAGE
    md, csv_text = render(summary_from_ledger(a.ledger))
    if a.md:
        Path(a.md).write_text(md)
    if a.csv:
        Path(a.csv).write_text(csv_text)
    if not a.md and not a.csv:
        print(md, end="")
    return EXIT_OK


COMMANDS = {"gen": cmd_gen, "betti": cmd_betti, "analyze": cmd_analyze, "experiment": cmd_experiment,
            "oracle": cmd_oracle, "render": cmd_render}


def main(argv=None) -> int:
    a = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[a.cmd](a)
    except UnsupportedGenusError as exc:
        print(f"cansyz: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CurveFileError as exc:
        print(f"cansyz: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"cansyz: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
