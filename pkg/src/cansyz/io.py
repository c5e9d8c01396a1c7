"""Plain-text curve files.

    field 2
    ring w0 w1 w2 w3 w4 w5 w6
    genus 7
    meta {"seed": 42}
    w0*w2-w1^2
    ...

Blank lines and lines starting with ``#`` are ignored. Every generator takes
one line.
"""

from __future__ import annotations

import json
from pathlib import Path

from .curves import CurveRecord, verify_canonical
from .field import PrimeField, is_prime
from .groebner import Ideal
from .poly import PolynomialSyntaxError, PolyRing


class CurveFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def format_curve(rec: CurveRecord) -> str:
    ring = rec.ring
    lines = [f"field {rec.char}", "ring " + " ".join(ring.names), f"genus {rec.genus}"]
    if rec.meta:
        lines.append("meta " + json.dumps(rec.meta, sort_keys=True))
    lines.extend(str(g) for g in rec.ideal.gens)
    return "\n".join(lines) + "\n"


def write_curve(path: str | Path, rec: CurveRecord) -> None:
    Path(path).write_text(format_curve(rec))


def parse_curve(text: str) -> CurveRecord:
    p = genus = None
    names: list[str] | None = None
    meta: dict = {}
    gens = []
    ring = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        if ring is None:
            if head == "field":
                try:
                    p = int(rest)
                except ValueError:
                    raise CurveFileError(f"bad characteristic {rest!r}", lineno) from None
                if not is_prime(p) or p > 101:
                    raise CurveFileError(f"characteristic {p} is not a prime ≤ 101", lineno)
                continue
            if head == "ring":
                names = rest.split()
                if not names:
                    raise CurveFileError("ring line lists no variables", lineno)
                continue
            if head == "genus":
                try:
                    genus = int(rest)
                except ValueError:
                    raise CurveFileError(f"bad genus {rest!r}", lineno) from None
                continue
            if head == "meta":
                try:
                    meta = json.loads(rest)
                except json.JSONDecodeError as exc:
                    raise CurveFileError(f"bad meta JSON: {exc.msg}", lineno) from None
                continue
            # first generator line: the header must be complete
            if p is None or names is None or genus is None:
                raise CurveFileError("header needs field, ring and genus lines before generators", lineno)
            if len(names) != genus:
                raise CurveFileError(f"ring has {len(names)} variables, expected g = {genus}", lineno)
            ring = PolyRing(PrimeField(p), tuple(names))
        elif head in ("field", "ring", "genus", "meta"):
            raise CurveFileError(f"{head} line after the generators", lineno)
        try:
            f = ring.parse(line)
        except PolynomialSyntaxError as exc:
            raise CurveFileError(str(exc), lineno) from None
        if not f.is_homogeneous():
            raise CurveFileError("generator is not homogeneous", lineno)
        gens.append(f)
    if ring is None:
        if names is not None and genus is not None and len(names) != genus:
            raise CurveFileError(f"ring has {len(names)} variables, expected g = {genus}")
        raise CurveFileError("no generators")
    return CurveRecord(Ideal(ring, gens), genus, p, meta)


def read_curve(path: str | Path) -> CurveRecord:
    return parse_curve(Path(path).read_text())


def ingest(path: str | Path) -> CurveRecord:
    """Read an external canonical ideal and verify it; the report rides along."""
    rec = read_curve(path)
    rep = verify_canonical(rec.ideal, rec.genus)
    rec.meta = dict(rec.meta, provenance="ingested", source=str(path))
    rec.report = {"canonical": rep.clauses, "passed": rep.passed}
    return rec


__all__ = ["CurveFileError", "format_curve", "write_curve", "parse_curve", "read_curve", "ingest"]
