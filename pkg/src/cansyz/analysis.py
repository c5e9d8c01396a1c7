"""Strand analysis of canonical resolutions.

Works at the first nonzero map of the second linear strand: is its cokernel
of finite length, and if not, is the support of the annihilator a rational
normal scroll through the curve?
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import asdict, dataclass, field

import numpy as np

from .betti import BettiTable
from .groebner import Ideal, hilbert_series
from .linalg import rank
from .modules import GradedFreeModule, GradedMap, annihilator, cokernel
from .resolution import CanonicalResolution, FreeResolution, betti_table, free_resolution, strand


class GreenVanishingMaximal(Exception):
    """The second linear strand is zero below the dual end: nothing to analyze."""


class AnalysisIncomplete(RuntimeError):
    def __init__(self, stage: str, partial: dict):
        super().__init__(f"analysis incomplete at {stage}")
        self.stage = stage
        self.partial = partial


def critical_index(g: int) -> int:
    if g < 4:
        raise ValueError("genus must be at least 4")
    return math.ceil((g - 2) / 2)


def green_profile(table: BettiTable) -> int:
    """Largest p ≥ 0 with β_{i,i+2} = 0 for 1 ≤ i ≤ p (so 0 means β_{1,3} ≠ 0)."""
    g = table.genus
    top = (g - 2) if g else table.length
    p = 0
    for i in range(1, top):
        if table.get(i, i + 2):
            break
        p = i
    return p


def _betti_of(res) -> BettiTable:
    return res.betti if isinstance(res, CanonicalResolution) else betti_table(res)


def _phi(res, n: int) -> GradedMap:
    if isinstance(res, CanonicalResolution):
        return res.strand2_map(n)
    maps = strand(res, 2)
    if n - 1 < len(maps):
        return maps[n - 1]
    table = betti_table(res)
    ring = res.ring
    return GradedMap(GradedFreeModule(ring, [n + 2] * table.get(n, n + 2)),
                     GradedFreeModule(ring, [n + 1] * table.get(n - 1, n + 1)), [])


def first_nonzero_strand_map(res) -> tuple[int, GradedMap]:
    """Smallest n ≥ 2 with β_{n-1,n+1} ≠ 0 together with φ_n."""
    table = _betti_of(res)
    g = table.genus or res.ring.n
    for n in range(2, g):
        if table.get(n - 1, n + 1):
            if n - 1 >= g - 2:
                break
            return n, _phi(res, n)
    raise GreenVanishingMaximal("second strand vanishes up to the dual end")


@dataclass
class ScrollVerdict:
    dim: int
    degree: int
    codim: int
    minimal_degree: bool
    nondegenerate: bool
    acm: bool
    contained: bool
    plane_quintic_caveat: bool = False

    @property
    def is_scroll(self) -> bool:
        return self.minimal_degree and self.nondegenerate and self.acm and self.contained

    def to_json(self) -> dict:
        d = asdict(self)
        d["is_scroll"] = self.is_scroll
        return d


def scroll_check(ann: Ideal, I_C: Ideal | None, genus: int | None = None) -> ScrollVerdict:
    """Is ``ann`` the ideal of an ACM variety of minimal degree through the curve?"""
    ring = ann.ring
    dim, deg = hilbert_series(ann).dim_deg()
    codim = ring.n - 1 - dim
    minimal = dim >= 0 and deg == codim + 1
    nondeg = not ann.degree_piece(1)
    res = free_resolution(ann)
    acm = res.length == codim
    contained = I_C is not None and all(I_C.contains(f) for f in ann.gb().basis)
    return ScrollVerdict(dim, deg, codim, minimal, nondeg, acm, contained, plane_quintic_caveat=(genus == 6))


@dataclass
class RGCReport:
    genus: int
    char: int
    betti: BettiTable
    m: int
    critical_betti: int
    green_profile: int
    phi_n: dict | None = None
    finite_length: bool | None = None
    hilbert_values: list[int] = field(default_factory=list)
    M_dim: int | None = None
    M_deg: int | None = None
    ann_dim: int | None = None
    ann_deg: int | None = None
    scroll: ScrollVerdict | None = None
    multiplicity_note: bool = False
    status: str = "complete"
    note: str = ""

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def rgc_pair(self) -> tuple[int, int] | None:
        """(deg, dim) as tabulated: finite length reads (length, 0)."""
        if self.finite_length:
            return (self.M_deg, 0)
        if self.ann_deg is None:
            return None
        return (self.ann_deg, self.ann_dim)

    def to_json(self) -> dict:
        return {
            "genus": self.genus, "char": self.char, "betti": self.betti.to_json()["betti"],
            "m": self.m, "critical_betti": self.critical_betti, "green_profile": self.green_profile,
            "phi_n": self.phi_n, "finite_length": self.finite_length, "hilbert_values": self.hilbert_values,
            "M_dim": self.M_dim, "M_deg": self.M_deg, "ann_dim": self.ann_dim, "ann_deg": self.ann_deg,
            "scroll": self.scroll.to_json() if self.scroll else None,
            "multiplicity_note": self.multiplicity_note, "rgc": list(self.rgc_pair()) if self.rgc_pair() else None,
            "status": self.status, "note": self.note,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def finite_length_window(values: list[int], start: int, top: int) -> bool:
    """Hilbert values through degree ``top`` end in at least three zeros."""
    tail = values[max(top - 2 - start, 0): top - start + 1]
    return len(tail) == 3 and not any(tail)


def analyze(res, I_C: Ideal | None = None, genus: int | None = None, with_ann: bool = True) -> RGCReport:
    """Full test battery at the first nonzero map of the second strand."""
    table = _betti_of(res)
    g = genus or table.genus or res.ring.n
    table = BettiTable(dict(table.entries), genus=g, char=res.ring.p)
    m = critical_index(g)
    rep = RGCReport(g, res.ring.p, table, m, table.get(m - 1, m + 1), green_profile(table))
    try:
        n, phi = first_nonzero_strand_map(res)
    except GreenVanishingMaximal:
        n = None
    if n is None or n - 1 >= m:
        # H_{m-1} of the strand is zero: nothing beyond the vanishing itself
        rep.note = "second strand vanishes through the critical position"
        rep.finite_length = True
        rep.M_dim, rep.M_deg = -1, 0
        return rep
    rep.phi_n = {"n": n, "shape": [phi.target.rank, phi.source.rank]}
    M = cokernel(phi)
    hs = M.hilbert_series()
    lo = n + 1
    top = lo + g
    rep.hilbert_values = [hs.value(d) for d in range(lo, top + 1)]
    q, k = hs.reduced()
    exact_finite = not q or k == res.ring.n
    window = finite_length_window(rep.hilbert_values, lo, top)
    if exact_finite != window:
        rep.status = "incomplete"
        rep.note = "finite-length window disagrees with the Hilbert series"
    rep.finite_length = exact_finite
    if exact_finite:
        rep.M_dim, rep.M_deg = -1, sum(q)
        return rep
    rep.M_dim, rep.M_deg = res.ring.n - k - 1, sum(q)
    if not with_ann:
        return rep
    ann = annihilator(M)
    dim, deg = hilbert_series(ann).dim_deg()
    rep.ann_dim, rep.ann_deg = dim, deg
    codim = res.ring.n - 1 - dim
    rep.multiplicity_note = dim >= 0 and deg % (codim + 1) == 0
    if dim >= 0 and deg == codim + 1:
        rep.scroll = scroll_check(ann, I_C, g)
    return rep


def order_ideal_bound_check(res, k: int, samples: int = 2000, seed: int = 0) -> dict:
    """Smallest span of λ^T φ over row combinations λ of the first strand-2
    map at position k-1, against the bound g-1-(k-2)."""
    table = _betti_of(res)
    g = table.genus or res.ring.n
    bound = g - 1 - (k - 2)
    n = k - 1
    if n < 2 or not table.get(n - 1, n + 1):
        return {"applicable": False, "bound": bound}
    phi = _phi(res, n)
    ring = res.ring
    p = ring.p
    rows = phi.target.rank
    # coefficient tensor: rows x columns x variables
    T = np.zeros((rows, phi.source.rank, ring.n), dtype=np.int64)
    for c, col in enumerate(phi.columns):
        for r, f in col.items():
            for exps, coef in f.exponents():
                T[r, c, exps.index(1)] = coef
    best = None
    rng = random.Random(seed)
    total = p ** rows - 1
    if total <= samples:
        lambdas = (v for v in itertools.product(range(p), repeat=rows) if any(v))
    else:
        lambdas = ([rng.randrange(p) for _ in range(rows)] for _ in range(samples))
    for lam in lambdas:
        if not any(lam):
            continue
        combo = np.tensordot(np.array(lam, dtype=np.int64), T, axes=1) % p
        r = rank(combo, p)
        if best is None or r < best:
            best = r
    return {"applicable": True, "bound": bound, "min_span": best, "holds": best is not None and best <= bound,
            "exhaustive": total <= samples}


__all__ = [
    "GreenVanishingMaximal", "AnalysisIncomplete", "critical_index", "green_profile",
    "first_nonzero_strand_map", "ScrollVerdict", "scroll_check", "RGCReport", "analyze",
    "order_ideal_bound_check", "finite_length_window",
]
