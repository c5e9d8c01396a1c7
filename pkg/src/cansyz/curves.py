"""Random canonical curves from nodal plane models.

A plane curve of degree d with delta ordinary nodes (and, for gonal models,
one ordinary point of multiplicity d-k) has geometric genus g; its adjoint
forms of degree d-3 map it canonically to P^{g-1}. Nodes are rational points
or Galois orbits of closed points of small degree, encoded by their
coordinates in F_p[X]/(h) so that every condition stays linear over F_p.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .field import PrimeField, UniPoly, random_irreducible, unipoly_gcd
from .groebner import Ideal, hilbert_series, intersect
from .linalg import left_nullspace, rank, row_space
from .poly import Polynomial, PolyRing


class UnsupportedGenusError(ValueError):
    pass


class ConstructionError(RuntimeError):
    """One construction step failed; ``clause`` names it for retry statistics."""

    def __init__(self, clause: str, detail: str = ""):
        super().__init__(f"{clause}: {detail}" if detail else clause)
        self.clause = clause


class ConstructionExhausted(RuntimeError):
    def __init__(self, attempts: int, failures: dict[str, int]):
        super().__init__(f"no curve after {attempts} attempts: {failures}")
        self.attempts = attempts
        self.failures = failures


# ---------------------------------------------------------------- parameters

def plane_model_params(g: int) -> tuple[int, int]:
    if not 4 <= g <= 10:
        raise UnsupportedGenusError(f"genus {g} is outside 4..10; ingest external ideals instead")
    d = math.ceil((2 * g + 6) / 3)
    return d, (d - 1) * (d - 2) // 2 - g


def gonal_model_params(g: int, k: int, cap: int = 30) -> tuple[int, int, int]:
    """(d, mult, delta) for a model with one ordinary (d-k)-fold point and delta nodes.

    Smallest d ≥ k+2 whose system is nonempty and whose family of models has
    at least the dimension 2g+2k-5 of the k-gonal locus, so that a random
    model is a general k-gonal curve rather than one with an extra plane model.
    """
    if not 4 <= g <= 10:
        raise UnsupportedGenusError(f"genus {g} is outside 4..10")
    if k < 2:
        raise ValueError("gonality must be at least 2")
    target = min(2 * g + 2 * k - 5, 3 * g - 3)
    for d in range(k + 2, cap):
        mult = d - k
        delta = (d - 1) * (d - 2) // 2 - math.comb(mult, 2) - g
        if delta < 0:
            continue
        free = (d + 1) * (d + 2) // 2 - mult * (mult + 1) // 2 - 3 * delta
        # projective system, moving singular points, modulo PGL_3
        family = (free - 1) + 2 + 2 * delta - 8
        if free >= 1 and family >= target:
            return d, mult, delta
    raise UnsupportedGenusError(f"no gonal model for g={g}, k={k} below degree {cap}")


def rgc_range(g: int, k: int) -> dict[str, bool]:
    """Which conjectural ranges the gonality k falls in."""
    return {"refined": 2 < k < math.ceil((g + 2) / 2), "ssw": k < math.ceil(g / 2)}


# ---------------------------------------------------------------- node schemes

@dataclass
class ClosedPoint:
    """A closed point of P^2 over F_p: coordinates in F_p[X]/(h), deg h = e."""

    h: UniPoly
    coords: tuple[UniPoly, UniPoly, UniPoly]

    @property
    def degree(self) -> int:
        return self.h.degree

    def rational(self) -> tuple[int, int, int] | None:
        if self.degree != 1:
            return None
        root = (-self.h.coeffs[0]) % self.h.field.p
        return tuple(c(root) for c in self.coords)

    def describe(self) -> dict:
        return {"degree": self.degree, "h": list(self.h.coeffs), "coords": [list(c.coeffs) for c in self.coords]}


@dataclass
class NodeScheme:
    ring: PolyRing
    points: list[ClosedPoint]

    @property
    def degree(self) -> int:
        return sum(pt.degree for pt in self.points)

    def describe(self) -> list[dict]:
        return [pt.describe() for pt in self.points]

    # evaluation matrices ------------------------------------------------
    def _values(self, pt: ClosedPoint, exps_list) -> np.ndarray:
        e = pt.degree
        maxd = max((sum(x) for x in exps_list), default=0)
        F = pt.h.field
        pows = []
        for c in pt.coords:
            row = [UniPoly.constant(F, 1)]
            for _ in range(maxd):
                row.append((row[-1] * c) % pt.h)
            pows.append(row)
        out = np.zeros((len(exps_list), e), dtype=np.int64)
        for r, (a, b, cexp) in enumerate(exps_list):
            v = (pows[0][a] * pows[1][b]) % pt.h
            v = (v * pows[2][cexp]) % pt.h
            for i, x in enumerate(v.coeffs):
                out[r, i] = x
        return out

    def conditions(self, k: int, order: int = 1) -> np.ndarray:
        """Matrix with rows indexed by monomials(k); a form vanishes (to order 2 when
        ``order`` is 2) on the scheme iff its coefficient row kills every column."""
        ring = self.ring
        monos = [ring.decode(m) for m in ring.monomials(k)]
        blocks = []
        for pt in self.points:
            blocks.append(self._values(pt, monos))
            if order >= 2:
                for var in range(3):
                    scaled = []
                    lowered = []
                    for ex in monos:
                        a = ex[var]
                        if a == 0:
                            lowered.append((0, 0, 0))
                            scaled.append(0)
                        else:
                            ex2 = list(ex)
                            ex2[var] -= 1
                            lowered.append(tuple(ex2))
                            scaled.append(a % ring.p)
                    vals = self._values(pt, lowered) * np.array(scaled, dtype=np.int64)[:, None]
                    blocks.append(vals % ring.p)
        if not blocks:
            return np.zeros((len(monos), 0), dtype=np.int64)
        return np.concatenate(blocks, axis=1)

    def piece(self, k: int, order: int = 1, allowed=None) -> list[Polynomial]:
        """Basis of forms of degree k vanishing on the scheme (doubly when order = 2),
        optionally restricted to monomials selected by ``allowed(exps)``."""
        ring = self.ring
        monos = ring.monomials(k)
        C = self.conditions(k, order)
        keep = [i for i, m in enumerate(monos) if allowed is None or allowed(ring.decode(m))]
        C = C[keep]
        if C.shape[1] == 0:
            K = np.eye(len(keep), dtype=np.int64)
        else:
            K = left_nullspace(C, ring.p)
        out = []
        for row in K:
            terms = {monos[keep[i]]: int(c) for i, c in enumerate(row) if c}
            out.append(Polynomial(ring, terms))
        return out

    def ideal(self) -> Ideal:
        """Generators in degrees up to one past the point where the conditions saturate."""
        ring = self.ring
        delta = self.degree
        if delta == 0:
            return Ideal(ring, [ring.one()])
        gens = []
        k = 1
        while True:
            gens.extend(self.piece(k))
            if rank(self.conditions(k), ring.p) == delta and k >= 2:
                gens.extend(self.piece(k + 1))
                break
            k += 1
        return Ideal(ring, gens)


def plane_ring(p: int) -> PolyRing:
    return PolyRing(PrimeField(p), ("x", "y", "z"))


def _projective_points(p: int):
    for a in range(p):
        for b in range(p):
            yield (a, b, 1)
    for a in range(p):
        yield (a, 1, 0)
    yield (1, 0, 0)


def _normalize(pt, p):
    for c in pt:
        if c % p:
            inv = pow(c, -1, p)
            return tuple(x * inv % p for x in pt)
    raise ValueError("zero vector is not a point")


def _random_gl3(p: int, rng: random.Random) -> list[list[int]]:
    while True:
        T = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
        det = (T[0][0] * (T[1][1] * T[2][2] - T[1][2] * T[2][1])
               - T[0][1] * (T[1][0] * T[2][2] - T[1][2] * T[2][0])
               + T[0][2] * (T[1][0] * T[2][1] - T[1][1] * T[2][0])) % p
        if det:
            return T


def random_node_scheme(delta: int, ring: PolyRing, p: int, max_orbit_deg: int, rng: random.Random,
                       avoid: Sequence[tuple[int, int, int]] = (), n_rational: int | None = None) -> NodeScheme:
    """delta reduced points: rational ones while at least delta+3 are available, the rest as orbits."""
    F = PrimeField(p)
    avoid_n = {_normalize(a, p) for a in avoid}
    rational = [q for q in _projective_points(p) if q not in avoid_n]
    n_rat_avail = len(rational)
    if n_rat_avail >= delta + 3:
        n_rat = delta
    else:
        n_rat = max(min(delta, n_rat_avail - 3), 0)
    if n_rational is not None:
        n_rat = min(n_rational, n_rat)
    chosen = rng.sample(rational, n_rat)
    points = [ClosedPoint(UniPoly(F, (0, 1)), tuple(UniPoly(F, (c,)) for c in q)) for q in chosen]
    spare = [q for q in rational if q not in set(chosen)]
    rem = delta - n_rat
    seen_orbits = set()
    guard = 0
    while rem > 0:
        guard += 1
        if guard > 1000:
            raise ConstructionError("node_scheme", "could not place orbit points")
        top = min(max_orbit_deg, rem)
        if top < 2:
            if not spare:
                raise ConstructionError("node_scheme", "orbit-degree cap too small")
            q = spare.pop(rng.randrange(len(spare)))
            points.append(ClosedPoint(UniPoly(F, (0, 1)), tuple(UniPoly(F, (c,)) for c in q)))
            rem -= 1
            continue
        e = rng.randint(2, top)
        h = random_irreducible(e, F, rng)
        a = UniPoly(F, [rng.randrange(p) for _ in range(e)])
        key = (h.coeffs, a.coeffs)
        if key in seen_orbits:
            continue
        seen_orbits.add(key)
        base = (UniPoly(F, (0, 1)), a, UniPoly(F, (1,)))
        T = _random_gl3(p, rng)
        coords = tuple(sum((base[j] * T[i][j] for j in range(3)), UniPoly(F, ())) % h for i in range(3))
        points.append(ClosedPoint(h, coords))
        rem -= e
    return NodeScheme(ring, points)


# ---------------------------------------------------------------- plane curves

def random_nodal_curve(d: int, nodes: NodeScheme, rng: random.Random, mult_point: int = 0) -> Polynomial:
    """Uniform nonzero form of degree d singular at the nodes (and with an
    ordinary-to-be point of multiplicity ``mult_point`` at (0:0:1))."""
    allowed = (lambda ex: ex[0] + ex[1] >= mult_point) if mult_point else None
    basis = nodes.piece(d, order=2, allowed=allowed)
    if not basis:
        raise ConstructionError("empty_system", f"no degree-{d} forms with the prescribed singularities")
    ring = nodes.ring
    for _ in range(64):
        f = ring.zero()
        for b in basis:
            f = f + b.scale(rng.randrange(ring.p))
        if f.terms:
            return f
    raise ConstructionError("empty_system", "sampled the zero form repeatedly")


@dataclass
class NodalReport:
    passed: bool
    clauses: dict[str, bool]
    details: dict = field(default_factory=dict)

    def first_failure(self) -> str | None:
        for k, v in self.clauses.items():
            if not v:
                return k
        return None


def _tangent_cone_ok(f: Polynomial, pt: tuple[int, int, int]) -> bool:
    """Quadratic part of f at a rational point is a squarefree binary form."""
    ring = f.ring
    p = ring.p
    i = next(k for k in range(3) if pt[k])
    inv = pow(pt[i], -1, p)
    pt = tuple(c * inv % p for c in pt)
    loc = PolyRing(ring.field, ("u", "v"))
    others = [k for k in range(3) if k != i]
    images = [None, None, None]
    images[i] = loc.one()
    images[others[0]] = loc.gen(0) + pt[others[0]]
    images[others[1]] = loc.gen(1) + pt[others[1]]
    g = f.substitute(images)
    low = {}
    for exps, c in g.exponents():
        s = sum(exps)
        if s < 2:
            return False
        if s == 2:
            low[exps] = c
    a = low.get((2, 0), 0)
    b = low.get((1, 1), 0)
    c = low.get((0, 2), 0)
    if p == 2:
        return b != 0
    return (b * b - 4 * a * c) % p != 0


def _binary_form_squarefree(coeffs: dict[int, int], m: int, field: PrimeField) -> bool:
    """coeffs[a] = coefficient of x^a y^(m-a)."""
    hcoef = [coeffs.get(a, 0) for a in range(m + 1)]
    h = UniPoly(field, hcoef)
    if h.is_zero() or h.degree < m - 1:
        return False
    g = unipoly_gcd(h, h.derivative())
    return g.degree == 0


def saturate_by_variable(I: Ideal, var: int) -> Ideal:
    """(I : x_var^∞) from a grevlex basis with x_var last."""
    ring = I.ring
    n = ring.n
    perm = [k for k in range(n) if k != var] + [var]
    names = [ring.names[k] for k in perm]
    R2 = PolyRing(ring.field, names, weights=[ring.weights[k] for k in perm])
    to2 = [perm.index(k) for k in range(n)]
    J = Ideal(R2, [g.to_ring(R2, to2) for g in I.gens])
    out = []
    last = n - 1
    for g in J.gb().basis:
        e = min(ex[last] for ex, _ in g.exponents())
        terms = {}
        for ex, c in g.exponents():
            ex2 = list(ex)
            ex2[last] -= e
            terms[tuple(ex2)] = c
        out.append(R2.from_dict(terms).to_ring(ring, perm))
    return Ideal(ring, out)


def verify_nodal(f: Polynomial, nodes: NodeScheme, mult_point: int = 0) -> NodalReport:
    """Singular scheme equals the node scheme (plus the prescribed multiple point),
    rational nodes are ordinary, and the multiple point has distinct tangents."""
    ring = f.ring
    clauses = {}
    details = {}
    J = Ideal(ring, [f] + [f.derivative(i) for i in range(3)])
    if mult_point:
        # remove the contribution of the point (0:0:1)
        J = intersect(saturate_by_variable(J, 0), saturate_by_variable(J, 1))
    N = nodes.ideal()
    inside = all(N.contains(g) for g in J.gens)
    dim, deg = hilbert_series(J).dim_deg()
    details["singular_scheme"] = {"dim": dim, "deg": deg}
    delta = nodes.degree
    if delta == 0:
        clauses["singular_scheme"] = dim == -1
    else:
        clauses["singular_scheme"] = inside and dim == 0 and deg == delta
    ok = True
    for pt in nodes.points:
        q = pt.rational()
        if q is not None and not _tangent_cone_ok(f, q):
            ok = False
            break
    clauses["ordinary_nodes"] = ok
    if mult_point:
        cone = {}
        low_ok = True
        for exps, c in f.exponents():
            s = exps[0] + exps[1]
            if s < mult_point:
                low_ok = False
            elif s == mult_point:
                cone[exps[0]] = c
        clauses["multiple_point"] = low_ok and _binary_form_squarefree(cone, mult_point, ring.field)
    return NodalReport(all(clauses.values()), clauses, details)


# ---------------------------------------------------------------- canonical ideal

def canonical_ring(g: int, p: int) -> PolyRing:
    return PolyRing(PrimeField(p), tuple(f"w{i}" for i in range(g)))


def adjoint_basis(d: int, nodes: NodeScheme, mult_point: int = 0) -> list[Polynomial]:
    allowed = (lambda ex: ex[0] + ex[1] >= mult_point - 1) if mult_point > 1 else None
    return nodes.piece(d - 3, order=1, allowed=allowed)


def _random_invertible(n: int, p: int, rng: random.Random) -> np.ndarray:
    while True:
        A = np.array([[rng.randrange(p) for _ in range(n)] for _ in range(n)], dtype=np.int64)
        if rank(A, p) == n:
            return A


def _kernel_piece(f: Polynomial, adj: Sequence[Polynomial], S: PolyRing, n: int) -> list[Polynomial]:
    """Forms of degree n in S whose image under w_i -> adj[i] lies in (f)."""
    R = f.ring
    p = R.p
    e = len(adj)
    target_deg = n * adj[0].degree()
    tidx = R.monomial_index(target_deg)
    monos = S.monomials(n)
    rows = []
    cache = {}
    for m in monos:
        ex = S.decode(m)
        img = R.one()
        for i, a in enumerate(ex):
            if a:
                key = (i, a)
                if key not in cache:
                    cache[key] = adj[i] ** a
                img = img * cache[key]
        v = [0] * len(tidx)
        for k, c in img.terms.items():
            v[tidx[k]] = c
        rows.append(v)
    low = target_deg - f.degree()
    extra = []
    if low >= 0:
        for m in R.monomials(low):
            v = [0] * len(tidx)
            for k, c in f.mul_monomial(m).terms.items():
                v[tidx[k]] = c
            extra.append(v)
    M = np.array(rows + extra, dtype=np.int64)
    K = left_nullspace(M, p)
    out = []
    for row in K:
        head = row[: len(monos)]
        if not head.any():
            continue
        out.append(S.from_vector(head, n))
    # projection to the first block is injective because f·(forms) are independent
    return out


def canonical_ideal(f: Polynomial, adjoints: Sequence[Polynomial], g: int, rng: random.Random | None = None) -> Ideal:
    """Canonical ideal I_C ⊂ F_p[w_0..w_{g-1}] as I_2 plus complementary cubics."""
    if len(adjoints) != g:
        raise ConstructionError("adjoint_dimension", f"{len(adjoints)} adjoint forms, expected {g}")
    R = f.ring
    p = R.p
    S = canonical_ring(g, p)
    adj = list(adjoints)
    if rng is not None:
        A = _random_invertible(g, p, rng)
        adj = [sum((adjoints[j].scale(int(A[i, j])) for j in range(g)), R.zero()) for i in range(g)]
    I2 = _kernel_piece(f, adj, S, 2)
    I3 = _kernel_piece(f, adj, S, 3)
    gens = list(I2)
    # cubics not already in V·I_2
    idx3 = S.monomial_index(3)
    span = []
    for q in I2:
        for u in range(g):
            v = [0] * len(idx3)
            for k, c in q.mul_monomial(S.var(u)).terms.items():
                v[idx3[k]] = c
            span.append(v)
    base = rank(np.array(span, dtype=np.int64), p) if span else 0
    cur = np.array(span, dtype=np.int64) if span else np.zeros((0, len(idx3)), dtype=np.int64)
    for c in I3:
        vec = np.array([c.to_vector(3)], dtype=np.int64)
        trial = np.vstack([cur, vec])
        r = rank(trial, p)
        if r > base:
            gens.append(c)
            cur = row_space(trial, p).astype(np.int64)
            base = r
    return Ideal(S, gens)


def canonical_ideal_by_elimination(f: Polynomial, adjoints: Sequence[Polynomial], g: int) -> Ideal:
    """Cross-check: eliminate x,y,z from ⟨f, w_i - A_i⟩ with weights 1 on x,y,z and d-3 on w."""
    from .groebner import eliminate
    R = f.ring
    e = adjoints[0].degree()
    names = ("x", "y", "z") + tuple(f"w{i}" for i in range(g))
    big = PolyRing(R.field, names, weights=(1, 1, 1) + (e,) * g)
    emb = [0, 1, 2]
    gens = [f.to_ring(big, emb)]
    for i, a in enumerate(adjoints):
        gens.append(big.gen(3 + i) - a.to_ring(big, emb))
    elim = eliminate(Ideal(big, gens), 3)
    S = canonical_ring(g, R.p)
    return Ideal(S, [h.to_ring(S, list(range(g))) for h in elim.gens])


@dataclass
class CanonicalReport:
    passed: bool
    clauses: dict[str, bool]
    hilbert_polynomial: list[int] = field(default_factory=list)
    dim_deg: tuple[int, int] = (0, 0)

    def first_failure(self) -> str | None:
        for k, v in self.clauses.items():
            if not v:
                return k
        return None


def is_saturated(I: Ideal, tries: int = 3, seed: int = 0) -> bool:
    """Bayer-Stillman test: no minimal generator of in(I) (grevlex) involves the last
    variable; random coordinate changes guard against special position."""
    ring = I.ring
    n = ring.n
    rng = random.Random(seed)
    J = I
    for t in range(tries + 1):
        leads = J.gb().lead_exponents()
        if not any(ex[n - 1] for ex in leads):
            return True
        A = _random_invertible(n, ring.p, rng)
        xs = ring.gens()
        images = [sum((xs[j].scale(int(A[i, j])) for j in range(n)), ring.zero()) for i in range(n)]
        J = Ideal(ring, [g.substitute(images) for g in I.gens])
    return False


def verify_canonical(I: Ideal, g: int) -> CanonicalReport:
    S = I.ring
    clauses = {}
    hs = hilbert_series(I)
    hp = hs.hilbert_polynomial()
    hp_int = [int(c) for c in hp] if all(c.denominator == 1 for c in hp) else []
    clauses["hilbert_polynomial"] = hp_int == [1 - g, 2 * g - 2]
    dd = hs.dim_deg()
    clauses["dim_deg"] = dd == (1, 2 * g - 2)
    quadrics = I.degree_piece(2)
    clauses["quadrics"] = len(quadrics) == (g - 2) * (g - 3) // 2
    clauses["saturated"] = is_saturated(I) if clauses["dim_deg"] else False
    clauses["nondegenerate"] = not I.degree_piece(1)
    return CanonicalReport(all(clauses.values()), clauses, hp_int, dd)


# ---------------------------------------------------------------- driver

@dataclass
class CurveRecord:
    ideal: Ideal
    genus: int
    char: int
    meta: dict = field(default_factory=dict)
    report: dict = field(default_factory=dict)

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring


def attempt_rng(seed: int, attempt: int) -> random.Random:
    digest = hashlib.sha256(f"curve:{seed}:{attempt}".encode()).digest()
    return random.Random(int.from_bytes(digest[:16], "big"))


NODE_POLICIES = ("orbit", "rational")


def construct_once(g: int, p: int, rng: random.Random, gonality: int | None = None, max_orbit_deg: int = 4,
                   node_policy: str = "orbit"):
    """One pass of the pipeline; raises ConstructionError naming the failed step.

    With ``node_policy="orbit"`` nodes are closed points of degree >= 2 (a single
    rational point only fills a remainder of one). Uniformly chosen rational
    nodes over small fields are often collinear in fours, forcing a line
    component; the nodes are an artifact of the projection, so their fields of
    definition carry no information about the curve itself.
    """
    if node_policy not in NODE_POLICIES:
        raise ValueError(f"unknown node policy {node_policy!r}")
    R = plane_ring(p)
    if gonality is None:
        d, delta = plane_model_params(g)
        mult = 0
    else:
        d, mult, delta = gonal_model_params(g, gonality)
    avoid = [(0, 0, 1)] if mult else []
    n_rat = 0 if node_policy == "orbit" else None
    nodes = random_node_scheme(delta, R, p, max_orbit_deg, rng, avoid=avoid, n_rational=n_rat)
    adj = adjoint_basis(d, nodes, mult)
    if len(adj) != g:
        raise ConstructionError("adjoint_dimension", f"{len(adj)} != {g}")
    f = random_nodal_curve(d, nodes, rng, mult)
    rep = verify_nodal(f, nodes, mult)
    if not rep.passed:
        raise ConstructionError(rep.first_failure())
    I = canonical_ideal(f, adj, g, rng)
    crep = verify_canonical(I, g)
    if not crep.passed:
        raise ConstructionError(crep.first_failure())
    meta = {
        "route": "gonal" if mult else "general",
        "node_policy": node_policy,
        "d": d, "delta": delta, "mult": mult, "gonality": gonality,
        "plane_curve": str(f),
        "nodes": nodes.describe(),
        "orbit_nodes": sum(1 for pt in nodes.points if pt.degree > 1),
    }
    return I, meta, {"nodal": rep.clauses, "canonical": crep.clauses,
                     "hilbert_polynomial": crep.hilbert_polynomial}


def random_canonical_curve(g: int, p: int, seed: int, gonality: int | None = None,
                           attempt_cap: int | None = None, max_orbit_deg: int = 4,
                           node_policy: str = "orbit") -> CurveRecord:
    PrimeField(p)
    if gonality is None:
        plane_model_params(g)
    else:
        gonal_model_params(g, gonality)
    cap = attempt_cap if attempt_cap is not None else 10 * p * p
    failures: dict[str, int] = {}
    for attempt in range(cap):
        rng = attempt_rng(seed, attempt)
        try:
            I, meta, report = construct_once(g, p, rng, gonality, max_orbit_deg, node_policy)
        except ConstructionError as exc:
            failures[exc.clause] = failures.get(exc.clause, 0) + 1
            continue
        meta.update({"seed": seed, "attempts": attempt + 1, "failures": failures})
        return CurveRecord(I, g, p, meta, report)
    raise ConstructionExhausted(cap, failures)


__all__ = [
    "UnsupportedGenusError", "ConstructionError", "ConstructionExhausted",
    "plane_model_params", "gonal_model_params", "rgc_range", "ClosedPoint", "NodeScheme",
    "plane_ring", "random_node_scheme", "random_nodal_curve", "verify_nodal", "NodalReport",
    "canonical_ring", "adjoint_basis", "canonical_ideal", "canonical_ideal_by_elimination",
    "verify_canonical", "CanonicalReport", "is_saturated", "CurveRecord",
    "random_canonical_curve", "construct_once", "attempt_rng", "saturate_by_variable",
]
