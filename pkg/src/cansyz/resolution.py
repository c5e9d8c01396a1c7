"""Free resolutions and Betti numbers, with a Koszul-cohomology oracle.

Two routes are provided:

* ``free_resolution`` builds a Schreyer frame from a Gröbner basis (each
  level's syzygies already form a Gröbner basis for the induced order) and
  cancels unit entries afterwards.
* ``canonical_resolution`` handles Gorenstein curves of codimension g-2: the
  first linear strand comes from exact kernels of multiplication maps and the
  rest of the table, including the second strand maps, from self-duality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .betti import BettiTable
from .groebner import Ideal, Reducer, RingOrder, SchreyerOrder
from .linalg import left_nullspace, rank
from .modules import GradedFreeModule, GradedMap, keys_to_column
from .poly import Polynomial, PolyRing


class NonMinimalError(ValueError):
    pass


class OracleBudgetError(RuntimeError):
    """Raised when a Koszul complex piece exceeds the configured size cap."""


@dataclass
class FreeResolution:
    """F_0 <- F_1 <- ... with ``maps[i-1]: F_i -> F_{i-1}``."""

    ring: PolyRing
    maps: list[GradedMap]
    minimal: bool = False

    @property
    def modules(self) -> list[GradedFreeModule]:
        if not self.maps:
            return [GradedFreeModule(self.ring, [0])]
        return [self.maps[0].target] + [m.source for m in self.maps]

    @property
    def length(self) -> int:
        mods = self.modules
        n = len(mods) - 1
        while n > 0 and mods[n].rank == 0:
            n -= 1
        return n

    def is_complex(self) -> bool:
        for a, b in zip(self.maps, self.maps[1:]):
            if not a.compose(b).is_zero():
                return False
        return True


# ---------------------------------------------------------------- Schreyer frame

def _schreyer_level(ring: PolyRing, elems: list[dict], order):
    """Syzygies of a Gröbner basis ``elems`` (monic key dicts in ``order``).

    Returns ``(syz, new_order)`` where ``syz`` are monic key dicts in the
    induced order and already form a Gröbner basis there.
    """
    p = ring.p
    leads = [max(e) for e in elems]
    twists = [order.degree(l) for l in leads]
    new_order = SchreyerOrder(order, leads, twists)
    red = Reducer(ring, elems, order)
    info = [order.split(l) for l in leads]
    syz = []
    for j in range(len(elems)):
        cj, mj = info[j]
        cands = []
        for i in range(j):
            ci, mi = info[i]
            if ci != cj:
                continue
            L = ring.mono_lcm(mi, mj)
            cands.append((ring.mono_div(L, mj), i, L))
        # keep minimal generators of the monomial ideal of quotients
        cands.sort(key=lambda t: (ring.mono_degree(t[0]), t[0], t[1]))
        chosen: list[tuple[int, int, int]] = []
        for q, i, L in cands:
            if any(ring.mono_divides(q2, q) for q2, _, _ in chosen):
                continue
            chosen.append((q, i, L))
        for q, i, L in chosen:
            Lk = order.join(cj, L)
            oi, oj = Lk - leads[i], Lk - leads[j]
            s = {k + oj: v for k, v in elems[j].items()}
            for k, v in elems[i].items():
                nk = k + oi
                t = (s.get(nk, 0) - v) % p
                if t:
                    s[nk] = t
                else:
                    s.pop(nk, None)
            rem, quo = red.reduce(s, full=True, record=True)
            if rem:
                raise ArithmeticError("input is not a Gröbner basis")
            vec: dict[int, int] = {}

            def addterm(c, mono, coef):
                key = new_order.join(c, mono)
                v = (vec.get(key, 0) + coef) % p
                if v:
                    vec[key] = v
                else:
                    vec.pop(key, None)

            addterm(j, ring.mono_div(L, mj), 1)
            addterm(i, ring.mono_div(L, info[i][1]), p - 1)
            for idx, tm, coef in quo:
                addterm(idx, tm, p - coef)
            syz.append(vec)
    return syz, new_order


def _sorted_level(elems: list[dict], order, var: int) -> list[dict]:
    shift = order.ring.shifts[var]
    # larger stored field means smaller exponent
    return sorted(elems, key=lambda e: -((order.split(max(e))[1] >> shift) & 0xFFFF))


def schreyer_frame(I: Ideal, max_len: int | None = None) -> FreeResolution:
    """Non-minimal resolution of S/I read off a Gröbner basis by Schreyer's theorem."""
    ring = I.ring
    gb = I.gb().basis
    if not gb:
        return FreeResolution(ring, [])
    order = RingOrder(ring)
    # sorting each level by the exponent of one variable keeps that variable
    # out of the next level's leading terms, so the frame has length <= n
    elems = _sorted_level([dict(g.terms) for g in gb], order, 0)
    F0 = GradedFreeModule(ring, [0])
    polys = [Polynomial(ring, e) for e in elems]
    maps = [GradedMap(GradedFreeModule(ring, [f.degree() for f in polys]), F0, [{0: f} for f in polys])]
    level = 1
    cap = max_len if max_len is not None else ring.n + 1
    while elems and level < cap:
        syz, new_order = _schreyer_level(ring, elems, order)
        if not syz:
            break
        syz = _sorted_level(syz, new_order, level % ring.n)
        src_tw = [new_order.degree(max(s)) for s in syz]
        cols = [keys_to_column(s, new_order) for s in syz]
        maps.append(GradedMap(GradedFreeModule(ring, src_tw), maps[-1].source, cols))
        elems, order = syz, new_order
        level += 1
    return FreeResolution(ring, maps)


# ---------------------------------------------------------------- minimalization

def minimalize(res: FreeResolution) -> FreeResolution:
    """Cancel all unit entries by Gaussian elimination on the differentials."""
    ring = res.ring
    p = ring.p
    one = ring.ONE
    # mutable copies: per map, list of columns (dict row -> Polynomial)
    cols = [[dict(c) for c in m.columns] for m in res.maps]
    tws = [list(m.target.twists) for m in res.maps[:1]] + [list(m.source.twists) for m in res.maps]
    alive = [set(range(len(t))) for t in tws]

    for i in range(len(cols)):
        A = cols[i]                  # F_{i+1} -> F_i
        changed = True
        while changed:
            changed = False
            for c in sorted(alive[i + 1], key=lambda c: (tws[i + 1][c], c)):
                col = A[c]
                unit_row = None
                for r in sorted(col):
                    f = col[r]
                    if len(f.terms) == 1 and one in f.terms:
                        unit_row = r
                        break
                if unit_row is None:
                    continue
                r = unit_row
                u = col[r].terms[one]
                uinv = pow(u, -1, p)
                # clear row r in the other columns
                for c2 in alive[i + 1]:
                    if c2 == c:
                        continue
                    a = A[c2].get(r)
                    if a is None:
                        continue
                    factor = a.scale(uinv)
                    tgt = A[c2]
                    for rr, f in col.items():
                        nv = tgt.get(rr, ring.zero()) - f * factor
                        if nv.terms:
                            tgt[rr] = nv
                        else:
                            tgt.pop(rr, None)
                # drop generator c of F_{i+1} and r of F_i
                alive[i + 1].discard(c)
                alive[i].discard(r)
                A[c] = {}
                for c2 in alive[i + 1]:
                    A[c2].pop(r, None)
                if i > 0:
                    cols[i - 1][r] = {}
                if i + 1 < len(cols):
                    for col2 in cols[i + 1]:
                        col2.pop(c, None)
                changed = True
                break

    maps = []
    index = [sorted(a, key=lambda c: (tws[k][c], c)) for k, a in enumerate(alive)]
    for i, A in enumerate(cols):
        rpos = {r: n for n, r in enumerate(index[i])}
        newcols = [{rpos[r]: f for r, f in A[c].items()} for c in index[i + 1]]
        src = GradedFreeModule(ring, [tws[i + 1][c] for c in index[i + 1]])
        tgt = GradedFreeModule(ring, [tws[i][r] for r in index[i]])
        maps.append(GradedMap(src, tgt, newcols))
    while maps and maps[-1].source.rank == 0:
        maps.pop()
    return FreeResolution(ring, maps, minimal=True)


def free_resolution(I: Ideal, max_len: int | None = None) -> FreeResolution:
    return minimalize(schreyer_frame(I, max_len))


def betti_table(res: FreeResolution, genus: int | None = None) -> BettiTable:
    if not res.minimal or any(m.has_unit_entry() for m in res.maps):
        raise NonMinimalError("Betti numbers need a minimal resolution")
    entries: dict[tuple[int, int], int] = {}
    for i, F in enumerate(res.modules):
        for j in F.twists:
            entries[(i, j)] = entries.get((i, j), 0) + 1
    return BettiTable(entries, genus=genus, char=res.ring.p)


def strand(res: FreeResolution, which: int = 2) -> list[GradedMap]:
    """Maps of the ``which``-th linear strand: entry i maps F_{i+1} to F_i in
    internal degrees (i + which + 1) -> (i + which)."""
    out = []
    for i, m in enumerate(res.maps):
        rows = [r for r, t in enumerate(m.target.twists) if t == i + which]
        cols = [c for c, t in enumerate(m.source.twists) if t == i + 1 + which]
        out.append(m.submatrix(rows, cols))
    return out


# ---------------------------------------------------------------- Koszul oracle

def koszul_betti(I: Ideal, i: int, j: int, cap: int = 40000) -> int:
    """β_{i,j}(S/I) as middle homology of the Koszul complex on the quotient ring.

    Raises ``OracleBudgetError`` when the middle space exceeds ``cap``.
    """
    ring = I.ring
    n = ring.n
    if any(w != 1 for w in ring.weights):
        raise ValueError("the Koszul oracle needs a standard graded ring")
    if i < 0 or j < i:
        return 0
    q = j - i
    A = _QuotientPieces(I)
    dim_mid = _binom(n, i) * A.dim(q)
    if dim_mid > cap:
        raise OracleBudgetError("oracle out of budget")
    if dim_mid == 0:
        return 0
    # ∂: Λ^{a}V⊗A_b -> Λ^{a-1}V⊗A_{b+1}
    out_rank = _koszul_rank(A, n, i, q, ring.p)
    in_rank = _koszul_rank(A, n, i + 1, q - 1, ring.p)
    return dim_mid - out_rank - in_rank


def _binom(n, k):
    from math import comb
    return comb(n, k) if 0 <= k <= n else 0


def _koszul_rank(A, n: int, a: int, b: int, p: int) -> int:
    if a <= 0 or b < 0:
        return 0
    src_basis = list(itertools.combinations(range(n), a))
    tgt_basis = {s: k for k, s in enumerate(itertools.combinations(range(n), a - 1))}
    db, db1 = A.dim(b), A.dim(b + 1)
    if not src_basis or db == 0 or db1 == 0:
        return 0
    M = np.zeros((len(src_basis) * db, len(tgt_basis) * db1), dtype=np.int64)
    mult = A.mult_tables(b)
    for si, S in enumerate(src_basis):
        for pos, x in enumerate(S):
            sign = 1 if pos % 2 == 0 else p - 1
            ti = tgt_basis[S[:pos] + S[pos + 1:]]
            # rows si*db + m, cols ti*db1 + k
            M[si * db:(si + 1) * db, ti * db1:(ti + 1) * db1] += sign * mult[x]
    return rank(M % p, p)


class _QuotientPieces:
    """Graded pieces of S/I via standard monomials and multiplication tables."""

    def __init__(self, I: Ideal):
        self.ring = I.ring
        self.gb = I.gb()
        self._std: dict[int, list[int]] = {}
        self._tables: dict[int, list[np.ndarray]] = {}

    def std(self, d: int) -> list[int]:
        if d not in self._std:
            self._std[d] = self.gb.standard_monomials(d) if d >= 0 else []
        return self._std[d]

    def dim(self, d: int) -> int:
        return len(self.std(d))

    def mult_tables(self, d: int) -> list[np.ndarray]:
        """For each variable x, the matrix of multiplication A_d -> A_{d+1}."""
        if d in self._tables:
            return self._tables[d]
        ring = self.ring
        src, tgt = self.std(d), self.std(d + 1)
        pos = {m: k for k, m in enumerate(tgt)}
        red = self.gb.reducer()
        tabs = []
        for x in range(ring.n):
            T = np.zeros((len(src), len(tgt)), dtype=np.int64)
            v = ring.var(x)
            for r, m in enumerate(src):
                rem, _ = red.reduce({ring.mono_mul(m, v): 1}, full=True)
                for k, c in rem.items():
                    T[r, pos[k]] = c
            tabs.append(T)
        self._tables[d] = tabs
        return tabs


# ---------------------------------------------------------------- canonical route

@dataclass
class LinearStrand:
    """First linear strand: ``tensors[i]`` has shape (dim L_{i+1}, dim L_i, n) for i ≥ 1
    and gives the differential L_{i+1} -> L_i; ``quadrics`` spans L_1 = I_2."""

    ring: PolyRing
    quadrics: list[Polynomial]
    tensors: dict[int, np.ndarray] = field(default_factory=dict)

    def dims(self) -> list[int]:
        out = [len(self.quadrics)]
        i = 1
        while i in self.tensors and self.tensors[i].shape[0]:
            out.append(self.tensors[i].shape[0])
            i += 1
        return out

    def map(self, i: int) -> GradedMap:
        """Differential F_i -> F_{i-1} on the strand generators (degrees i+1 -> i)."""
        ring = self.ring
        if i == 1:
            return GradedMap(GradedFreeModule(ring, [2] * len(self.quadrics)), GradedFreeModule(ring, [0]),
                             [{0: q} for q in self.quadrics])
        C = self.tensors[i - 1]
        return _tensor_map(ring, C, [i + 1] * C.shape[0], [i] * C.shape[1])


def _tensor_map(ring: PolyRing, C: np.ndarray, src_tw, tgt_tw) -> GradedMap:
    """Columns a, rows b, entry sum_u C[a, b, u] x_u."""
    xs = [ring.var(u) for u in range(ring.n)]
    cols = []
    for a in range(C.shape[0]):
        col = {}
        for b in range(C.shape[1]):
            terms = {xs[u]: int(C[a, b, u]) for u in range(ring.n) if C[a, b, u]}
            if terms:
                col[b] = Polynomial(ring, terms)
        cols.append(col)
    return GradedMap(GradedFreeModule(ring, src_tw), GradedFreeModule(ring, tgt_tw), cols)


def linear_strand(quadrics: Sequence[Polynomial], max_len: int | None = None) -> LinearStrand:
    """Exact first linear strand of S/I from a basis of I_2 (I generated in degree ≥ 2)."""
    if not quadrics:
        raise ValueError("no quadrics: the first linear strand is empty")
    ring = quadrics[0].ring
    p = ring.p
    n = ring.n
    st = LinearStrand(ring, list(quadrics))
    # L_2 = ker(I_2 ⊗ V -> S_3)
    idx3 = ring.monomial_index(3)
    rows = np.zeros((len(quadrics) * n, len(idx3)), dtype=np.int64)
    for a, q in enumerate(quadrics):
        for u in range(n):
            for k, c in q.mul_monomial(ring.var(u)).terms.items():
                rows[a * n + u, idx3[k]] = c
    K = left_nullspace(rows, p)
    st.tensors[1] = K.reshape(K.shape[0], len(quadrics), n).astype(np.int64)
    # S_2 index table for x_u x_v
    idx2 = ring.monomial_index(2)
    table = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in range(n):
            table[u, v] = idx2[ring.mono_mul(ring.var(u), ring.var(v))]
    N2 = len(idx2)
    i = 2
    limit = max_len if max_len is not None else n
    while i < limit and st.tensors[i - 1].shape[0]:
        C = st.tensors[i - 1]                 # (L_i, L_{i-1}, n)
        Li, Lp = C.shape[0], C.shape[1]
        M = np.zeros((Li, n, Lp, N2), dtype=np.int64)
        for v in range(n):
            for u in range(n):
                M[:, v, :, table[u, v]] += C[:, :, u]
        K = left_nullspace((M % p).reshape(Li * n, Lp * N2), p)
        st.tensors[i] = K.reshape(K.shape[0], Li, n).astype(np.int64)
        i += 1
    return st


@dataclass
class CanonicalResolution:
    """Betti table and strand maps of a canonical curve obtained via duality."""

    genus: int
    ring: PolyRing
    strand1: LinearStrand
    betti: BettiTable

    def row1(self, i: int) -> int:
        return self.betti.get(i, i + 1)

    def row2(self, i: int) -> int:
        return self.betti.get(i, i + 2)

    def strand1_map(self, i: int) -> GradedMap:
        """d_i restricted to the first strand: F_i^{(i+1)} -> F_{i-1}^{(i)}."""
        return self.strand1.map(i)

    def strand2_map(self, n: int) -> GradedMap:
        """φ_n: S(-(n+2))^{β_{n,n+2}} -> S(-(n+1))^{β_{n-1,n+1}} (transpose of the dual first-strand map)."""
        g = self.genus
        ring = self.ring
        k = g - 1 - n
        b_src, b_tgt = self.row2(n), self.row2(n - 1)
        if b_src == 0 or b_tgt == 0:
            return GradedMap(GradedFreeModule(ring, [n + 2] * b_src), GradedFreeModule(ring, [n + 1] * b_tgt),
                             [{} for _ in range(b_src)])
        C = self.strand1.tensors[k - 1]       # (L_k, L_{k-1}, n): d_k
        Ct = np.transpose(C, (1, 0, 2))       # columns indexed by L_{k-1}, rows by L_k
        return _tensor_map(ring, Ct, [n + 2] * Ct.shape[0], [n + 1] * Ct.shape[1])


def canonical_resolution(I: Ideal, genus: int) -> CanonicalResolution:
    """Betti table of a canonical curve from its first strand and Gorenstein symmetry."""
    ring = I.ring
    g = genus
    if ring.n != g:
        raise ValueError("the canonical ideal lives in g variables")
    quadrics = I.degree_piece(2)
    st = linear_strand(quadrics, max_len=g - 1)
    row1 = st.dims()
    row1 += [0] * (g - 1 - len(row1))
    entries = {(0, 0): 1, (g - 2, g + 1): 1}
    for i in range(1, g - 1):
        b1 = row1[i - 1] if i - 1 < len(row1) else 0
        if b1:
            entries[(i, i + 1)] = b1
        # β_{i,i+2} = β_{g-2-i, g-1-i}
        k = g - 2 - i
        b2 = row1[k - 1] if 1 <= k <= len(row1) else 0
        if b2:
            entries[(i, i + 2)] = b2
    table = BettiTable(entries, genus=g, char=ring.p)
    return CanonicalResolution(g, ring, st, table)
