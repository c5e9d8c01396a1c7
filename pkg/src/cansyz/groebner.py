"""Buchberger's algorithm and the ideal toolkit built on it.

The engine works on *key dicts* ``{key: coeff}``. A key either encodes a
monomial of the ring or, for submodules of a free module, a monomial together
with a basis index; an order object translates between the two views. Because
every order used here is a linear shift on keys, multiplying an element by a
monomial ``t`` adds the same integer offset to all its keys.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .poly import FMASK, Polynomial, PolyRing

CB = 24
CMASK = (1 << CB) - 1


# ---------------------------------------------------------------- orders

class RingOrder:
    """Keys are plain monomial keys (rank one)."""

    rank_one = True

    def __init__(self, ring: PolyRing):
        self.ring = ring

    def split(self, k: int) -> tuple[int, int]:
        return 0, k

    def join(self, c: int, m: int) -> int:
        return m

    def degree(self, k: int) -> int:
        return self.ring.mono_degree(k)


class POTOrder:
    """Position over term on a free module with the given twists; higher index is larger."""

    rank_one = False

    def __init__(self, ring: PolyRing, twists: Sequence[int]):
        self.ring = ring
        self.twists = list(twists)
        self._kb = ring.keybits

    def split(self, k: int) -> tuple[int, int]:
        return k >> self._kb, k & ((1 << self._kb) - 1)

    def join(self, c: int, m: int) -> int:
        return (c << self._kb) | m

    def degree(self, k: int) -> int:
        c, m = self.split(k)
        return self.ring.mono_degree(m) + self.twists[c]


class SchreyerOrder:
    """Order induced on a free module with basis e_c mapping to elements whose
    leading keys (in ``prev``) are ``bases[c]``: m*e_c compares as the key of
    m*LT(image of e_c), ties broken by index."""

    rank_one = False

    def __init__(self, prev, bases: Sequence[int], twists: Sequence[int]):
        self.ring = prev.ring
        self.prev = prev
        self.level = getattr(prev, "level", 0) + 1
        self.bases = list(bases)
        self.twists = list(twists)
        self._shift = self.level * CB
        self._one = self.ring.ONE

    def split(self, k: int) -> tuple[int, int]:
        c = k & CMASK
        return c, ((k - c - (self.bases[c] << CB)) >> self._shift) + self._one

    def join(self, c: int, m: int) -> int:
        return (self.bases[c] << CB) + c + ((m - self._one) << self._shift)

    def degree(self, k: int) -> int:
        c, m = self.split(k)
        return self.ring.mono_degree(m) + self.twists[c]


# ---------------------------------------------------------------- reduction

class Reducer:
    """Division by a fixed list of key dicts (made monic internally)."""

    def __init__(self, ring: PolyRing, elems: Sequence, order=None):
        self.ring = ring
        self.order = order or RingOrder(ring)
        self.p = ring.p
        self.leads: list[int] = []
        self.tails: list[list[tuple[int, int]]] = []
        self._groups: dict[int, list[tuple[int, int]]] = {}
        self._flat: list[tuple[int, int]] = []
        for e in elems:
            self.add(e.terms if isinstance(e, Polynomial) else e)

    def add(self, terms: dict) -> int:
        p = self.p
        lead = max(terms)
        inv = pow(terms[lead], -1, p)
        tail = [(k - lead, v * inv % p) for k, v in terms.items() if k != lead]
        tail.sort(reverse=True)
        idx = len(self.leads)
        self.leads.append(lead)
        self.tails.append(tail)
        c, m = self.order.split(lead)
        if self.order.rank_one:
            self._flat.append((m, idx))
        else:
            self._groups.setdefault(c, []).append((m, idx))
        return idx

    def find(self, k: int):
        """Index of a reducer whose leading term divides key ``k``, with the quotient monomial."""
        ring = self.ring
        GALL, GV, ONE = ring.GALL, ring.GV, ring.ONE
        if self.order.rank_one:
            for lm, idx in self._flat:
                if ((lm | GALL) - k) & GV == GV:
                    return idx, k - lm + ONE
            return None
        c, m = self.order.split(k)
        for lm, idx in self._groups.get(c, ()):
            if ((lm | GALL) - m) & GV == GV:
                return idx, m - lm + ONE
        return None

    def reduce(self, terms: dict, full: bool = True, record: bool = False):
        """Reduce ``terms`` in place; returns ``(remainder, quotients)``.

        ``quotients`` lists ``(reducer index, monomial key, coefficient)`` with
        terms = sum coeff*mono*monic(reducer) + remainder.
        """
        p = self.p
        tails = self.tails
        leads = self.leads
        find = self.find
        heap = [-k for k in terms]
        heapq.heapify(heap)
        rem: dict[int, int] = {}
        quo = []
        push, pop = heapq.heappush, heapq.heappop
        while heap:
            k = -pop(heap)
            c = terms.get(k)
            if c is None:
                continue
            hit = find(k)
            if hit is None:
                if not full:
                    rem.update(terms)
                    return rem, quo
                rem[k] = terms.pop(k)
                continue
            idx, tm = hit
            del terms[k]
            mc = p - c
            for off, v in tails[idx]:
                nk = k + off
                old = terms.get(nk)
                if old is None:
                    terms[nk] = mc * v % p
                    push(heap, -nk)
                else:
                    s = (old + mc * v) % p
                    if s:
                        terms[nk] = s
                    else:
                        del terms[nk]
            if record:
                quo.append((idx, tm, c))
        return rem, quo


# ---------------------------------------------------------------- Buchberger

def _monic(terms: dict, p: int) -> dict:
    lead = max(terms)
    c = terms[lead]
    if c == 1:
        return terms
    inv = pow(c, -1, p)
    return {k: v * inv % p for k, v in terms.items()}


def buchberger(ring: PolyRing, gens: Iterable[dict], order=None, degree_limit: int | None = None,
               base: Iterable[dict] = ()) -> list[dict]:
    """Reduced Gröbner basis (list of monic key dicts, sorted by leading key, largest first).

    Pairs are processed degree by degree; the Gebauer-Möller installation
    applies the chain criterion and, in rank one, the coprime criterion.
    With ``degree_limit`` the computation stops after that degree (a
    truncated basis, exact in degrees ≤ limit). ``base`` is an already
    reduced basis under ``order``: its elements enter without pairs among
    themselves.
    """
    order = order or RingOrder(ring)
    p = ring.p
    rank_one = order.rank_one
    mdiv = ring.mono_divides
    mlcm = ring.mono_lcm
    deg_of = order.degree

    pending: dict[int, list[dict]] = {}
    for g in gens:
        if g:
            pending.setdefault(deg_of(max(g)), []).append(dict(g))

    red = Reducer(ring, [], order)
    elems: list[dict] = []
    info: list[tuple[int, int]] = []         # (component, lead monomial)
    active: list[int] = []
    pairs: dict[tuple[int, int], tuple[int, int]] = {}   # (i, j) -> (lcm mono, degree)
    heap: list[tuple[int, int, int, int]] = []
    serial = 0

    def install(h: int):
        nonlocal serial, active
        hc, hm = info[h]
        cands = []
        for i in active:
            ci, mi = info[i]
            if ci != hc:
                continue
            cands.append((i, mlcm(hm, mi), rank_one and ring.mono_coprime(hm, mi)))
        keep = []
        for a, (i, L, cop) in enumerate(cands):
            if cop:
                keep.append((i, L, cop))
                continue
            redundant = False
            for b, (j, L2, _) in enumerate(cands):
                if b != a and mdiv(L2, L) and (L2 != L or b < a):
                    redundant = True
                    break
            if not redundant:
                keep.append((i, L, cop))
        for key in list(pairs):
            i, j = key
            L = pairs[key][0]
            if info[i][0] != hc or not mdiv(hm, L):
                continue
            if mlcm(info[i][1], hm) != L and mlcm(info[j][1], hm) != L:
                del pairs[key]
        for i, L, cop in keep:
            if cop:
                continue
            d = ring.mono_degree(L) + (0 if rank_one else order.twists[hc])
            pairs[(i, h)] = (L, d)
            heapq.heappush(heap, (d, serial, i, h))
            serial += 1
        active = [i for i in active if not (info[i][0] == hc and mdiv(hm, info[i][1]))]
        active.append(h)

    def add(terms: dict, paired: bool = True):
        terms = _monic(terms, p)
        h = len(elems)
        elems.append(terms)
        info.append(order.split(max(terms)))
        red.add(terms)
        if paired:
            install(h)
        else:
            active.append(h)

    for b in base:
        if b:
            add(b, paired=False)

    def spoly(i: int, j: int, L: int) -> dict:
        gi, gj = elems[i], elems[j]
        c = info[i][0]
        Lk = order.join(c, L)
        oi = Lk - max(gi)
        oj = Lk - max(gj)
        out = {k + oi: v for k, v in gi.items()}
        for k, v in gj.items():
            nk = k + oj
            s = (out.get(nk, 0) - v) % p
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
        return out

    while heap or pending:
        dpair = heap[0][0] if heap else None
        dgen = min(pending) if pending else None
        d = min(x for x in (dpair, dgen) if x is not None)
        if degree_limit is not None and d > degree_limit:
            break
        work: list[dict] = []
        while heap and heap[0][0] == d:
            _, _, i, j = heapq.heappop(heap)
            val = pairs.pop((i, j), None)
            if val is None:
                continue
            work.append(spoly(i, j, val[0]))
        work.extend(pending.pop(d, []))
        for t in work:
            rem, _ = red.reduce(t, full=True)
            if rem:
                add(rem)
            # pairs created in this degree are picked up by the outer loop
        while heap and heap[0][0] == d:
            _, _, i, j = heapq.heappop(heap)
            val = pairs.pop((i, j), None)
            if val is None:
                continue
            rem, _ = red.reduce(spoly(i, j, val[0]), full=True)
            if rem:
                add(rem)

    return interreduce(ring, [elems[i] for i in active], order)


def interreduce(ring: PolyRing, elems: list[dict], order=None) -> list[dict]:
    """Minimal, tail-reduced, monic basis from a list with pairwise non-dividing leads."""
    order = order or RingOrder(ring)
    p = ring.p
    elems = sorted((_monic(e, p) for e in elems if e), key=max)
    mins: list[dict] = []
    red = Reducer(ring, [], order)
    for e in elems:
        if red.find(max(e)) is None:
            mins.append(e)
            red.add(e)
    out = []
    red = Reducer(ring, mins, order)
    for e in mins:
        lead = max(e)
        tail = {k: v for k, v in e.items() if k != lead}
        rem, _ = red.reduce(tail, full=True)
        rem[lead] = 1
        out.append(rem)
    out.sort(key=max, reverse=True)
    return out


# ---------------------------------------------------------------- ideals

class Ideal:
    """A homogeneous ideal given by generators; the reduced Gröbner basis is cached."""

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial] = (), unit_flag: str | None = None):
        self.ring = ring
        self.gens = [g for g in gens if g.terms]
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
        self.note = unit_flag
        self._gb: GroebnerBasis | None = None

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens)) or '0'})"

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = groebner_basis(self)
        return self._gb

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def __add__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def contains(self, f: Polynomial) -> bool:
        return self.gb().reduce(f).is_zero()

    def is_unit(self) -> bool:
        return any(g.lead_key == self.ring.ONE for g in self.gb().basis)

    def equals(self, other: Ideal) -> bool:
        return self.gb().basis == other.gb().basis

    def degree_piece(self, d: int) -> list[Polynomial]:
        """Basis (reduced echelon form) of the degree-d part as polynomials."""
        from .linalg import row_space
        ring = self.ring
        monos = ring.monomials(d)
        if not monos:
            return []
        idx = ring.monomial_index(d)
        rows = []
        for g in self.gb().basis:
            e = g.degree()
            if e > d:
                continue
            for m in ring.monomials(d - e):
                v = [0] * len(monos)
                for k, c in g.mul_monomial(m).terms.items():
                    v[idx[k]] = c
                rows.append(v)
        if not rows:
            return []
        return [ring.from_vector(r, d) for r in row_space(rows, ring.p)]


@dataclass
class GroebnerBasis:
    ideal: Ideal
    basis: list[Polynomial]
    order: object = field(default="grevlex")
    _reducer: Reducer | None = field(default=None, repr=False)

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def reducer(self) -> Reducer:
        if self._reducer is None:
            self._reducer = Reducer(self.ring, self.basis)
        return self._reducer

    def reduce(self, f: Polynomial) -> Polynomial:
        rem, _ = self.reducer().reduce(dict(f.terms), full=True)
        return Polynomial(self.ring, rem)

    def lead_exponents(self) -> list[tuple[int, ...]]:
        return [g.lead_exponents() for g in self.basis]

    def standard_monomials(self, d: int) -> list[int]:
        red = self.reducer()
        return [m for m in self.ring.monomials(d) if red.find(m) is None]


def groebner_basis(I: Ideal, degree_limit: int | None = None) -> GroebnerBasis:
    ring = I.ring
    basis = buchberger(ring, [g.terms for g in I.gens], degree_limit=degree_limit)
    return GroebnerBasis(I, [Polynomial(ring, b) for b in basis], ring.order)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    L = ring.mono_lcm(f.lead_key, g.lead_key)
    a = f.monic().mul_monomial(ring.mono_div(L, f.lead_key))
    b = g.monic().mul_monomial(ring.mono_div(L, g.lead_key))
    return a - b


def is_groebner(G: Sequence[Polynomial]) -> bool:
    """Direct Buchberger criterion: every S-polynomial reduces to zero."""
    if not G:
        return True
    ring = G[0].ring
    red = Reducer(ring, G)
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            s = s_polynomial(G[a], G[b])
            rem, _ = red.reduce(dict(s.terms))
            if rem:
                return False
    return True


# ---------------------------------------------------------------- elimination & friends

def eliminate(I: Ideal, k: int) -> Ideal:
    """I ∩ F[x_k..x_{n-1}], returned in the subring on the surviving variables."""
    ring = I.ring
    if not 0 <= k < ring.n:
        raise ValueError("can only eliminate fewer variables than the ring has")
    sub = ring.subring(k)
    if k == 0:
        gb = I.gb()
        return Ideal(sub, [g.to_ring(sub) for g in gb.basis])
    big = ring.with_order(("block", k))
    gens = [g.to_ring(big, list(range(ring.n))) for g in I.gens]
    basis = buchberger(big, [g.terms for g in gens], order=RingOrder(big))
    keep = []
    for b in basis:
        poly = Polynomial(big, b)
        if all(all(e == 0 for e in exps[:k]) for exps, _ in poly.exponents()):
            keep.append(poly.to_ring(sub, [None] * k + list(range(ring.n - k))))
    return Ideal(sub, keep)


def _aux_ring(ring: PolyRing) -> PolyRing:
    name = "_t"
    while name in ring.names:
        name += "_"
    return PolyRing(ring.field, (name,) + ring.names, order=("block", 1), weights=(0,) + ring.weights)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via ⟨t·I, (1-t)·J⟩ with a weight-zero auxiliary variable eliminated first."""
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal(ring, [])
    big = _aux_ring(ring)
    shift = list(range(1, ring.n + 1))
    t = big.gen(0)
    one_t = big.one() - t
    gens = [t * g.to_ring(big, shift) for g in I.gens] + [one_t * g.to_ring(big, shift) for g in J.gens]
    basis = buchberger(big, [g.terms for g in gens])
    out = []
    for b in basis:
        poly = Polynomial(big, b)
        if all(exps[0] == 0 for exps, _ in poly.exponents()):
            out.append(poly.to_ring(ring, [None] + list(range(ring.n))))
    return Ideal(ring, out)


def _divide_exact(f: Polynomial, h: Polynomial) -> Polynomial:
    from .poly import normal_form
    r, q = normal_form(f, [h], quotients=True)
    if r:
        raise ArithmeticError("inexact division")
    return q[0]


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {f : f·J ⊆ I}; J = 0 gives the unit ideal flagged ``"quotient by zero"``."""
    ring = I.ring
    if not J.gens:
        return Ideal(ring, [ring.one()], unit_flag="quotient by zero")
    result = None
    for h in J.gens:
        inter = intersect(I, Ideal(ring, [h]))
        part = Ideal(ring, [_divide_exact(f, h) for f in inter.gens])
        result = part if result is None else intersect(result, part)
    return Ideal(ring, result.gb().basis)


def saturate(I: Ideal, J: Ideal, max_steps: int = 64) -> Ideal:
    """(I : J^∞), iterating quotients until the reduced bases agree."""
    cur = Ideal(I.ring, I.gb().basis)
    for _ in range(max_steps):
        nxt = ideal_quotient(cur, J)
        if nxt.gb().basis == cur.gb().basis:
            return cur
        cur = nxt
    raise RuntimeError("saturation did not stabilise")


# ---------------------------------------------------------------- Hilbert series

def _min_gens(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple[int, ...]] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def hilbert_numerator(gens: Sequence[tuple[int, ...]], weights: Sequence[int]) -> list[int]:
    """Numerator N(t) of the Hilbert series N(t)/prod(1 - t^w_i) of S/⟨monomials⟩."""
    if any(w <= 0 for w in weights):
        raise ValueError("Hilbert series need positive weights")
    return _hn(_min_gens([tuple(g) for g in gens]), tuple(weights))


def _hn(gens: list[tuple[int, ...]], w: tuple[int, ...]) -> list[int]:
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return [0]
    if len(gens) == 1 or _pairwise_coprime(gens):
        out = [1]
        for g in gens:
            d = sum(a * b for a, b in zip(g, w))
            f = [0] * (d + 1)
            f[0], f[d] = 1, -1
            out = _poly_mul(out, f)
        return out
    n = len(w)
    counts = [0] * n
    pure = {}
    for g in gens:
        support = [i for i, a in enumerate(g) if a]
        if len(support) == 1:
            pure[support[0]] = g[support[0]]
            continue
        for i in support:
            counts[i] += 1
    # pivot on a variable of a mixed generator, strictly below its pure power
    x = max(range(n), key=lambda i: counts[i])
    exps = sorted(g[x] for g in gens if g[x])
    e = exps[len(exps) // 2]
    if x in pure:
        e = min(e, pure[x] - 1)
    pivot = tuple(e if i == x else 0 for i in range(n))
    # N(M) = N(M + <P>) + t^deg(P) N(M : P)
    plus = _min_gens(gens + [pivot])
    colon = _min_gens([tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens])
    d = e * w[x]
    return _poly_add(_hn(plus, w), [0] * d + _hn(colon, w))


def _pairwise_coprime(gens) -> bool:
    seen = set()
    for g in gens:
        s = {i for i, a in enumerate(g) if a}
        if seen & s:
            return False
        seen |= s
    return True


def _strip(a: list[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


@dataclass(frozen=True)
class HilbertSeries:
    numerator: tuple[int, ...]
    weights: tuple[int, ...]

    def value(self, d: int) -> int:
        """Coefficient of t^d."""
        # expand 1/prod(1 - t^w) up to degree d
        series = [0] * (d + 1)
        series[0] = 1
        for w in self.weights:
            for k in range(w, d + 1):
                series[k] += series[k - w]
        return sum(c * series[d - i] for i, c in enumerate(self.numerator) if i <= d)

    def reduced(self) -> tuple[list[int], int]:
        """(Q, k) with N(t) = (1-t)^k Q(t) and Q(1) ≠ 0 (standard grading only)."""
        if any(w != 1 for w in self.weights):
            raise ValueError("reduction by (1-t) needs the standard grading")
        q = _strip(list(self.numerator))
        k = 0
        while q and sum(q) == 0:
            # synthetic division by (1 - t)
            out = []
            acc = 0
            for c in q[:-1]:
                acc += c
                out.append(acc)
            q = _strip(out)
            k += 1
        return q, k

    def dim_deg(self) -> tuple[int, int]:
        q, k = self.reduced()
        if not q:
            return -1, 0
        n = len(self.weights)
        return n - k - 1, sum(q)

    def hilbert_polynomial(self) -> list[Fraction]:
        """Coefficients (constant first) of the Hilbert polynomial."""
        q, k = self.reduced()
        n = len(self.weights)
        r = n - k          # affine dimension
        if not q or r == 0:
            return []
        # sum_i q_i * C(t - i + r - 1, r - 1), expanded by interpolation
        pts = [(t, sum(c * comb(t - i + r - 1, r - 1) for i, c in enumerate(q))) for t in range(len(q) + 1, len(q) + r + 1)]
        return _interpolate(pts)


def _interpolate(pts: list[tuple[int, int]]) -> list[Fraction]:
    n = len(pts)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n):
            coeffs[k] += yi * basis[k] / denom
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def hilbert_series(I: Ideal) -> HilbertSeries:
    gb = I.gb()
    ring = I.ring
    return HilbertSeries(tuple(hilbert_numerator(gb.lead_exponents(), ring.weights)), ring.weights)


def hilbert_fn(I: Ideal, d: int) -> int:
    """dim (S/I)_d, counted as standard monomials of degree d."""
    if d < 0:
        return 0
    return hilbert_series(I).value(d)


class HilbertFitError(ValueError):
    pass


def fit_hilbert_polynomial(values: Sequence[int], start: int = 0, window: int = 3, confirm: int = 2):
    """Fit a polynomial to Hilbert values h(start), h(start+1), ...

    The order r is accepted once the r-th differences vanish on ``window``
    consecutive positions and ``confirm`` further positions. Returns
    ``(coefficients, first_degree_where_it_holds)``.
    """
    vals = list(values)
    need = window + confirm
    for r in range(0, len(vals)):
        diffs = vals
        for _ in range(r + 1):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        # find the earliest index from which the (r+1)-th differences vanish
        run = 0
        for i in range(len(diffs) - 1, -1, -1):
            if diffs[i] == 0:
                run += 1
            else:
                break
        if run >= need:
            first = len(diffs) - run
            pts = [(start + first + i, vals[first + i]) for i in range(r + 1)]
            return _interpolate(pts), start + first
    raise HilbertFitError("Hilbert fit failed")


def dim_deg(I: Ideal, method: str = "series") -> tuple[int, int]:
    """(projective dimension, degree) of V(I); the unit ideal gives (-1, 0).

    ``method="series"`` reads both from the Hilbert series numerator;
    ``method="fit"`` interpolates Hilbert values until differences stabilise.
    """
    if method == "series":
        return hilbert_series(I).dim_deg()
    hs = hilbert_series(I)
    if hs.dim_deg() == (-1, 0):
        return -1, 0
    cap = 4 * (len(hs.numerator) + len(hs.weights)) + 8
    vals = [hs.value(d) for d in range(cap)]
    coeffs, _ = fit_hilbert_polynomial(vals)
    return dim_deg_from_polynomial(coeffs, vals)


def dim_deg_from_polynomial(coeffs: Sequence[Fraction], vals: Sequence[int] = ()) -> tuple[int, int]:
    from math import factorial
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return -1, sum(vals)
    r = len(coeffs) - 1
    return r, int(coeffs[-1] * factorial(r))


def lead_ideal_gens(I: Ideal) -> list[tuple[int, ...]]:
    return I.gb().lead_exponents()


def subring_piece(ring: PolyRing, polys: Sequence[Polynomial], d: int):
    """Matrix (rows = coefficient vectors on monomials(d)) spanned by S_{d-deg f}·f."""
    idx = ring.monomial_index(d)
    rows = []
    for f in polys:
        e = f.degree()
        if e > d or not f.terms:
            continue
        for m in ring.monomials(d - e):
            v = [0] * len(idx)
            for k, c in f.mul_monomial(m).terms.items():
                v[idx[k]] = c
            rows.append(v)
    return rows


__all__ = [
    "RingOrder", "POTOrder", "SchreyerOrder", "Reducer", "buchberger", "interreduce",
    "Ideal", "GroebnerBasis", "groebner_basis", "s_polynomial", "is_groebner",
    "eliminate", "intersect", "ideal_quotient", "saturate",
    "hilbert_numerator", "HilbertSeries", "hilbert_series", "hilbert_fn",
    "HilbertFitError", "fit_hilbert_polynomial", "dim_deg", "dim_deg_from_polynomial",
    "FMASK",
]
