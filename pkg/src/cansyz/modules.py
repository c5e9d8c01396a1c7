"""Graded free modules and the finitely presented modules built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groebner import (HilbertSeries, Ideal, POTOrder, Reducer, buchberger,
                       fit_hilbert_polynomial, hilbert_numerator, intersect)
from .poly import Polynomial, PolyRing


@dataclass(frozen=True)
class GradedFreeModule:
    """⊕_c S(-twists[c])."""

    ring: PolyRing
    twists: tuple[int, ...]

    def __init__(self, ring: PolyRing, twists: Iterable[int]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "twists", tuple(twists))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def __len__(self):
        return len(self.twists)


Column = dict  # row index -> nonzero Polynomial


class GradedMap:
    """Homogeneous map source -> target, stored column by column."""

    def __init__(self, source: GradedFreeModule, target: GradedFreeModule, columns: Sequence[Column]):
        if len(columns) != source.rank:
            raise ValueError("one column per source generator expected")
        self.source = source
        self.target = target
        self.columns = [{r: f for r, f in col.items() if f.terms} for col in columns]

    @classmethod
    def from_rows(cls, source, target, rows: Sequence[Sequence[Polynomial]]) -> GradedMap:
        cols = [{r: rows[r][c] for r in range(len(rows)) if rows[r][c].terms} for c in range(source.rank)]
        return cls(source, target, cols)

    @classmethod
    def from_columns(cls, ring: PolyRing, target_twists: Sequence[int], cols: Sequence[Sequence[Polynomial]]) -> GradedMap:
        """Infer source twists from the (homogeneous) column entries."""
        tw = []
        dcols = []
        for col in cols:
            d = None
            for r, f in enumerate(col):
                if f.terms:
                    d = f.degree() + target_twists[r]
                    break
            tw.append(d if d is not None else 0)
            dcols.append({r: f for r, f in enumerate(col) if f.terms})
        return cls(GradedFreeModule(ring, tw), GradedFreeModule(ring, target_twists), dcols)

    @property
    def ring(self) -> PolyRing:
        return self.target.ring

    @property
    def shape(self) -> tuple[int, int]:
        return self.target.rank, self.source.rank

    def entry(self, r: int, c: int) -> Polynomial:
        return self.columns[c].get(r) or self.ring.zero()

    def rows(self) -> list[list[Polynomial]]:
        return [[self.entry(r, c) for c in range(self.source.rank)] for r in range(self.target.rank)]

    def is_zero(self) -> bool:
        return all(not col for col in self.columns)

    def is_homogeneous(self) -> bool:
        for c, col in enumerate(self.columns):
            for r, f in col.items():
                if not f.is_homogeneous() or f.degree() != self.source.twists[c] - self.target.twists[r]:
                    return False
        return True

    def has_unit_entry(self) -> bool:
        one = self.ring.ONE
        return any(f.terms.keys() == {one} for col in self.columns for f in col.values())

    def compose(self, other: GradedMap) -> GradedMap:
        """self ∘ other."""
        cols = []
        zero = self.ring.zero()
        for ocol in other.columns:
            acc: dict[int, Polynomial] = {}
            for k, g in ocol.items():
                for r, f in self.columns[k].items():
                    acc[r] = acc.get(r, zero) + f * g
            cols.append(acc)
        return GradedMap(other.source, self.target, cols)

    def transpose(self, shift: int = 0) -> GradedMap:
        """Dual map Hom(target, S) -> Hom(source, S), twisted so degrees stay non-negative."""
        rows = [dict() for _ in range(self.target.rank)]
        for c, col in enumerate(self.columns):
            for r, f in col.items():
                rows[r][c] = f
        src = GradedFreeModule(self.ring, [shift - t for t in self.target.twists])
        tgt = GradedFreeModule(self.ring, [shift - t for t in self.source.twists])
        return GradedMap(src, tgt, rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> GradedMap:
        rpos = {r: i for i, r in enumerate(rows)}
        newcols = [{rpos[r]: f for r, f in self.columns[c].items() if r in rpos} for c in cols]
        return GradedMap(GradedFreeModule(self.ring, [self.source.twists[c] for c in cols]),
                         GradedFreeModule(self.ring, [self.target.twists[r] for r in rows]), newcols)

    def __repr__(self):
        return f"GradedMap({self.target.rank}x{self.source.rank})"


# ---------------------------------------------------------------- module Gröbner bases

def column_to_keys(col: Column, order) -> dict[int, int]:
    out = {}
    for r, f in col.items():
        for k, v in f.terms.items():
            out[order.join(r, k)] = v
    return out


def keys_to_column(terms: dict[int, int], order) -> Column:
    ring = order.ring
    acc: dict[int, dict[int, int]] = {}
    for k, v in terms.items():
        c, m = order.split(k)
        acc.setdefault(c, {})[m] = v
    return {c: Polynomial(ring, t) for c, t in acc.items()}


@dataclass
class ModuleGB:
    ring: PolyRing
    twists: tuple[int, ...]
    order: object
    basis: list[dict]
    _reducer: Reducer | None = field(default=None, repr=False)

    def reducer(self) -> Reducer:
        if self._reducer is None:
            self._reducer = Reducer(self.ring, self.basis, self.order)
        return self._reducer

    def columns(self) -> list[Column]:
        return [keys_to_column(b, self.order) for b in self.basis]

    def reduce(self, col: Column) -> Column:
        rem, _ = self.reducer().reduce(column_to_keys(col, self.order), full=True)
        return keys_to_column(rem, self.order)

    def contains(self, col: Column) -> bool:
        return not self.reduce(col)

    def lead_monomials_by_component(self) -> dict[int, list[tuple[int, ...]]]:
        out: dict[int, list] = {}
        for b in self.basis:
            c, m = self.order.split(max(b))
            out.setdefault(c, []).append(self.ring.decode(m))
        return out

    def hilbert_series_of_quotient(self) -> HilbertSeries:
        """Hilbert series of F / (submodule), numerator in the standard grading."""
        w = self.ring.weights
        leads = self.lead_monomials_by_component()
        num: list[int] = [0]
        for c, a in enumerate(self.twists):
            part = hilbert_numerator(leads.get(c, []), w)
            if a < 0:
                raise ValueError("negative twists are not supported in Hilbert series")
            shifted = [0] * a + part
            if len(shifted) > len(num):
                num = num + [0] * (len(shifted) - len(num))
            for i, x in enumerate(shifted):
                num[i] += x
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        return HilbertSeries(tuple(num), tuple(w))


def module_gb(ring: PolyRing, twists: Sequence[int], gens: Sequence[Column], order=None) -> ModuleGB:
    """Reduced Gröbner basis of the submodule of ⊕ S(-twists) spanned by ``gens`` (POT by default)."""
    order = order or POTOrder(ring, twists)
    keyed = [column_to_keys(g, order) for g in gens if g]
    basis = buchberger(ring, keyed, order=order)
    return ModuleGB(ring, tuple(twists), order, basis)


def syzygies(phi: GradedMap) -> GradedMap:
    """Generators of ker(phi) as the columns of a map into phi.source.

    Uses the graph module {(phi(e_j), e_j)} under position-over-term with the
    target block on top: basis elements free of the target block span the kernel.
    """
    ring = phi.ring
    r, s = phi.target.rank, phi.source.rank
    twists = list(phi.source.twists) + list(phi.target.twists)
    gens = []
    for j, col in enumerate(phi.columns):
        g = {s + row: f for row, f in col.items()}
        g[j] = ring.one()
        gens.append(g)
    gb = module_gb(ring, twists, gens)
    cols = []
    src_tw = []
    for b in gb.basis:
        c, m = gb.order.split(max(b))
        if c < s:
            col = keys_to_column(b, gb.order)
            cols.append(col)
            src_tw.append(ring.mono_degree(m) + twists[c])
    return GradedMap(GradedFreeModule(ring, src_tw), phi.source, cols)


# ---------------------------------------------------------------- presentations

@dataclass
class ModulePresentation:
    """coker(relations) with relations: F_rel -> ambient."""

    ambient: GradedFreeModule
    relations: GradedMap
    _gb: ModuleGB | None = field(default=None, repr=False)

    @property
    def ring(self) -> PolyRing:
        return self.ambient.ring

    def gb(self) -> ModuleGB:
        if self._gb is None:
            self._gb = module_gb(self.ring, self.ambient.twists, self.relations.columns)
        return self._gb

    def hilbert_series(self) -> HilbertSeries:
        return self.gb().hilbert_series_of_quotient()


def cokernel(phi: GradedMap) -> ModulePresentation:
    return ModulePresentation(phi.target, phi)


def module_hilbert(M: ModulePresentation, d: int) -> int:
    return M.hilbert_series().value(d)


def module_dim_deg(M: ModulePresentation, method: str = "series") -> tuple[int, int]:
    """(projective dimension of the support, degree); finite length gives (-1, length)."""
    hs = M.hilbert_series()
    q, k = hs.reduced()
    n = len(hs.weights)
    if not q:
        return -1, 0
    if method == "fit":
        cap = 4 * (len(hs.numerator) + n) + 8
        vals = [hs.value(d) for d in range(cap)]
        coeffs, _ = fit_hilbert_polynomial(vals)
        from .groebner import dim_deg_from_polynomial
        return dim_deg_from_polynomial(coeffs, vals)
    return n - k - 1, sum(q)


def is_finite_length(M: ModulePresentation) -> bool:
    hs = M.hilbert_series()
    q, k = hs.reduced()
    return not q or k == len(hs.weights)


def annihilator(M: ModulePresentation) -> Ideal:
    """Ann(coker phi) = ∩_r (im phi : e_r)."""
    ring = M.ring
    R = M.ambient.rank
    if R == 0:
        return Ideal(ring, [ring.one()])
    known = M.gb().columns()
    parts = [_quotient_by_basis_vector(M, r, known) for r in range(R)]
    ann = parts[0]
    for part in parts[1:]:
        ann = intersect(ann, part)
    return Ideal(ring, ann.gb().basis)


def _quotient_by_basis_vector(M: ModulePresentation, r: int, known: Sequence[Column] | None = None) -> Ideal:
    """(im phi : e_r); ``known`` is a Gröbner basis of im phi, reused as is."""
    ring = M.ring
    # component 0 is the new, smallest one; ambient components shift up by one
    twists = [M.ambient.twists[r]] + list(M.ambient.twists)
    order = POTOrder(ring, twists)
    new = [column_to_keys({0: ring.one(), r + 1: ring.one()}, order)]
    if known is None:
        new += [column_to_keys({row + 1: f for row, f in col.items()}, order) for col in M.relations.columns]
        base = []
    else:
        base = [column_to_keys({row + 1: f for row, f in col.items()}, order) for col in known]
    gb = ModuleGB(ring, tuple(twists), order, buchberger(ring, new, order=order, base=base))
    polys = []
    for b in gb.basis:
        c, _ = gb.order.split(max(b))
        if c == 0:
            polys.append(keys_to_column(b, gb.order)[0])
    return Ideal(ring, polys)


def homology(d_in: GradedMap, d_out: GradedMap) -> ModulePresentation:
    """H = ker(d_out) / im(d_in) for a complex ... -d_in-> F -d_out-> ...

    The kernel is generated by syzygies Z; image generators are rewritten in Z
    coordinates by a lifting through a Gröbner basis of im(Z) with cofactors.
    """
    ring = d_out.ring
    Z = syzygies(d_out) if d_out.target.rank else GradedMap(
        d_out.source, d_out.source, [{c: ring.one()} for c in range(d_out.source.rank)])
    lift = _lifting_gb(Z)
    coords = [_express(lift, Z.source.rank, col) for col in d_in.columns]
    rel = GradedMap(d_in.source, Z.source, coords)
    return ModulePresentation(Z.source, rel)


def _lifting_gb(Z: GradedMap) -> ModuleGB:
    """Gröbner basis of the graph {(a, Z a)} with the Z-target block on top."""
    ring = Z.ring
    s = Z.source.rank
    twists = list(Z.source.twists) + list(Z.target.twists)
    gens = []
    for j, zc in enumerate(Z.columns):
        g = {s + row: f for row, f in zc.items()}
        g[j] = ring.one()
        gens.append(g)
    return module_gb(ring, twists, gens)


def _express(gb: ModuleGB, s: int, col: Column) -> Column:
    """Coefficients a with Z·a = col (raises if col is not in the image of Z)."""
    vec = {s + row: f for row, f in col.items()}
    rem = gb.reduce(vec)
    if any(c >= s for c in rem):
        raise ArithmeticError("image is not contained in the kernel; input is not a complex")
    # vec - sum(q_i g_i) = rem with rem in the Z-coordinate block; g_i = (Z a_i, a_i) style
    # so col = Z·(-rem)
    return {c: -f for c, f in rem.items()}
