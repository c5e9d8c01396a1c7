"""Sparse multivariate polynomials over GF(p).

Monomials are packed into a single Python int (a *key*) laid out so that the
integer order of keys is the monomial order of the ring. The layout, from the
most significant end, is one block after another; each block holds a degree
field followed by one field per variable of the block, last variable first,
where a variable field stores ``VMAX - exponent``. With this layout

* comparing monomials is comparing ints,
* ``key(a*b) = key(a) + key(b) - ONE``,
* divisibility is a single guarded subtraction.

Exponents are bounded by ``VMAX = 2**15 - 1``; exceeding it raises
``OverflowError``.
"""

from __future__ import annotations

import itertools
import random
import re
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .field import PrimeField

FIELD = 16
FMASK = (1 << FIELD) - 1
VMAX = (1 << (FIELD - 1)) - 1
GUARD = 1 << (FIELD - 1)


class PolyRing:
    """Polynomial ring F_p[x_0..x_{n-1}] with a graded monomial order.

    ``order`` is ``"grevlex"`` or ``("block", k)``; the block order compares the
    (weighted) degree in the first ``k`` variables first, then grevlex inside
    each block. ``weights`` grade the ring; a weight of 0 is allowed for an
    auxiliary variable, which then counts with weight 1 for ordering only.
    """

    def __init__(self, field: PrimeField | int, names: Sequence[str] | int,
                 order="grevlex", weights: Sequence[int] | None = None):
        if isinstance(field, int):
            field = PrimeField(field)
        if isinstance(names, int):
            names = [f"x{i}" for i in range(names)]
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        if not names:
            raise ValueError("a ring needs at least one variable")
        self.field = field
        self.p = field.p
        self.names = names
        self.n = n = len(names)
        if order == "grevlex":
            blocks = [(0, n)]
        elif isinstance(order, tuple) and order[0] == "block":
            k = int(order[1])
            if not 0 < k < n:
                raise ValueError("block size must be strictly between 0 and the variable count")
            blocks = [(0, k), (k, n)]
        else:
            raise ValueError(f"unknown monomial order {order!r}")
        self.order = order
        self.blocks = blocks
        self.weights = tuple(weights) if weights is not None else (1,) * n
        if len(self.weights) != n or any(w < 0 for w in self.weights):
            raise ValueError("weights must be non-negative, one per variable")
        self.oweights = tuple(w if w > 0 else 1 for w in self.weights)

        shifts = [0] * n
        degshifts = []
        pos = FIELD * (n + len(blocks))
        for lo, hi in blocks:
            pos -= FIELD
            degshifts.append(pos)
            for i in range(hi - 1, lo - 1, -1):
                pos -= FIELD
                shifts[i] = pos
        self.shifts = tuple(shifts)
        self.degshifts = tuple(degshifts)
        self.block_of = tuple(next(b for b, (lo, hi) in enumerate(blocks) if lo <= i < hi) for i in range(n))
        self.keybits = FIELD * (n + len(blocks))
        self.ONE = sum(VMAX << s for s in shifts)
        self.GV = sum(GUARD << s for s in shifts)
        self.GALL = self.GV + sum(GUARD << s for s in degshifts)
        # key offset produced by multiplying with x_i
        self.var_step = tuple((self.oweights[i] << degshifts[self.block_of[i]]) - (1 << shifts[i])
                              for i in range(n))
        self._deg_from_fields = len(blocks) == 1 and self.weights == self.oweights
        self._index = {nm: i for i, nm in enumerate(names)}

    # ----------------------------------------------------------- identity

    def __repr__(self):
        return f"PolyRing(GF({self.p}), {list(self.names)}, order={self.order!r})"

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.p == other.p and self.names == other.names
                and self.order == other.order and self.weights == other.weights)

    def __hash__(self):
        return hash((self.p, self.names, str(self.order), self.weights))

    def index(self, name: str) -> int:
        return self._index[name]

    def with_order(self, order) -> PolyRing:
        return PolyRing(self.field, self.names, order=order, weights=self.weights)

    def subring(self, start: int) -> PolyRing:
        """Ring on the variables ``start..n-1`` with grevlex."""
        return PolyRing(self.field, self.names[start:], weights=self.weights[start:])

    # ----------------------------------------------------------- monomial keys

    def encode(self, exps: Sequence[int]) -> int:
        key = 0
        degs = [0] * len(self.blocks)
        for i, e in enumerate(exps):
            if e < 0 or e > VMAX:
                raise OverflowError(f"exponent {e} outside [0, {VMAX}]")
            key += (VMAX - e) << self.shifts[i]
            degs[self.block_of[i]] += self.oweights[i] * e
        for b, d in enumerate(degs):
            if d > VMAX:
                raise OverflowError("degree field overflow")
            key += d << self.degshifts[b]
        return key

    def decode(self, key: int) -> tuple[int, ...]:
        return tuple(VMAX - ((key >> s) & FMASK) for s in self.shifts)

    def var(self, i: int | str) -> int:
        if isinstance(i, str):
            i = self._index[i]
        e = [0] * self.n
        e[i] = 1
        return self.encode(e)

    def mono_degree(self, key: int) -> int:
        if self._deg_from_fields:
            return (key >> self.degshifts[0]) & FMASK
        return sum(w * e for w, e in zip(self.weights, self.decode(key)))

    def mono_divides(self, a: int, b: int) -> bool:
        """True when monomial ``a`` divides monomial ``b``."""
        return ((a | self.GALL) - b) & self.GV == self.GV

    def mono_mul(self, a: int, b: int) -> int:
        return a + b - self.ONE

    def mono_div(self, a: int, b: int) -> int:
        """a / b, assuming b divides a."""
        return a - b + self.ONE

    def mono_lcm(self, a: int, b: int) -> int:
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([x if x > y else y for x, y in zip(ea, eb)])

    def mono_gcd(self, a: int, b: int) -> int:
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([x if x < y else y for x, y in zip(ea, eb)])

    def mono_coprime(self, a: int, b: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.decode(a), self.decode(b)))

    def monomials(self, d: int) -> tuple[int, ...]:
        """Keys of all monomials of graded degree ``d``, largest first."""
        return _monomials(self, d)

    def monomial_index(self, d: int) -> dict[int, int]:
        return _monomial_index(self, d)

    def mono_str(self, key: int) -> str:
        parts = []
        for nm, e in zip(self.names, self.decode(key)):
            if e == 1:
                parts.append(nm)
            elif e > 1:
                parts.append(f"{nm}^{e}")
        return "*".join(parts) if parts else "1"

    # ----------------------------------------------------------- constructors

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return Polynomial(self, {self.ONE: 1})

    def const(self, c: int) -> Polynomial:
        c %= self.p
        return Polynomial(self, {self.ONE: c} if c else {})

    def gen(self, i: int | str) -> Polynomial:
        return Polynomial(self, {self.var(i): 1})

    def gens(self) -> list[Polynomial]:
        return [self.gen(i) for i in range(self.n)]

    def monomial(self, exps: Sequence[int], c: int = 1) -> Polynomial:
        c %= self.p
        return Polynomial(self, {self.encode(exps): c} if c else {})

    def from_dict(self, d: dict[tuple[int, ...], int]) -> Polynomial:
        terms: dict[int, int] = {}
        for e, c in d.items():
            k = self.encode(e)
            v = (terms.get(k, 0) + c) % self.p
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        return Polynomial(self, terms)

    def from_vector(self, vec, d: int) -> Polynomial:
        """Polynomial with coefficient vector ``vec`` on ``monomials(d)``."""
        monos = self.monomials(d)
        return Polynomial(self, {monos[i]: int(c) % self.p for i, c in enumerate(vec) if int(c) % self.p})

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(self, text)


@lru_cache(maxsize=None)
def _monomials(ring: PolyRing, d: int) -> tuple[int, ...]:
    if d < 0:
        return ()
    out = []
    w = ring.weights
    n = ring.n

    def rec(i, rem, exps):
        if i == n - 1:
            if w[i] == 0:
                if rem == 0:
                    out.append(ring.encode(exps + [0]))
                return
            if rem % w[i] == 0:
                out.append(ring.encode(exps + [rem // w[i]]))
            return
        if w[i] == 0:
            rec(i + 1, rem, exps + [0])
            return
        for e in range(rem // w[i], -1, -1):
            rec(i + 1, rem - e * w[i], exps + [e])

    rec(0, d, [])
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_index(ring: PolyRing, d: int) -> dict[int, int]:
    return {k: i for i, k in enumerate(_monomials(ring, d))}


class Polynomial:
    """Immutable polynomial: a ring and a dict ``key -> nonzero residue``."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict[int, int]):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # ----------------------------------------------------------- basics

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lead_key(self) -> int:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms)
        return self._lead

    @property
    def lead_coeff(self) -> int:
        return self.terms[self.lead_key]

    def lead_exponents(self) -> tuple[int, ...]:
        return self.ring.decode(self.lead_key)

    def sorted_terms(self) -> list[tuple[int, int]]:
        return sorted(self.terms.items(), reverse=True)

    def degree(self) -> int:
        """Largest graded degree of a term (-1 for zero)."""
        if not self.terms:
            return -1
        md = self.ring.mono_degree
        return max(md(k) for k in self.terms)

    def is_homogeneous(self) -> bool:
        md = self.ring.mono_degree
        return len({md(k) for k in self.terms}) <= 1

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        c = self.lead_coeff
        if c == 1:
            return self
        p = self.ring.p
        inv = pow(c, -1, p)
        return Polynomial(self.ring, {k: v * inv % p for k, v in self.terms.items()})

    def exponents(self) -> Iterator[tuple[tuple[int, ...], int]]:
        dec = self.ring.decode
        for k, c in self.sorted_terms():
            yield dec(k), c

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(self.ring.encode(exps), 0)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == (self.ring.const(other).terms)
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # ----------------------------------------------------------- arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = (out.get(k, 0) + v) % p
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {k: p - v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> Polynomial:
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {k: v * c % p for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        if not self.terms or not other.terms:
            return ring.zero()
        _check_degree_room(ring, self, other)
        p = ring.p
        one = ring.ONE
        out: dict[int, int] = {}
        get = out.get
        for k1, c1 in self.terms.items():
            base = k1 - one
            for k2, c2 in other.terms.items():
                k = base + k2
                out[k] = (get(k, 0) + c1 * c2) % p
        return Polynomial(ring, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul_monomial(self, mono: int, c: int = 1) -> Polynomial:
        """Multiply by ``c`` times the monomial with key ``mono``."""
        ring = self.ring
        p = ring.p
        off = mono - ring.ONE
        c %= p
        if not c:
            return ring.zero()
        return Polynomial(ring, {k + off: v * c % p for k, v in self.terms.items()})

    def derivative(self, i: int | str) -> Polynomial:
        ring = self.ring
        if isinstance(i, str):
            i = ring.index(i)
        p = ring.p
        step = ring.var_step[i]
        s = ring.shifts[i]
        out = {}
        for k, v in self.terms.items():
            e = VMAX - ((k >> s) & FMASK)
            c = e * v % p
            if c:
                out[k - step] = c
        return Polynomial(ring, out)

    def evaluate(self, values: Sequence[int]) -> int:
        p = self.ring.p
        acc = 0
        for exps, c in self.exponents():
            t = c
            for v, e in zip(values, exps):
                if e:
                    t = t * pow(v, e, p) % p
            acc += t
        return acc % p

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Replace variable i by ``images[i]`` (all images share a target ring)."""
        target = images[0].ring
        result = target.zero()
        cache: dict[tuple[int, int], Polynomial] = {}
        for exps, c in self.exponents():
            t = target.const(c)
            for i, e in enumerate(exps):
                if e:
                    pw = cache.get((i, e))
                    if pw is None:
                        pw = images[i] ** e
                        cache[(i, e)] = pw
                    t = t * pw
            result = result + t
        return result

    def to_ring(self, ring: PolyRing, var_map: Sequence[int] | None = None) -> Polynomial:
        """Re-encode in ``ring``; variable i goes to ``var_map[i]`` (by name if omitted)."""
        if var_map is None:
            var_map = [ring.index(nm) for nm in self.ring.names]
        out = {}
        for exps, c in self.exponents():
            e = [0] * ring.n
            for i, a in enumerate(exps):
                if a:
                    if var_map[i] is None:
                        raise ValueError(f"variable {self.ring.names[i]} has no image")
                    e[var_map[i]] += a
            out[ring.encode(e)] = c
        return Polynomial(ring, out)

    def to_vector(self, d: int) -> list[int]:
        idx = self.ring.monomial_index(d)
        vec = [0] * len(idx)
        for k, c in self.terms.items():
            vec[idx[k]] = c
        return vec

    # ----------------------------------------------------------- printing

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"


def _check_degree_room(ring: PolyRing, f: Polynomial, g: Polynomial):
    # exponent fields cannot exceed the per-block ordering degree
    for ds in ring.degshifts:
        df = max((k >> ds) & FMASK for k in f.terms)
        dg = max((k >> ds) & FMASK for k in g.terms)
        if df + dg > VMAX:
            raise OverflowError("product exceeds the exponent bound 2^15 - 1")


# ---------------------------------------------------------------- text grammar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|([+-])|(\()|(\)))")


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    p = f.ring.p
    out = []
    for k, c in f.sorted_terms():
        sign = "+"
        if c > p // 2 and p > 2:
            sign, c = "-", p - c
        mono = f.ring.mono_str(k)
        if mono == "1":
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(sign + body)
    return "".join(out)


class PolynomialSyntaxError(ValueError):
    pass


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse ``2*w0*w3 - w1^2 + w2 w4``-style input; ``*`` between factors is optional."""
    names = sorted(ring.names, key=len, reverse=True)
    tokens = _tokenize(text, names)
    p = ring.p
    terms: dict[int, int] = {}
    pos = 0
    n = ring.n

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    expect_term = True
    sign = 1
    while pos < len(tokens) or expect_term:
        tok = peek()
        if tok is None:
            raise PolynomialSyntaxError(f"unexpected end of input in {text!r}")
        sign = 1
        while tok in ("+", "-"):
            if tok == "-":
                sign = -sign
            pos += 1
            tok = peek()
        coef = 1
        exps = [0] * n
        saw_factor = False
        while tok is not None and tok not in ("+", "-"):
            if tok == "*":
                pos += 1
                tok = peek()
                continue
            if tok.isdigit():
                coef *= int(tok)
                pos += 1
            elif tok in ring._index:
                i = ring.index(tok)
                pos += 1
                e = 1
                if peek() == "^":
                    pos += 1
                    nxt = peek()
                    if nxt is None or not nxt.isdigit():
                        raise PolynomialSyntaxError(f"missing exponent after ^ in {text!r}")
                    e = int(nxt)
                    pos += 1
                exps[i] += e
            else:
                raise PolynomialSyntaxError(f"unknown symbol {tok!r} in {text!r}")
            saw_factor = True
            tok = peek()
        if not saw_factor:
            raise PolynomialSyntaxError(f"empty term in {text!r}")
        k = ring.encode(exps)
        v = (terms.get(k, 0) + sign * coef) % p
        if v:
            terms[k] = v
        else:
            terms.pop(k, None)
        expect_term = False
    return Polynomial(ring, terms)


def _tokenize(text: str, names: list[str]) -> list[str]:
    out = []
    i = 0
    s = text.strip()
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append(s[i:j])
            i = j
            continue
        if ch in "+-*^":
            out.append(ch)
            i += 1
            continue
        for nm in names:
            if s.startswith(nm, i):
                # a longer identifier continuing past the name is only allowed
                # when it splits into further variable names or digits-as-exponent
                out.append(nm)
                i += len(nm)
                break
        else:
            raise PolynomialSyntaxError(f"unknown symbol at {s[i:i + 10]!r}")
    return out


# ---------------------------------------------------------------- sampling & calculus

def random_form(d: int, ring: PolyRing, rng: random.Random) -> Polynomial:
    """Homogeneous form of degree ``d`` with i.i.d. uniform coefficients."""
    p = ring.p
    terms = {}
    for k in ring.monomials(d):
        c = rng.randrange(p)
        if c:
            terms[k] = c
    return Polynomial(ring, terms)


def random_linear_combination(polys: Sequence[Polynomial], ring: PolyRing, rng: random.Random) -> Polynomial:
    out = ring.zero()
    for f in polys:
        out = out + f.scale(rng.randrange(ring.p))
    return out


def jacobian(f: Polynomial) -> list[Polynomial]:
    return [f.derivative(i) for i in range(f.ring.n)]


# ---------------------------------------------------------------- orders

def order_cmp(ring: PolyRing, a: Sequence[int] | int, b: Sequence[int] | int) -> int:
    """-1, 0, 1 as monomial ``a`` is smaller, equal, larger than ``b``."""
    ka = a if isinstance(a, int) else ring.encode(a)
    kb = b if isinstance(b, int) else ring.encode(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------- division

def normal_form(f: Polynomial, G: Sequence[Polynomial], quotients: bool = False):
    """Multivariate division of ``f`` by ``G`` (any sequence, not necessarily a basis).

    Returns the remainder, or ``(remainder, [q_i])`` with f = sum q_i g_i + r
    when ``quotients`` is true.
    """
    from .groebner import Reducer

    ring = f.ring
    red = Reducer(ring, [g for g in G if g.terms])
    rem, quo = red.reduce(dict(f.terms), full=True, record=quotients)
    r = Polynomial(ring, rem)
    if not quotients:
        return r
    idx_map = [i for i, g in enumerate(G) if g.terms]
    qs = [ring.zero() for _ in G]
    p = ring.p
    for j, mono, c in quo:
        i = idx_map[j]
        inv = pow(G[i].lead_coeff, -1, p)
        qs[i] = qs[i] + Polynomial(ring, {mono: c * inv % p})
    return r, qs


def monomials_in(vars_count: int, d: int) -> Iterable[tuple[int, ...]]:
    for combo in itertools.combinations_with_replacement(range(vars_count), d):
        e = [0] * vars_count
        for i in combo:
            e[i] += 1
        yield tuple(e)
