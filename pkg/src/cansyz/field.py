"""Prime fields F_p and dense univariate polynomials over them."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_CHAR = 101


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field Z/pZ with elements stored as residues in [0, p)."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p > MAX_CHAR:
            raise ValueError(f"characteristic must be a prime <= {MAX_CHAR}, got {self.p}")

    def __repr__(self):
        return f"GF({self.p})"

    def __call__(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(a, -1, self.p)

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def random_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.p)

    def elements(self) -> range:
        return range(self.p)


class UniPoly:
    """Dense polynomial in one variable over a prime field.

    ``coeffs[i]`` is the coefficient of x^i; trailing zeros are stripped so the
    zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable[int]):
        p = field.p
        c = [a % p for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, field: PrimeField) -> UniPoly:
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: PrimeField, a: int) -> UniPoly:
        return cls(field, (a,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        li = self.field.inv(self.coeffs[-1])
        return UniPoly(self.field, (a * li for a in self.coeffs))

    def __eq__(self, other):
        return (isinstance(other, UniPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if a == 1 and mono:
                terms.append(mono)
            else:
                terms.append(f"{a}*{mono}" if mono else str(a))
        return " + ".join(terms)

    def __add__(self, other: UniPoly) -> UniPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return UniPoly(self.field, out)

    def __neg__(self) -> UniPoly:
        return UniPoly(self.field, (-a for a in self.coeffs))

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, int):
            return UniPoly(self.field, (a * other for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(self.field, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.field.p
        r = list(self.coeffs)
        db = other.degree
        lb_inv = self.field.inv(other.lead())
        q = [0] * max(len(r) - db, 0)
        bc = other.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] % p
            if not c:
                continue
            c = c * lb_inv % p
            q[k - db] = c
            for j in range(db + 1):
                r[k - db + j] -= c * bc[j]
        return UniPoly(self.field, q), UniPoly(self.field, r[:db] if db > 0 else ())

    def __mod__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[1]

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[0]

    def derivative(self) -> UniPoly:
        return UniPoly(self.field, (i * a for i, a in enumerate(self.coeffs) if i))

    def __call__(self, t: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc % self.field.p

    def powmod(self, e: int, modulus: UniPoly) -> UniPoly:
        result = UniPoly.constant(self.field, 1) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result


def unipoly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def has_root(f: UniPoly) -> bool:
    return any(f(t) == 0 for t in range(f.field.p))


def is_irreducible(f: UniPoly) -> bool:
    """Rabin-style test: gcd(f, x^(p^i) - x mod f) = 1 for 1 <= i <= deg/2."""
    e = f.degree
    if e < 1:
        return False
    if e == 1:
        return True
    p = f.field.p
    x = UniPoly.x(f.field)
    one = UniPoly.constant(f.field, 1)
    frob = x
    for _ in range(e // 2):
        frob = frob.powmod(p, f)
        if unipoly_gcd(f, frob - x) != one:
            return False
    return True


def random_irreducible(e: int, field: PrimeField, rng: random.Random) -> UniPoly:
    """Uniformly drawn monic irreducible polynomial of degree ``e``."""
    if e < 1:
        raise ValueError("degree must be >= 1")
    while True:
        coeffs = [rng.randrange(field.p) for _ in range(e)] + [1]
        f = UniPoly(field, coeffs)
        if is_irreducible(f):
            return f


def solve_mod_p(field: PrimeField, rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int] | None:
    """Solve a small square-or-overdetermined system exactly; None when inconsistent."""
    p = field.p
    n = len(rows[0]) if rows else 0
    aug = [[a % p for a in r] + [b % p] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = field.inv(aug[r][c])
        aug[r] = [a * inv % p for a in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] for row in aug[r:]):
        return None
    x = [0] * n
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][-1]
    return x
