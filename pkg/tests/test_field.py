import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cansyz.field import PrimeField, UniPoly, is_irreducible, random_irreducible, unipoly_gcd
from cansyz.linalg import left_nullspace, matmul, nullspace, rank, rref

PRIMES = [2, 3, 5, 7, 11, 13, 101]


def test_inverse_examples():
    assert PrimeField(101).inv(7) == 29
    assert PrimeField(3).inv(2) == 2


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        PrimeField(5).inv(0)


@pytest.mark.parametrize("p", [1, 4, 9, 103])
def test_bad_characteristic(p):
    with pytest.raises(ValueError):
        PrimeField(p)


@given(st.sampled_from(PRIMES), st.integers())
def test_inverse_property(p, a):
    F = PrimeField(p)
    if a % p == 0:
        return
    assert F.mul(a, F.inv(a)) == 1


def test_gcd_examples():
    F3, F2 = PrimeField(3), PrimeField(2)
    g = unipoly_gcd(UniPoly(F3, [-1, 0, 1]), UniPoly(F3, [-1, 1]))
    assert g == UniPoly(F3, [-1, 1])
    g = unipoly_gcd(UniPoly(F2, [1, 1, 1]), UniPoly(F2, [1, 0, 0, 1]))
    assert g == UniPoly(F2, [1, 1, 1])


def test_cubic_irreducibles_over_f2():
    F = PrimeField(2)
    irr = {tuple(c) for c in ([1, 1, 0, 1], [1, 0, 1, 1])}
    for bits in range(8):
        f = UniPoly(F, [bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, 1])
        assert is_irreducible(f) == (f.coeffs in irr)
    for s in range(10):
        assert random_irreducible(3, F, random.Random(s)).coeffs in irr


@settings(max_examples=40)
@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 100), min_size=1, max_size=6),
       st.lists(st.integers(0, 100), min_size=1, max_size=6))
def test_divmod_identity(p, a, b):
    F = PrimeField(p)
    f, g = UniPoly(F, a), UniPoly(F, b)
    if g.is_zero():
        return
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 12), st.integers(1, 12), st.integers(0, 2**32))
def test_rank_nullity(p, m, n, seed):
    A = np.random.default_rng(seed).integers(0, p, size=(m, n))
    N = nullspace(A, p)
    assert rank(A, p) + len(N) == n
    if len(N):
        assert not matmul(A, N.T, p).any()
    L = left_nullspace(A, p)
    if len(L):
        assert not matmul(L, A, p).any()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rref_is_reduced(p):
    A = np.random.default_rng(p).integers(0, p, size=(7, 9))
    R, piv = rref(A, p)
    for r, c in enumerate(piv):
        assert R[r, c] == 1
        assert sum(1 for x in R[:, c] if x) == 1
