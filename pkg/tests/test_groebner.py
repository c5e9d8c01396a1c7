import random

import pytest
from hypothesis import given, settings, strategies as st

from cansyz.groebner import (
    HilbertFitError, Ideal, dim_deg, eliminate, fit_hilbert_polynomial, groebner_basis, hilbert_fn,
    hilbert_series, ideal_quotient, intersect, is_groebner, s_polynomial, saturate,
)
from cansyz.poly import PolyRing, normal_form, random_form


def ideal(ring, *texts):
    return Ideal(ring, [ring.parse(t) for t in texts])


def test_small_basis():
    R = PolyRing(2, "xy")
    G = ideal(R, "x^2+y^2", "x*y").gb().basis
    assert sorted(map(str, G)) == sorted(["x^2+y^2", "x*y", "y^3"])
    assert is_groebner(G)


def test_elimination_of_parameter():
    R = PolyRing(7, ["w", "x", "y"], weights=(1, 2, 3))
    J = eliminate(ideal(R, "x-w^2", "y-w^3"), 1)
    assert J.ring.names == ("x", "y")
    assert [str(g) for g in J.gb().basis] == ["x^3-y^2"]


def test_quotient_saturate_intersect():
    R = PolyRing(5, "xyz")
    assert ideal_quotient(ideal(R, "x^2", "x*y"), ideal(R, "x")).equals(ideal(R, "x", "y"))
    assert saturate(ideal(R, "x^2*y"), ideal(R, "y")).equals(ideal(R, "x^2"))
    assert intersect(ideal(R, "x", "y"), ideal(R, "x", "z")).equals(ideal(R, "x", "y*z"))


def test_quotient_by_zero_is_flagged_unit():
    R = PolyRing(3, "xy")
    Q = ideal_quotient(ideal(R, "x"), Ideal(R, []))
    assert Q.is_unit() and Q.note


def test_hilbert_values():
    R = PolyRing(3, "xyz")
    assert hilbert_fn(Ideal(R, []), 2) == 6
    assert all(hilbert_fn(ideal(R, "x", "y", "z"), d) == 0 for d in range(1, 5))
    point = ideal(R, "x", "y")
    assert dim_deg(point) == (0, 1)
    assert dim_deg(ideal(R, "x", "y", "z")) == (-1, 1)
    assert dim_deg(Ideal(R, [R.one()])) == (-1, 0)


def test_dim_deg_methods_agree():
    R = PolyRing(3, "xyzw")
    I = ideal(R, "x*z-y^2", "y*w-z^2", "x*w-y*z")
    assert dim_deg(I) == dim_deg(I, method="fit") == (1, 3)


def test_fit_failure():
    with pytest.raises(HilbertFitError):
        fit_hilbert_polynomial([1, 2, 4, 8, 16, 32])


def test_canonical_quadrics_count(curve_cache):
    rec = curve_cache(7, 2, 1)
    assert hilbert_fn(rec.ideal, 2) == 18
    assert dim_deg(rec.ideal) == (1, 12)


rand_ideal = st.tuples(st.sampled_from([2, 3, 5]), st.lists(st.integers(1, 3), min_size=1, max_size=3),
                       st.integers(0, 10**9))


@settings(max_examples=25, deadline=None)
@given(rand_ideal)
def test_buchberger_certificate(args):
    p, degs, seed = args
    R = PolyRing(p, "xyzw")
    rng = random.Random(seed)
    I = Ideal(R, [random_form(d, R, rng) for d in degs])
    G = I.gb().basis
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            assert normal_form(s_polynomial(G[i], G[j]), G).is_zero()
    # membership of explicit combinations
    f = sum((random_form(3 - g.degree(), R, rng) * g for g in I.gens if g.degree() <= 3), R.zero())
    assert I.contains(f)
    # the reduced basis does not depend on generator order
    assert groebner_basis(Ideal(R, list(reversed(I.gens)))).basis == G


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 3), st.integers(1, 3), st.integers(0, 10**9))
def test_degree_additive_on_disjoint_points(p, a, b, seed):
    R = PolyRing(p, "xyz")
    rng = random.Random(seed)
    pts = set()
    while len(pts) < a + b:
        pts.add((rng.randrange(p), rng.randrange(p), 1))
    pts = sorted(pts)

    def points_ideal(ps):
        out = None
        for (u, v, _) in ps:
            J = ideal(R, f"x-{u}*z", f"y-{v}*z")
            out = J if out is None else intersect(out, J)
        return out

    I, J = points_ideal(pts[:a]), points_ideal(pts[a:])
    assert dim_deg(intersect(I, J)) == (0, a + b)
    assert hilbert_series(I).dim_deg() == (0, a)
