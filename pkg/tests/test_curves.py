import random

import pytest

from cansyz.curves import (
    ClosedPoint, NodeScheme, UnsupportedGenusError, adjoint_basis, attempt_rng, canonical_ideal,
    canonical_ideal_by_elimination, construct_once, gonal_model_params, plane_model_params, plane_ring,
    random_canonical_curve, random_nodal_curve, random_node_scheme, rgc_range, verify_canonical, verify_nodal,
)
from cansyz.field import PrimeField, UniPoly
from cansyz.groebner import Ideal, hilbert_fn
from cansyz.poly import PolyRing
from cansyz.resolution import canonical_resolution


def rational_scheme(p, pts):
    F = PrimeField(p)
    R = plane_ring(p)
    return NodeScheme(R, [ClosedPoint(UniPoly(F, (0, 1)), tuple(UniPoly(F, (c,)) for c in q)) for q in pts])


@pytest.mark.parametrize("g,expected", [(4, (5, 2)), (7, (7, 8)), (10, (9, 18))])
def test_plane_model_params(g, expected):
    assert plane_model_params(g) == expected


@pytest.mark.parametrize("g", [3, 11, 15])
def test_genus_cap(g):
    with pytest.raises(UnsupportedGenusError, match="ingest"):
        plane_model_params(g)


def test_gonal_params():
    assert gonal_model_params(7, 3) == (6, 3, 0)
    assert gonal_model_params(8, 3) == (7, 4, 1)
    assert gonal_model_params(5, 3) == (5, 2, 0)
    # the plain nonemptiness rule would give (6, 2, 0): sextics with a double point
    # carry a second g^2_6 and are not general tetragonal curves
    assert gonal_model_params(9, 4) == (8, 4, 6)
    for g, k in [(6, 3), (7, 3), (8, 3), (9, 4), (10, 4)]:
        d, mult, delta = gonal_model_params(g, k)
        assert mult == d - k
        assert (d - 1) * (d - 2) // 2 - mult * (mult - 1) // 2 - delta == g


def test_conjecture_ranges():
    assert rgc_range(7, 3) == {"refined": True, "ssw": True}
    assert rgc_range(7, 4)["ssw"] is False
    assert rgc_range(8, 5)["refined"] is False


def test_two_nodes_hilbert_function():
    N = rational_scheme(5, [(1, 0, 0), (0, 1, 0)]).ideal()
    assert [hilbert_fn(N, d) for d in range(5)] == [1, 2, 2, 2, 2]


def test_eight_nodes_over_f2_need_an_orbit():
    R = plane_ring(2)
    nodes = random_node_scheme(8, R, 2, 4, random.Random(0))
    assert nodes.degree == 8
    assert any(pt.degree >= 2 for pt in nodes.points)


@pytest.mark.parametrize("seed", range(4))
def test_node_count_conservation(seed):
    rng = random.Random(seed)
    nodes = random_node_scheme(8, plane_ring(3), 3, 4, rng, n_rational=0)
    assert nodes.degree == 8
    N = nodes.ideal()
    assert hilbert_fn(N, 6) == 8


def test_symbolic_square_dimension():
    found = False
    for seed in range(5):
        nodes = random_node_scheme(8, plane_ring(2), 2, 4, random.Random(seed), n_rational=0)
        size = len(nodes.piece(7, order=2))
        assert size >= 36 - 24
        found |= size == 12
    assert found


def test_nodal_and_cuspidal_cubics():
    R = plane_ring(5)
    node = rational_scheme(5, [(0, 0, 1)])
    nodal = R.parse("y^2*z-x^3-x^2*z")
    rep = verify_nodal(nodal, node)
    assert rep.passed, rep.clauses
    cusp = verify_nodal(R.parse("y^2*z-x^3"), node)
    assert not cusp.clauses["ordinary_nodes"]
    smooth = verify_nodal(R.parse("y^2*z-x^3-z^3"), node)
    assert not smooth.passed


def test_nodal_cubic_char2():
    R = plane_ring(2)
    node = rational_scheme(2, [(0, 0, 1)])
    assert verify_nodal(R.parse("x*y*z+x^3+y^3"), node).passed
    assert not verify_nodal(R.parse("y^2*z+x^3"), node).clauses["ordinary_nodes"]


def test_kernel_method_matches_elimination():
    for seed in range(30):
        rng = attempt_rng(11, seed)
        R = plane_ring(7)
        nodes = random_node_scheme(2, R, 7, 4, rng, n_rational=0)
        f = random_nodal_curve(5, nodes, rng)
        if not verify_nodal(f, nodes).passed:
            continue
        adj = adjoint_basis(5, nodes)
        assert len(adj) == 4
        I = canonical_ideal(f, adj, 4)
        J = canonical_ideal_by_elimination(f, adj, 4)
        assert I.equals(Ideal(I.ring, [g.to_ring(I.ring) for g in J.gens]))
        assert verify_canonical(I, 4).passed
        return
    pytest.fail("no nodal quintic found")


def test_verify_canonical_rejects():
    S = PolyRing(5, ["w0", "w1", "w2", "w3"])
    twisted = Ideal(S, [S.parse("w0*w2-w1^2"), S.parse("w1*w3-w2^2"), S.parse("w0*w3-w1*w2")])
    rep = verify_canonical(twisted, 4)
    assert not rep.passed and not rep.clauses["dim_deg"]
    degenerate = Ideal(S, [S.parse("w3"), S.parse("w0^2+w1^2+w2^2")])
    assert not verify_canonical(degenerate, 4).clauses["nondegenerate"]


@pytest.mark.parametrize("g,p", [(4, 7), (5, 3), (6, 2), (7, 2), (8, 3)])
def test_records_satisfy_genus_bookkeeping(curve_cache, g, p):
    rec = curve_cache(g, p, 0)
    assert rec.ring.n == g
    assert rec.report["hilbert_polynomial"] == [1 - g, 2 * g - 2]
    assert len(rec.ideal.degree_piece(2)) == (g - 2) * (g - 3) // 2
    assert rec.meta["delta"] == sum(n["degree"] for n in rec.meta["nodes"])


def test_determinism(curve_cache):
    a = curve_cache(6, 3, 5)
    b = random_canonical_curve(6, 3, 5)
    assert [str(f) for f in a.ideal.gens] == [str(f) for f in b.ideal.gens]
    assert a.meta == b.meta


def test_trigonal_record(curve_cache):
    rec = curve_cache(7, 2, 0, 3)
    assert rec.meta["route"] == "gonal" and rec.meta["mult"] == 3
    table = canonical_resolution(rec.ideal, 7).betti
    assert table.get(1, 3) == 4


def test_unknown_policy():
    with pytest.raises(ValueError):
        construct_once(7, 2, random.Random(0), node_policy="nearby")
