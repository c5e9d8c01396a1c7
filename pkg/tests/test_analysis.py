import pytest

from cansyz.analysis import (
    GreenVanishingMaximal, analyze, critical_index, finite_length_window, first_nonzero_strand_map,
    green_profile, order_ideal_bound_check,
)
from cansyz.betti import BettiTable
from cansyz.groebner import Ideal, dim_deg
from cansyz.resolution import canonical_resolution

GENERAL7 = [[1], [0, 10, 16, 1], [0, 0, 1, 16, 10], [0, 0, 0, 0, 0, 1]]


def test_critical_index():
    assert critical_index(7) == 3
    assert critical_index(11) == 5
    with pytest.raises(ValueError):
        critical_index(3)


def test_green_profile():
    t = BettiTable.from_rows(GENERAL7, genus=7)
    assert green_profile(t) == 1
    generic = BettiTable.from_rows([[1], [0, 10, 16], [0, 0, 0, 16, 10], [0, 0, 0, 0, 0, 1]], genus=7)
    assert green_profile(generic) == 2
    trig = BettiTable.from_rows([[1], [0, 10, 20, 15, 4], [0, 4, 15, 20, 10], [0, 0, 0, 0, 0, 1]], genus=7)
    assert green_profile(trig) == 0


def test_genus4_single_module():
    from cansyz.poly import PolyRing
    S = PolyRing(3, ["w0", "w1", "w2", "w3"])
    I = Ideal(S, [S.parse("w0*w3-w1*w2"), S.parse("w0^3+w1^3+w2^3+w3^3+w0*w1*w2")])
    n, phi = first_nonzero_strand_map(canonical_resolution(I, 4))
    assert n == 2 and phi.is_zero() and phi.target.rank == 1


def test_window():
    assert finite_length_window([3, 1, 0, 0, 0], 4, 8)
    assert not finite_length_window([3, 1, 0, 0, 1], 4, 8)


def _general(curve_cache, g, p):
    for seed in range(6):
        rec = curve_cache(g, p, seed)
        res = canonical_resolution(rec.ideal, g)
        m = critical_index(g)
        if res.betti.get(m - 1, m + 1):
            return rec, res
    pytest.fail("no exceptional curve among the seeds")


def test_genus7_f2_finite_length(curve_cache):
    rec, res = _general(curve_cache, 7, 2)
    n, phi = first_nonzero_strand_map(res)
    assert n == 3 and (phi.target.rank, phi.source.rank) == (1, 16)
    rep = analyze(res, rec.ideal, 7)
    assert rep.complete and rep.finite_length
    assert rep.M_dim == -1 and rep.M_deg >= 1
    assert rep.rgc_pair() == (rep.M_deg, 0)
    assert rep.hilbert_values[-3:] == [0, 0, 0]


def test_genus9_f3_strand_map(curve_cache):
    rec, res = _general(curve_cache, 9, 3)
    n, phi = first_nonzero_strand_map(res)
    assert n == 4 and (phi.target.rank, phi.source.rank) == (6, 70)


def test_generic_second_strand_vanishes(curve_cache):
    for seed in range(6):
        res = canonical_resolution(curve_cache(7, 3, seed).ideal, 7)
        if not res.betti.get(2, 4):
            n, phi = first_nonzero_strand_map(res)
            assert n == 4 and (phi.target.rank, phi.source.rank) == (16, 10)
            rep = analyze(res)
            assert rep.finite_length and rep.M_deg == 0 and rep.ann_deg is None
            assert rep.rgc_pair() == (0, 0)
            return
    pytest.fail("no generic curve among the seeds")


@pytest.mark.parametrize("g", [7, 8])
def test_trigonal_scroll(curve_cache, g):
    rec = curve_cache(g, 2, 0, 3)
    res = canonical_resolution(rec.ideal, g)
    assert res.betti.get(1, 3) == g - 3
    rep = analyze(res, rec.ideal, g)
    assert rep.finite_length is False
    assert (rep.ann_dim, rep.ann_deg) == (2, g - 2)
    assert rep.scroll.is_scroll and rep.scroll.contained
    bound = order_ideal_bound_check(res, 3)
    assert bound["applicable"] and bound["bound"] == g - 2
    assert bound["holds"]


def test_report_json_roundtrip(curve_cache):
    rec = curve_cache(7, 2, 0, 3)
    rep = analyze(canonical_resolution(rec.ideal, 7), rec.ideal, 7)
    data = rep.to_json()
    assert data["rgc"] == [5, 2]
    assert data["scroll"]["is_scroll"] is True
    assert rep.dumps().startswith("{")
