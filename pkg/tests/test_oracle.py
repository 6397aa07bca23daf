import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import P_BOWTIE, P_CLAW, P_NX, XI_NX, chain_poset
from poset_gorenstein import (BoxTooLarge, DeadlineExceeded, InvalidFormat,
                              LatticePoint, NotInS0, NotInT0, chain_member,
                              order_member, verify_certificate)
from poset_gorenstein.oracle import (LinearSystem, bounded_search_certificate,
                                     hilbert_equal, lp_member_chain,
                                     lp_member_order, verify)
from poset_gorenstein.points import in_S, in_T, iter_points
from poset_gorenstein.sampling import (all_posets_upto, make_rng,
                                       random_point, random_poset)


def test_linear_system_basic():
    # x >= 1, y >= 1, x + y <= 1 is infeasible
    system = LinearSystem(['x', 'y'])
    system.add({'x': 1}, -1)
    system.add({'y': 1}, -1)
    system.add({'x': -1, 'y': -1}, 1)
    ok, sample = system.feasible()
    assert not ok and sample is None
    # drop the cap and a rational sample must satisfy every row
    system = LinearSystem(['x', 'y'])
    system.add({'x': 1}, -1)
    system.add({'y': 1}, -1)
    system.add({'x': 1, 'y': -1})
    ok, sample = system.feasible()
    assert ok
    assert sample['x'] >= 1 and sample['y'] >= 1 and sample['x'] >= sample['y']
    assert all(isinstance(v, Fraction) for v in sample.values())


def test_linear_system_equality_pair():
    # 2x - y >= 0 and y - 2x >= 0 pin y == 2x; x >= 3 keeps it away from 0
    system = LinearSystem(['x', 'y'])
    system.add({'x': 2, 'y': -1})
    system.add({'x': -2, 'y': 1})
    system.add({'x': 1}, -3)
    ok, sample = system.feasible()
    assert ok
    assert 2 * sample['x'] == sample['y']
    assert sample['x'] >= 3


def test_lp_oracles_reject_points_outside_cone():
    bad = LatticePoint({x: -5 for x in P_NX.elements}, 1)
    with pytest.raises(NotInS0):
        lp_member_chain(P_NX, bad)
    with pytest.raises(NotInT0):
        lp_member_order(P_NX, LatticePoint({x: 7 for x in P_NX.elements}, 1))


def test_lp_matches_combinatorial_exhaustive():
    for poset in all_posets_upto(4):
        for deg in (0, 1, 2):
            for pt in iter_points(poset, 'chain', deg):
                assert lp_member_chain(poset, pt) == chain_member(poset, pt).member
            for pt in iter_points(poset, 'order', deg):
                assert lp_member_order(poset, pt) == order_member(poset, pt).member


def test_bounded_search_finds_verifying_certificates():
    for poset, pt, ring in ((P_NX, XI_NX, 'chain'),
                            (P_CLAW, LatticePoint(
                                {'c': 3, 'd': 3, 'a': 2, 'y': 1, 'z': 0, 'w': 0},
                                3), 'order')):
        cert = bounded_search_certificate(poset, pt, ring=ring)
        assert cert is not None
        assert verify_certificate(poset, pt, cert)


def test_bounded_search_none_for_nonmembers():
    ones = LatticePoint({x: 1 for x in P_BOWTIE.elements}, 1)
    assert order_member(P_BOWTIE, ones).member is False
    assert bounded_search_certificate(P_BOWTIE, ones, ring='order',
                                      n_max=4) is None


def test_bounded_search_deterministic():
    a = bounded_search_certificate(P_NX, XI_NX, ring='chain')
    b = bounded_search_certificate(P_NX, XI_NX, ring='chain')
    assert a.eta.values == b.eta.values
    assert a.zeta.values == b.zeta.values
    assert a.N == b.N


def test_bounded_search_box_guard():
    with pytest.raises(BoxTooLarge):
        bounded_search_certificate(P_NX, XI_NX, ring='chain',
                                   n_max=10 ** 6, box=10 ** 6)


def test_deadline():
    past = time.monotonic() - 1.0
    with pytest.raises(DeadlineExceeded):
        bounded_search_certificate(P_NX, XI_NX, ring='chain', deadline=past)
    with pytest.raises(DeadlineExceeded):
        hilbert_equal(P_NX, 3, deadline=past)


def test_hilbert_equal_fixtures():
    assert hilbert_equal(P_NX, 3)
    assert hilbert_equal(P_CLAW, 3)
    assert hilbert_equal(chain_poset(3), 4)


def test_verify_facade():
    assert verify(P_NX, 'member', point=XI_NX, ring='chain')
    assert verify(P_NX, 'hilbert', d_max=2)
    cert = verify(P_NX, 'search', point=XI_NX, ring='chain')
    assert verify_certificate(P_NX, XI_NX, cert)
    with pytest.raises(InvalidFormat):
        verify(P_NX, 'no-such-claim')
    with pytest.raises(InvalidFormat):
        verify(P_NX, 'member', point=XI_NX, ring='weird')


@given(st.integers(0, 10 ** 6))
@settings(max_examples=30)
def test_lp_matches_combinatorial_random(seed):
    rng = make_rng(seed)
    poset = random_poset(rng, 5)
    for ring, lp in (('chain', lp_member_chain), ('order', lp_member_order)):
        pt = random_point(rng, poset, ring, 3)
        if ring == 'chain':
            assert in_S(pt, 0, poset)
            assert lp(poset, pt) == chain_member(poset, pt).member
        else:
            assert in_T(pt, 0, poset)
            assert lp(poset, pt) == order_member(poset, pt).member
