import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import (P_BOWTIE, P_CLAW, P_FACEGAP, P_LADDER, P_NX,
                      antichain_poset, chain_poset)
from poset_gorenstein import (BOTTOM, TOP, OutOfRange, PreconditionViolated,
                              StarSequence, chain_locus_dimension,
                              chain_radical_decomposition, contract,
                              enumerate_star_sequences, face_dimension,
                              generate_poset, is_star_sequence,
                              order_locus_dimension,
                              order_radical_decomposition,
                              realize_chain_tuple, ring_dimension,
                              sequence_mset)
from poset_gorenstein.locus import (chain_cycle_face_vertices, order_coheight,
                                    vertex_affine_dimension)
from poset_gorenstein.sampling import make_rng, random_poset


def test_star_sequences_bowtie():
    seqs = {(s.a, s.b) for s in enumerate_star_sequences(P_BOWTIE)}
    assert seqs == {
        ((BOTTOM,), ('b1',)),
        (('a1',), (TOP,)),
        ((BOTTOM,), (TOP,)),
        (('a1', 'a2'), ('b1', 'b2')),
    }


def test_is_star_sequence_checks():
    assert is_star_sequence(P_BOWTIE, StarSequence(('a1', 'a2'), ('b1', 'b2')))
    # comparable a-entries are rejected
    assert not is_star_sequence(P_BOWTIE, StarSequence(('a1', 'x'), ('b1', 'b2')))
    # pairing without the strict rank surplus is rejected
    assert not is_star_sequence(P_BOWTIE, StarSequence(('a1',), ('b2',)))
    # sentinels are only allowed when u == 1
    assert not is_star_sequence(P_BOWTIE, StarSequence(('a1', BOTTOM), ('b1', 'b2')))
    assert is_star_sequence(P_BOWTIE, StarSequence((BOTTOM,), (TOP,)))


def test_sequence_mset_and_coheight():
    seq = StarSequence(('a1', 'a2'), ('b1', 'b2'))
    assert set(sequence_mset(P_LADDER, seq)) == {'a1', 'a2', 'm', 'b1', 'b2'}
    assert order_coheight(P_LADDER, seq) == 6
    full = StarSequence((BOTTOM,), (TOP,))
    assert order_coheight(P_BOWTIE, full) == 0


def test_locus_dimensions_fixtures():
    assert order_locus_dimension(P_BOWTIE) == 2
    assert chain_locus_dimension(P_BOWTIE) == 2
    assert order_locus_dimension(P_CLAW) == 3
    assert chain_locus_dimension(P_CLAW) == 3
    assert order_locus_dimension(P_LADDER) == 6
    assert chain_locus_dimension(P_LADDER) == 6
    assert order_locus_dimension(chain_poset(4)) == -1
    assert chain_locus_dimension(chain_poset(4)) == -1
    assert order_locus_dimension(antichain_poset(3)) == -1


def test_decomposition_bowtie():
    order = order_radical_decomposition(P_BOWTIE)
    assert len(order) == 3
    assert all(lab.coheight == 2 for lab in order)
    chain = chain_radical_decomposition(P_BOWTIE)
    assert len(chain) == 3
    kinds = sorted(lab.kind for lab in chain)
    assert kinds == ['chain_cycle', 'chain_star', 'chain_star']
    stars = {lab.data for lab in chain if lab.kind == 'chain_star'}
    assert stars == {('a1',), ('b1',)}


def test_decomposition_claw():
    order = order_radical_decomposition(P_CLAW)
    assert len(order) == 1
    lab = order[0]
    assert lab.data.a == ('a',) and lab.data.b == (TOP,)
    assert lab.coheight == 3
    chain = chain_radical_decomposition(P_CLAW)
    assert {lab.data for lab in chain} == {('c', 'a'), ('d', 'a')}
    assert all(lab.coheight == 3 for lab in chain)


def test_decomposition_ladder():
    order = order_radical_decomposition(P_LADDER)
    assert len(order) == 3
    data = {(lab.data.a, lab.data.b): lab.coheight for lab in order}
    assert data == {
        (('a1',), (TOP,)): 4,
        ((BOTTOM,), ('b1',)): 4,
        (('a1', 'a2'), ('b1', 'b2')): 6,
    }
    chain = chain_radical_decomposition(P_LADDER)
    assert len(chain) == 3
    assert chain_locus_dimension(P_LADDER) == max(lab.coheight for lab in chain)


def test_coheight_face_dimension_relation():
    for poset in (P_BOWTIE, P_CLAW, P_LADDER, P_NX):
        for lab in order_radical_decomposition(poset):
            assert lab.coheight == face_dimension(poset, lab) + 1
        for lab in chain_radical_decomposition(poset):
            assert lab.coheight == face_dimension(poset, lab) + 1


def test_realize_chain_tuple_facegap():
    seq = StarSequence(('a1', 'a2'), ('b1', 'b2'))
    lower, upper = realize_chain_tuple(P_FACEGAP, seq)
    assert lower == (('d1', 'a1'), ('d1', 'a2'))
    assert upper == (('b1',), ('b2',))
    with pytest.raises(PreconditionViolated):
        realize_chain_tuple(P_FACEGAP, StarSequence(('a1',), ('b1',)))
    with pytest.raises(PreconditionViolated):
        realize_chain_tuple(P_FACEGAP, StarSequence(('a1', 'e'), ('b1', 'b2')))


def test_facegap_dimensions():
    naive = chain_cycle_face_vertices(P_FACEGAP, (('d1', 'a1'), ('d2', 'a2')),
                                      (('b1',), ('b2',)))
    assert vertex_affine_dimension(naive, P_FACEGAP.elements) == 2
    labels = [lab for lab in chain_radical_decomposition(P_FACEGAP)
              if lab.kind == 'chain_cycle']
    assert len(labels) == 1
    assert face_dimension(P_FACEGAP, labels[0]) == 3
    assert labels[0].coheight == 4


def test_contract_matches_order_face_dimension():
    rng = make_rng(23)
    pool = [P_BOWTIE, P_LADDER, P_FACEGAP, P_NX]
    pool += [random_poset(rng, 7) for _ in range(40)]
    checked = 0
    for p in pool:
        for seq in enumerate_star_sequences(p):
            entries = list(seq.a) + list(seq.b)
            if any(x in (BOTTOM, TOP) for x in entries):
                continue
            finite_m = [x for x in sequence_mset(p, seq)
                        if x not in (BOTTOM, TOP)]
            glued = contract(p, finite_m)
            from poset_gorenstein.locus import PrimeLabel, order_face_vertices
            lab = PrimeLabel('order_cycle', seq, order_coheight(p, seq),
                             order_face_vertices(p, seq))
            assert len(glued) == face_dimension(p, lab)
            checked += 1
    assert checked > 5


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40)
def test_locus_dimension_agrees_between_rings(seed):
    p = random_poset(make_rng(seed), 7)
    assert order_locus_dimension(p) == chain_locus_dimension(p)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=25)
def test_locus_empty_iff_pure(seed):
    p = random_poset(make_rng(seed), 6)
    empty = order_locus_dimension(p) == -1
    assert empty == p.is_pure()
    if not empty:
        # the bound forced by the smallest possible defining cycle
        assert order_locus_dimension(p) <= len(p.elements) - 3


def test_generate_poset_grid():
    for n in range(4, 9):
        for m in range(0, n - 3):
            p = generate_poset(n, m)
            assert ring_dimension(p) == n
            assert order_locus_dimension(p) == m
            assert chain_locus_dimension(p) == m
    for bad in ((3, 0), (4, 1), (5, -1), (6, 3)):
        with pytest.raises(OutOfRange):
            generate_poset(*bad)


def test_decomposition_determinism():
    one = [(lab.kind, repr(lab.data)) for lab in chain_radical_decomposition(P_LADDER)]
    two = [(lab.kind, repr(lab.data)) for lab in chain_radical_decomposition(P_LADDER)]
    assert one == two
    fresh = order_radical_decomposition(P_BOWTIE)
    again = order_radical_decomposition(P_BOWTIE)
    assert [l.data for l in fresh] == [l.data for l in again]
