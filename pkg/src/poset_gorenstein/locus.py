'''The non-Gorenstein locus of the two Ehrhart rings.

The defining primes of the locus are indexed by combinatorial data on the
poset: on the order side by alternating cycles (a_1..a_u; b_1..b_u) whose
interval ranks strictly exceed the matching interval distances, and on the
chain side by chains with a non-pure star together with chain tuples
realizing those same cycles.  Each label carries the coheight of its prime;
the locus dimension is the maximum coheight.
'''

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange, PreconditionViolated
from .points import extended_both
from .posets import BOTTOM, TOP, Poset, is_sentinel


@dataclass(frozen=True)
class StarSequence:
    '''Alternating cycle a_1 < b_1 > a_2 < ... > a_u < b_u > a_1.

    The a-entries are pairwise incomparable, as are the b-entries; entry
    sentinels (-inf/+inf) can occur only when u = 1.  The defining
    inequality is sum_i rank[a_i, b_i] > sum_i dist[a_(i+1), b_i] (indices
    cyclic).
    '''

    a: tuple
    b: tuple

    @property
    def u(self):
        return len(self.a)


def is_star_sequence(poset, seq):
    '''Validate the cycle geometry and the strict rank/dist inequality.'''
    ext = extended_both(poset)
    u = len(seq.a)
    if u < 1 or len(seq.b) != u:
        return False
    entries = list(seq.a) + list(seq.b)
    for x in entries:
        if x not in ext:
            return False
    if u >= 2 and any(is_sentinel(x) for x in entries):
        return False
    for i in range(u):
        if not ext.less(seq.a[i], seq.b[i]):
            return False
        if not ext.less(seq.a[(i + 1) % u], seq.b[i]):
            return False
    for i in range(u):
        for j in range(i + 1, u):
            if ext.comparable(seq.a[i], seq.a[j]) or ext.comparable(seq.b[i], seq.b[j]):
                return False
    total_rank = sum(ext.interval_rank(seq.a[i], seq.b[i]) for i in range(u))
    total_dist = sum(ext.interval_dist(seq.a[(i + 1) % u], seq.b[i]) for i in range(u))
    return total_rank > total_dist


def enumerate_star_sequences(poset):
    '''All defining cycles, rotation-canonical (least-index first a-entry).

    Reflected cycles pair ranks and distances differently, so they are
    enumerated on their own merits.  Deterministic order: u = 1 pairs by
    element order first, then the depth-first u >= 2 search.
    '''
    cached = poset._cache.get('star_sequences')
    if cached is not None:
        return cached
    ext = extended_both(poset)
    seqs = []
    for a in ext.elements:
        for b in ext.elements:
            if ext.less(a, b) and ext.interval_rank(a, b) > ext.interval_dist(a, b):
                seqs.append(StarSequence((a,), (b,)))

    elems = poset.elements
    idx = poset.index
    a_list = []
    b_list = []

    def closes(b_last):
        u = len(a_list)
        if u < 2 or not ext.less(a_list[0], b_last):
            return False
        total_rank = sum(ext.interval_rank(a_list[i], b_list[i]) for i in range(u))
        total_dist = sum(ext.interval_dist(a_list[i + 1], b_list[i]) for i in range(u - 1))
        total_dist += ext.interval_dist(a_list[0], b_list[u - 1])
        return total_rank > total_dist

    def extend_b():
        for b in elems:
            if not ext.less(a_list[-1], b):
                continue
            if any(ext.comparable(b, prev) for prev in b_list):
                continue
            b_list.append(b)
            if closes(b):
                seqs.append(StarSequence(tuple(a_list), tuple(b_list)))
            extend_a()
            b_list.pop()

    def extend_a():
        for a in elems:
            if idx[a] <= idx[a_list[0]]:
                continue
            if not ext.less(a, b_list[-1]):
                continue
            if any(ext.comparable(a, prev) for prev in a_list):
                continue
            a_list.append(a)
            extend_b()
            a_list.pop()

    for a1 in elems:
        a_list.append(a1)
        extend_b()
        a_list.pop()

    poset._cache['star_sequences'] = seqs
    return seqs


def finite_star_sequences(poset):
    '''Defining cycles with no sentinel entries (chain-side raw material).'''
    return [s for s in enumerate_star_sequences(poset)
            if not any(is_sentinel(x) for x in list(s.a) + list(s.b))]


def sequence_mset(poset, seq):
    '''Elements x of the extension with a_i <= x <= b_j for some i, j.'''
    ext = extended_both(poset)
    return tuple(x for x in ext.elements
                 if any(ext.leq(a, x) for a in seq.a)
                 and any(ext.leq(x, b) for b in seq.b))


def order_coheight(poset, seq):
    '''Coheight of the order-side prime of a defining cycle.'''
    return len(poset.elements) - len(sequence_mset(poset, seq)) + 2


@dataclass(frozen=True)
class PrimeLabel:
    '''One defining prime of the locus.

    kind is "order_cycle", "chain_star" or "chain_cycle"; data is the cycle,
    the chain, or the realized (lower, upper) chain tuple; face_vertices is
    the set of polytope vertices on the face cut out by the prime, used for
    dedup and containment pruning (coheight = face dimension + 1).
    '''

    kind: str
    data: object
    coheight: int
    face_vertices: frozenset


def order_face_vertices(poset, seq):
    '''Vertices of the order polytope on the cycle's face.

    Vertices are ideal indicator functions extended by 1 at -inf and 0 at
    +inf; the face requires one common value on every cycle entry.
    '''
    entries = list(seq.a) + list(seq.b)
    out = []
    for ideal in poset.poset_ideals():
        vals = set()
        for x in entries:
            if x is BOTTOM:
                vals.add(1)
            elif x is TOP:
                vals.add(0)
            else:
                vals.add(1 if x in ideal else 0)
        if len(vals) == 1:
            out.append(ideal)
    return frozenset(out)


def chain_star_face_vertices(poset, chain):
    '''Antichain vertices of the chain polytope meeting the chain exactly once.'''
    cset = frozenset(chain)
    return frozenset(a for a in poset.antichains() if len(a & cset) == 1)


def chain_cycle_face_vertices(poset, lower, upper):
    '''Antichain vertices with total tuple intersection count u.'''
    u = len(lower)
    sets = [frozenset(c) for c in lower] + [frozenset(c) for c in upper]
    out = []
    for a in poset.antichains():
        if sum(len(a & s) for s in sets) == u:
            out.append(a)
    return frozenset(out)


def nonpure_star_chains(poset):
    '''Chains whose star is not pure, in all_chains order (cached).'''
    cached = poset._cache.get('nonpure_star_chains')
    if cached is None:
        cached = [c for c in poset.all_chains()
                  if not poset.is_pure_subset(poset.star(c))]
        poset._cache['nonpure_star_chains'] = cached
    return cached


def realize_chain_tuple(poset, seq):
    '''Build the greedy chain tuple over a cycle with u >= 2 finite entries.

    Lower chains walk down from each a_i through the common pool of elements
    below some a-entry, sorted by descending height (ties by element order),
    always taking the first available smaller element; each step drops the
    height by exactly 1, so the chains are saturated down to a minimal
    element.  Upper chains are built dually above the b-entries.
    '''
    if len(seq.a) < 2:
        raise PreconditionViolated('chain tuple realization needs u >= 2')
    if not is_star_sequence(poset, seq):
        raise PreconditionViolated('not a defining cycle')
    pool_down = [x for x in poset.elements if any(poset.less(x, a) for a in seq.a)]
    pool_down.sort(key=lambda x: (-poset.height(x), poset.index[x]))
    lower = []
    for a in seq.a:
        walk = [a]
        cur = a
        for _ in range(poset.height(a)):
            nxt = next((d for d in pool_down if poset.less(d, cur)), None)
            if nxt is None or poset.height(nxt) != poset.height(cur) - 1:
                raise PreconditionViolated('greedy lower chain stalled at %r' % (cur,))
            walk.append(nxt)
            cur = nxt
        lower.append(tuple(reversed(walk)))
    pool_up = [x for x in poset.elements if any(poset.less(b, x) for b in seq.b)]
    pool_up.sort(key=lambda x: (-poset.coheight(x), poset.index[x]))
    upper = []
    for b in seq.b:
        walk = [b]
        cur = b
        for _ in range(poset.coheight(b)):
            nxt = next((d for d in pool_up if poset.less(cur, d)), None)
            if nxt is None or poset.coheight(nxt) != poset.coheight(cur) - 1:
                raise PreconditionViolated('greedy upper chain stalled at %r' % (cur,))
            walk.append(nxt)
            cur = nxt
        upper.append(tuple(walk))
    return tuple(lower), tuple(upper)


def _order_labels(poset):
    out = []
    for seq in enumerate_star_sequences(poset):
        out.append(PrimeLabel('order_cycle', seq, order_coheight(poset, seq),
                              order_face_vertices(poset, seq)))
    return out


def _chain_labels(poset):
    n = len(poset.elements)
    out = []
    for chain in nonpure_star_chains(poset):
        out.append(PrimeLabel('chain_star', chain, n - len(poset.link(chain)),
                              chain_star_face_vertices(poset, chain)))
    for seq in finite_star_sequences(poset):
        if seq.u < 2:
            continue
        lower, upper = realize_chain_tuple(poset, seq)
        coheight = n - len(sequence_mset(poset, seq)) + 2
        out.append(PrimeLabel('chain_cycle', (lower, upper), coheight,
                              chain_cycle_face_vertices(poset, lower, upper)))
    return out


def _prune(labels):
    '''Dedupe by face vertex set, then keep only minimal primes (maximal faces).'''
    seen = {}
    for lab in labels:
        if lab.face_vertices not in seen:
            seen[lab.face_vertices] = lab
    kept = list(seen.values())
    out = []
    for lab in kept:
        if any(other is not lab and lab.face_vertices < other.face_vertices
               for other in kept):
            continue
        out.append(lab)
    out.sort(key=lambda lab: (-lab.coheight, lab.kind, repr(lab.data)))
    return out


def order_radical_decomposition(poset):
    '''Minimal defining primes of the locus on the order polytope side.'''
    return _prune(_order_labels(poset))


def chain_radical_decomposition(poset):
    '''Minimal defining primes of the locus on the chain polytope side.'''
    return _prune(_chain_labels(poset))


def order_locus_dimension(poset):
    '''Dimension of the non-Gorenstein locus (order side); -1 when empty.'''
    labels = _order_labels(poset)
    if not labels:
        return -1
    return max(lab.coheight for lab in labels)


def chain_locus_dimension(poset):
    '''Dimension of the non-Gorenstein locus (chain side); -1 when empty.

    Computed from the chain-side labels alone; agreement with the order side
    is a checked invariant of the tests, not an implementation shortcut.
    '''
    labels = _chain_labels(poset)
    if not labels:
        return -1
    return max(lab.coheight for lab in labels)


def _affine_rank(vectors):
    '''Affine dimension of a finite point set (-1 empty, 0 a single point).'''
    if not vectors:
        return -1
    base = vectors[0]
    width = len(base)
    basis = []
    for v in vectors[1:]:
        if len(basis) == width:
            break
        row = [Fraction(x - y) for x, y in zip(v, base)]
        for piv, b in basis:
            if row[piv]:
                f = row[piv]
                row = [x - f * y for x, y in zip(row, b)]
        piv = next((i for i, x in enumerate(row) if x), None)
        if piv is not None:
            f = row[piv]
            basis.append((piv, [x / f for x in row]))
    return len(basis)


def face_dimension(poset, label):
    '''Dimension of the polytope face cut out by a prime label.

    Star and order-cycle labels have closed forms; chain tuple faces are
    measured as the affine rank of their vertex set.
    '''
    n = len(poset.elements)
    if label.kind == 'chain_star':
        return n - len(poset.link(label.data)) - 1
    if label.kind == 'order_cycle':
        return n - len(sequence_mset(poset, label.data)) + 1
    if label.kind == 'chain_cycle':
        order = poset.elements
        vecs = [tuple(1 if e in v else 0 for e in order)
                for v in sorted(label.face_vertices, key=lambda s: sorted(map(repr, s)))]
        return _affine_rank(vecs)
    raise PreconditionViolated('unknown label kind %r' % (label.kind,))


def vertex_affine_dimension(vertices, order):
    '''Affine dimension of indicator vectors of vertex sets (test cross-check).'''
    vecs = [tuple(1 if e in v else 0 for e in order)
            for v in sorted(vertices, key=lambda s: sorted(map(repr, s)))]
    return _affine_rank(vecs)


def ring_dimension(poset):
    '''Krull dimension of either Ehrhart ring: element count plus one.'''
    return len(poset.elements) + 1


def generate_poset(n, m):
    '''A poset whose Ehrhart rings have dimension n and locus dimension m.

    Construction: (chain of n-m-2 elements, disjoint point) with a chain of
    m elements stacked on top of both.  Requires 0 <= m <= n-4.
    '''
    if not isinstance(n, int) or not isinstance(m, int) or n < 4 or m < 0 or m > n - 4:
        raise OutOfRange('need integers with 4 <= n and 0 <= m <= n-4')
    k = n - m - 2
    elements = ['p%d' % i for i in range(1, k + 1)] + ['q'] + \
               ['r%d' % i for i in range(1, m + 1)]
    covers = [('p%d' % i, 'p%d' % (i + 1)) for i in range(1, k)]
    covers += [('r%d' % i, 'r%d' % (i + 1)) for i in range(1, m)]
    if m >= 1:
        covers += [('p%d' % k, 'r1'), ('q', 'r1')]
    return Poset(elements, covers)
