'''Finite posets given by cover relations.

Everything else in the package sits on top of this module: chains, interval
ranks and distances, stars and links, purity tests, bottom/top extensions,
covering-relation posets, contractions, ideals and antichains.

Elements are arbitrary hashable identifiers (JSON files use strings).  The
declared element order fixes every iteration order, so all outputs are
deterministic functions of the input.
'''

import heapq
import warnings

from .errors import (
    CycleDetected,
    DuplicateElement,
    EmptyPoset,
    InvalidFormat,
    IsAntichain,
    NonReducedCover,
    NotAChain,
    NotComparable,
    PreconditionViolated,
    UnknownElementInCover,
)


class _Sentinel:
    '''Adjoined artificial element; compares by identity.'''

    __slots__ = ('label',)

    def __init__(self, label):
        self.label = label

    def __repr__(self):
        return self.label


BOTTOM = _Sentinel('-inf')
TOP = _Sentinel('+inf')
BLOB = _Sentinel('*')      # the glued element produced by contract()

_SENTINELS = (BOTTOM, TOP, BLOB)


def is_sentinel(x):
    '''True for the adjoined -inf/+inf/* elements.'''
    return isinstance(x, _Sentinel)


class Poset:
    '''Immutable finite poset built from cover relations.

    Covers are validated (unknown elements, duplicates, cycles) and reduced:
    transitively implied pairs are dropped with a NonReducedCover warning.
    '''

    __slots__ = ('elements', 'covers', 'index', '_up', '_down',
                 '_upmask', '_downmask', '_topo', '_cache')

    def __init__(self, elements, covers):
        elements = tuple(elements)
        index = {}
        for e in elements:
            if e in index:
                raise DuplicateElement('duplicate element %r' % (e,))
            index[e] = len(index)
        n = len(elements)
        edges = set()
        for pair in covers:
            x, y = pair
            if x not in index:
                raise UnknownElementInCover('cover mentions unknown element %r' % (x,))
            if y not in index:
                raise UnknownElementInCover('cover mentions unknown element %r' % (y,))
            i, j = index[x], index[y]
            if i == j:
                raise CycleDetected('self-cover on %r' % (x,))
            edges.add((i, j))
        up = [[] for _ in range(n)]
        for i, j in sorted(edges):
            up[i].append(j)
        topo = _toposort(n, up)

        # strict reachability masks, then transitive reduction
        reach = [0] * n
        for i in reversed(topo):
            m = 0
            for j in up[i]:
                m |= (1 << j) | reach[j]
            reach[i] = m
        redundant = set()
        for i, j in edges:
            for k in up[i]:
                if k != j and (reach[k] >> j) & 1:
                    redundant.add((i, j))
                    break
        if redundant:
            pretty = sorted((elements[i], elements[j]) for i, j in redundant)
            warnings.warn(NonReducedCover(
                'removed %d transitively implied cover(s): %r' % (len(pretty), pretty)))
            edges -= redundant

        self.elements = elements
        self.index = index
        self.covers = tuple((elements[i], elements[j]) for i, j in sorted(edges))
        upl = [[] for _ in range(n)]
        downl = [[] for _ in range(n)]
        for i, j in sorted(edges):
            upl[i].append(j)
            downl[j].append(i)
        self._up = tuple(tuple(v) for v in upl)
        self._down = tuple(tuple(sorted(v)) for v in downl)
        self._topo = tuple(topo)
        upmask = [0] * n
        for i in reversed(self._topo):
            m = 0
            for j in self._up[i]:
                m |= (1 << j) | upmask[j]
            upmask[i] = m
        downmask = [0] * n
        for i in self._topo:
            m = 0
            for j in self._down[i]:
                m |= (1 << j) | downmask[j]
            downmask[i] = m
        self._upmask = tuple(upmask)
        self._downmask = tuple(downmask)
        self._cache = {}

    # -- basic relation queries ------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __repr__(self):
        return 'Poset(%d elements, %d covers)' % (len(self.elements), len(self.covers))

    def _need(self, x):
        try:
            return self.index[x]
        except KeyError:
            raise NotAChain('unknown element %r' % (x,)) from None

    def less(self, x, y):
        '''Strict order: x < y.'''
        return (self._upmask[self._need(x)] >> self._need(y)) & 1 == 1

    def leq(self, x, y):
        i, j = self._need(x), self._need(y)
        return i == j or (self._upmask[i] >> j) & 1 == 1

    def comparable(self, x, y):
        i, j = self._need(x), self._need(y)
        return i == j or (self._upmask[i] >> j) & 1 or (self._upmask[j] >> i) & 1

    def up_covers(self, x):
        return tuple(self.elements[j] for j in self._up[self._need(x)])

    def down_covers(self, x):
        return tuple(self.elements[j] for j in self._down[self._need(x)])

    def minimal_elements(self):
        return tuple(e for i, e in enumerate(self.elements) if not self._down[i])

    def maximal_elements(self):
        return tuple(e for i, e in enumerate(self.elements) if not self._up[i])

    def linear_extension(self):
        '''Fixed linear extension (lowest declared index first among ready elements).'''
        return tuple(self.elements[i] for i in self._topo)

    # -- chains ----------------------------------------------------------

    def is_chain(self, subset):
        elems = [self._need(x) for x in subset]
        for a in range(len(elems)):
            for b in range(a + 1, len(elems)):
                i, j = elems[a], elems[b]
                if i == j:
                    return False
                if not ((self._upmask[i] >> j) & 1 or (self._upmask[j] >> i) & 1):
                    return False
        return True

    def sort_chain(self, subset):
        '''Return the chain as a tuple in increasing poset order; NotAChain otherwise.'''
        elems = list(subset)
        if not self.is_chain(elems):
            raise NotAChain('subset %r is not a chain' % (sorted(map(str, elems)),))
        idx = sorted(set(self._need(x) for x in elems),
                     key=lambda i: bin(self._downmask[i]).count('1'))
        return tuple(self.elements[i] for i in idx)

    def maximal_chains(self):
        '''All inclusion-maximal chains, as tuples in increasing order.

        Deterministic: depth-first from minimal elements in declared order.
        The empty poset has exactly one (empty) maximal chain.
        '''
        cached = self._cache.get('maximal_chains')
        if cached is not None:
            return cached
        n = len(self.elements)
        if n == 0:
            out = [()]
            self._cache['maximal_chains'] = out
            return out
        out = []
        stack = []

        def walk(i):
            stack.append(i)
            if not self._up[i]:
                out.append(tuple(self.elements[k] for k in stack))
            else:
                for j in self._up[i]:
                    walk(j)
            stack.pop()

        for i in range(n):
            if not self._down[i]:
                walk(i)
        self._cache['maximal_chains'] = out
        return out

    def all_chains(self):
        '''Iterate over every chain (the empty chain first), deterministically.'''
        yield ()
        n = len(self.elements)
        path = []

        def walk(i):
            path.append(i)
            yield tuple(self.elements[k] for k in path)
            m = self._upmask[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                yield from walk(j)
            path.pop()

        for i in range(n):
            yield from walk(i)

    # -- star / link / purity --------------------------------------------

    def _comp_mask(self, i):
        return self._upmask[i] | self._downmask[i] | (1 << i)

    def star(self, chain):
        '''Elements x such that chain + {x} is still a chain (includes the chain).'''
        if not self.is_chain(chain):
            raise NotAChain('star() needs a chain')
        mask = (1 << len(self.elements)) - 1
        for c in chain:
            mask &= self._comp_mask(self.index[c])
        return tuple(e for i, e in enumerate(self.elements) if (mask >> i) & 1)

    def link(self, chain):
        '''star(chain) minus the chain itself.'''
        cset = set(chain)
        return tuple(e for e in self.star(chain) if e not in cset)

    def is_pure_subset(self, subset):
        '''True when all maximal chains of the induced subposet have equal length.

        Criterion: heights inside the subset rise by exactly 1 along induced
        covers and all maximal elements of the subset share the same height.
        The empty subset is pure.
        '''
        idx = sorted(set(self._need(x) for x in subset))
        if not idx:
            return True
        smask = 0
        for i in idx:
            smask |= 1 << i
        pos = {i: p for p, i in enumerate(idx)}
        h = {}
        for i in self._topo:
            if not (smask >> i) & 1:
                continue
            below = self._downmask[i] & smask
            best = -1
            m = below
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if h[j] > best:
                    best = h[j]
            h[i] = best + 1
        top_h = None
        for i in idx:
            above = self._upmask[i] & smask
            if above == 0:
                if top_h is None:
                    top_h = h[i]
                elif h[i] != top_h:
                    return False
            # induced covers out of i: j above i with empty open interval in subset
            m = above
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if self._upmask[i] & self._downmask[j] & smask:
                    continue
                if h[j] != h[i] + 1:
                    return False
        return True

    def is_pure(self):
        return self.is_pure_subset(self.elements)

    def rank(self):
        '''Length (edge count) of the longest chain; -1 for the empty poset.'''
        if not self.elements:
            return -1
        return max(self.height(e) for e in self.elements)

    def height(self, x):
        '''Longest chain below x, counted in edges (0 for minimal elements).'''
        hs = self._cache.get('heights')
        if hs is None:
            hs = [0] * len(self.elements)
            for i in self._topo:
                hs[i] = max((hs[j] + 1 for j in self._down[i]), default=0)
            self._cache['heights'] = hs
        return hs[self._need(x)]

    def coheight(self, x):
        '''Longest chain above x, counted in edges.'''
        cs = self._cache.get('coheights')
        if cs is None:
            cs = [0] * len(self.elements)
            for i in reversed(self._topo):
                cs[i] = max((cs[j] + 1 for j in self._up[i]), default=0)
            self._cache['coheights'] = cs
        return cs[self._need(x)]

    # -- interval rank / dist ---------------------------------------------

    def _paths(self):
        '''All-pairs longest/shortest saturated chain lengths along covers.'''
        mats = self._cache.get('paths')
        if mats is None:
            n = len(self.elements)
            INF = float('inf')
            longest = [dict() for _ in range(n)]
            shortest = [dict() for _ in range(n)]
            order = self._topo
            for src in range(n):
                lo = {src: 0}
                sh = {src: 0}
                for j in order:
                    if j == src or not (self._upmask[src] >> j) & 1:
                        continue
                    best = -1
                    least = INF
                    for p in self._down[j]:
                        if p in lo:
                            if lo[p] + 1 > best:
                                best = lo[p] + 1
                            if sh[p] + 1 < least:
                                least = sh[p] + 1
                    lo[j] = best
                    sh[j] = least
                longest[src] = lo
                shortest[src] = sh
            mats = (longest, shortest)
            self._cache['paths'] = mats
        return mats

    def interval_rank(self, x, y):
        '''Longest saturated chain length from x to y (0 when x == y).'''
        i, j = self._need(x), self._need(y)
        if i == j:
            return 0
        if not (self._upmask[i] >> j) & 1:
            raise NotComparable('%r and %r do not bound an interval' % (x, y))
        return self._paths()[0][i][j]

    def interval_dist(self, x, y):
        '''Shortest saturated chain length from x to y (0 when x == y).'''
        i, j = self._need(x), self._need(y)
        if i == j:
            return 0
        if not (self._upmask[i] >> j) & 1:
            raise NotComparable('%r and %r do not bound an interval' % (x, y))
        return self._paths()[1][i][j]

    # -- derived posets ----------------------------------------------------

    def extend(self, mode='both'):
        '''Adjoin an artificial bottom (-inf), top (+inf), or both.'''
        if mode not in ('plus', 'minus', 'both'):
            raise ValueError('mode must be plus, minus or both')
        elements = list(self.elements)
        covers = list(self.covers)
        if mode in ('minus', 'both'):
            mins = self.minimal_elements()
            elements = [BOTTOM] + elements
            covers = [(BOTTOM, m) for m in mins] + covers
        if mode in ('plus', 'both'):
            maxs = self.maximal_elements()
            elements = elements + [TOP]
            covers = covers + [(z, TOP) for z in maxs]
        if not self.elements and mode == 'both':
            covers = [(BOTTOM, TOP)]
        return Poset(elements, covers)

    def induced(self, subset):
        '''Induced subposet on the given elements (declared order kept).'''
        idx = [i for i in range(len(self.elements)) if self.elements[i] in set(subset)]
        for x in subset:
            self._need(x)
        smask = 0
        for i in idx:
            smask |= 1 << i
        covers = []
        for i in idx:
            m = self._upmask[i] & smask
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if not (self._upmask[i] & self._downmask[j] & smask):
                    covers.append((self.elements[i], self.elements[j]))
        return Poset(tuple(self.elements[i] for i in idx), covers)

    def covering_relation_poset(self):
        '''Poset on the covers of this poset: (x1,y1) < (x2,y2) iff y1 <= x2.'''
        if not self.covers:
            raise IsAntichain('the poset has no covers')
        pairs = list(self.covers)
        k = len(pairs)
        less = [[False] * k for _ in range(k)]
        for a in range(k):
            for b in range(k):
                if a != b and self.leq(pairs[a][1], pairs[b][0]):
                    less[a][b] = True
        covers = []
        for a in range(k):
            for b in range(k):
                if less[a][b] and not any(less[a][c] and less[c][b] for c in range(k)):
                    covers.append((pairs[a], pairs[b]))
        return Poset(pairs, covers)

    def connected_components(self):
        '''Induced subposets on the connected components of the cover graph.'''
        n = len(self.elements)
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in list(self._up[i]) + list(self._down[i]):
                    if not seen[j]:
                        seen[j] = True
                        stack.append(j)
            comps.append(self.induced(tuple(self.elements[i] for i in sorted(comp))))
        return comps

    def poset_ideals(self):
        '''All down-closed subsets as frozensets, in a fixed generation order.'''
        cached = self._cache.get('ideals')
        if cached is not None:
            return cached
        order = [self.index[e] for e in self.linear_extension()]
        out = []
        current = set()

        def walk(k):
            if k == len(order):
                out.append(frozenset(self.elements[i] for i in current))
                return
            i = order[k]
            # exclude i
            walk(k + 1)
            # include i if all lower covers are in
            if all(j in current for j in self._down[i]):
                current.add(i)
                walk(k + 1)
                current.remove(i)

        walk(0)
        self._cache['ideals'] = out
        return out

    def antichains(self):
        '''All antichains as frozensets (the empty one first), fixed order.'''
        cached = self._cache.get('antichains')
        if cached is not None:
            return cached
        n = len(self.elements)
        out = []
        current = []

        def walk(start):
            out.append(frozenset(self.elements[i] for i in current))
            for i in range(start, n):
                cm = self._comp_mask(i)
                if all(not (cm >> j) & 1 for j in current):
                    current.append(i)
                    walk(i + 1)
                    current.pop()

        walk(0)
        self._cache['antichains'] = out
        return out


def _toposort(n, up):
    indeg = [0] * n
    for i in range(n):
        for j in up[i]:
            indeg[j] += 1
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        i = heapq.heappop(heap)
        order.append(i)
        for j in up[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, j)
    if len(order) != n:
        raise CycleDetected('cover relations contain a directed cycle')
    return order


def build_poset(elements, covers):
    '''Build and validate a poset from element ids and cover pairs.'''
    return Poset(elements, covers)


def contract(poset, blob):
    '''Glue a subset to a single element *.

    The result has base (P minus blob) plus {*}; alpha < beta holds when it
    held in P, or alpha < x for some x in blob (then alpha < *), or y < beta
    for some y in blob (then * < beta), or alpha < x and y < beta for
    x, y in blob.  Raises PreconditionViolated when the rules do not define
    a partial order (the subset is not an interval-like region).
    '''
    blob = set(blob)
    for x in blob:
        poset._need(x)
    if not blob:
        raise PreconditionViolated('contract() needs a nonempty subset')
    keep = [e for e in poset.elements if e not in blob]
    elems = keep + [BLOB]
    below_blob = set()
    above_blob = set()
    for e in keep:
        if any(poset.less(e, x) for x in blob):
            below_blob.add(e)
        if any(poset.less(x, e) for x in blob):
            above_blob.add(e)
    rel = set()
    for a in keep:
        for b in keep:
            if a != b and poset.less(a, b):
                rel.add((a, b))
            if a != b and a in below_blob and b in above_blob:
                rel.add((a, b))
    for a in below_blob:
        rel.add((a, BLOB))
    for b in above_blob:
        rel.add((BLOB, b))
    # transitive closure, then antisymmetry check
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    if a == d:
                        raise PreconditionViolated('contraction is not a partial order')
                    rel.add((a, d))
                    changed = True
    for (a, b) in rel:
        if (b, a) in rel:
            raise PreconditionViolated('contraction is not a partial order')
    covers = [(a, b) for (a, b) in rel
              if not any((a, c) in rel and (c, b) in rel for c in elems)]
    return Poset(elems, covers)


def poset_to_dict(poset):
    '''JSON-ready dict {"elements": [...], "covers": [[x, y], ...]}.'''
    return {'elements': list(poset.elements),
            'covers': [[x, y] for x, y in poset.covers]}


def poset_from_dict(data):
    '''Validate the file shape and build the poset.'''
    if not isinstance(data, dict):
        raise InvalidFormat('poset file must be a JSON object')
    if set(data) - {'elements', 'covers'}:
        raise InvalidFormat('unexpected keys %r' % (sorted(set(data) - {'elements', 'covers'}),))
    elements = data.get('elements')
    covers = data.get('covers', [])
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InvalidFormat('"elements" must be a list of strings')
    if not isinstance(covers, list):
        raise InvalidFormat('"covers" must be a list of pairs')
    pairs = []
    for c in covers:
        if not isinstance(c, list) or len(c) != 2 or not all(isinstance(t, str) for t in c):
            raise InvalidFormat('each cover must be a pair of element names')
        pairs.append((c[0], c[1]))
    return Poset(elements, pairs)


def element_to_json(x):
    '''Render an element (or sentinel) for reports.'''
    if x is BOTTOM:
        return '-inf'
    if x is TOP:
        return '+inf'
    if x is BLOB:
        return '*'
    return x
