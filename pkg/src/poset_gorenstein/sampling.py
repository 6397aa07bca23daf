'''Seeded generators for property tests and the exhaustive small-poset list.

Randomness always flows through an explicit random.Random instance; the
default seed comes from the POSET_GORENSTEIN_SEED environment variable so
reruns are reproducible end to end.
'''

import itertools
import os
import random

from .posets import Poset

DEFAULT_SEED = 987123


def env_seed():
    '''Seed from POSET_GORENSTEIN_SEED, else the package default.'''
    raw = os.environ.get('POSET_GORENSTEIN_SEED')
    return int(raw) if raw else DEFAULT_SEED


def make_rng(seed=None):
    return random.Random(env_seed() if seed is None else seed)


def random_poset(rng, max_elements, min_elements=1):
    '''A random poset: sparse relation on a shuffled order, then closed.'''
    n = rng.randint(min_elements, max_elements)
    names = ['e%d' % i for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    density = rng.uniform(0.15, 0.5)
    rel = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rel[perm[i]][perm[j]] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    covers = []
    for i in range(n):
        for j in range(n):
            if rel[i][j] and not any(rel[i][k] and rel[k][j] for k in range(n)):
                covers.append((names[i], names[j]))
    return Poset(names, covers)


def random_point(rng, poset, ring, degree):
    '''A uniform-ish lattice point of the given degree cone.

    Order side: values fall as we walk a linear extension, each bounded by
    the values already chosen on the covers below.  Chain side: values are
    drawn against the remaining budget of every maximal chain through the
    element.
    '''
    from .points import LatticePoint

    values = {}
    if ring == 'order':
        for e in poset.linear_extension():
            ub = min((values[p] for p in poset.down_covers(e)), default=degree)
            values[e] = rng.randint(0, ub)
        return LatticePoint(values, degree)
    if ring == 'chain':
        chains = poset.maximal_chains()
        budget = {i: degree for i in range(len(chains))}
        through = {e: [i for i, c in enumerate(chains) if e in c]
                   for e in poset.elements}
        for e in poset.elements:
            ub = min((budget[i] for i in through[e]), default=degree)
            v = rng.randint(0, ub)
            values[e] = v
            for i in through[e]:
                budget[i] -= v
        return LatticePoint(values, degree)
    raise ValueError('ring must be "order" or "chain"')


def _transitive(rel):
    for (i, j) in rel:
        for (j2, k) in rel:
            if j == j2 and (i, k) not in rel:
                return False
    return True


def _canonical(k, rel):
    best = None
    for perm in itertools.permutations(range(k)):
        key = tuple(sorted((perm[i], perm[j]) for (i, j) in rel))
        if best is None or key < best:
            best = key
    return best


def all_posets_upto(max_n, include_empty=False):
    '''Every poset with at most max_n elements, one per isomorphism class.

    Strict relations are enumerated as transitive subsets of the upper
    triangle (every finite poset relabels into one), then deduplicated by a
    minimal canonical form over all permutations.  Practical for max_n <= 5.
    '''
    out = []
    lo = 0 if include_empty else 1
    for k in range(lo, max_n + 1):
        pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
        seen = set()
        for bits in range(1 << len(pairs)):
            rel = frozenset(p for t, p in enumerate(pairs) if (bits >> t) & 1)
            if not _transitive(rel):
                continue
            canon = _canonical(k, rel)
            if canon in seen:
                continue
            seen.add(canon)
            names = ['e%d' % i for i in range(k)]
            covers = [(names[i], names[j]) for (i, j) in rel
                      if not any((i, t) in rel and (t, j) in rel for t in range(k))]
            out.append(Poset(names, covers))
    return out
