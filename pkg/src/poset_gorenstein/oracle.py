'''Independent brute-force checks, kept deliberately separate from the fast path.

Membership is re-decided here by exact rational feasibility of the defining
inequalities (Fourier-Motzkin over integers), certificates are re-found by
bounded integer search, and the two Ehrhart series are compared degreewise
by direct lattice point counts.  Nothing in this module consults the
structural criteria used by the main implementation.
'''

import math
import time
from fractions import Fraction

from .errors import BoxTooLarge, DeadlineExceeded, InvalidFormat, NotInS0, NotInT0
from .membership import Certificate
from .points import LatticePoint, count_points, in_S, in_T
from .posets import BOTTOM, TOP


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise DeadlineExceeded('oracle ran past its deadline')


def _normalize(coeffs, const):
    '''Normalize a row of sum(a_i x_i) + c >= 0; None if vacuous, False if absurd.'''
    if not any(coeffs):
        return None if const >= 0 else False
    g = 0
    for a in coeffs:
        g = math.gcd(g, abs(a))
    g = math.gcd(g, abs(const))
    if g > 1:
        coeffs = tuple(a // g for a in coeffs)
        const = const // g
    return (tuple(coeffs), const)


class LinearSystem:
    '''A conjunction of integer inequalities sum(a_i x_i) + c >= 0.

    feasible() runs exact Fourier-Motzkin elimination, picking at each step
    the variable minimizing the product of positive and negative occurrence
    counts, normalizing rows by their gcd and keeping only the tightest
    constant per coefficient pattern.  On success a rational sample solution
    is rebuilt by back substitution.
    '''

    def __init__(self, variables):
        self.variables = list(variables)
        self._index = {v: i for i, v in enumerate(self.variables)}
        self.rows = []

    def add(self, coeffs, const=0):
        row = [0] * len(self.variables)
        for v, a in coeffs.items():
            row[self._index[v]] += a
        self.rows.append((tuple(row), const))

    def feasible(self, deadline=None):
        '''Return (True, sample dict) or (False, None), exactly.'''
        nv = len(self.variables)
        rows = {}
        for coeffs, const in self.rows:
            norm = _normalize(coeffs, const)
            if norm is None:
                continue
            if norm is False:
                return False, None
            c, k = norm
            if c not in rows or k < rows[c]:
                rows[c] = k
        remaining = list(range(nv))
        eliminated = []
        while remaining:
            _check_deadline(deadline)
            best_v = None
            best_cost = None
            for v in remaining:
                pos = sum(1 for c in rows if c[v] > 0)
                neg = sum(1 for c in rows if c[v] < 0)
                cost = pos * neg
                if best_cost is None or cost < best_cost:
                    best_v, best_cost = v, cost
            v = best_v
            remaining.remove(v)
            pos = [(c, k) for c, k in rows.items() if c[v] > 0]
            neg = [(c, k) for c, k in rows.items() if c[v] < 0]
            eliminated.append((v, pos + neg))
            new_rows = {c: k for c, k in rows.items() if c[v] == 0}
            for cp, kp in pos:
                _check_deadline(deadline)
                for cn, kn in neg:
                    a = cp[v]
                    b = -cn[v]
                    comb = tuple(b * x + a * y for x, y in zip(cp, cn))
                    const = b * kp + a * kn
                    norm = _normalize(comb, const)
                    if norm is None:
                        continue
                    if norm is False:
                        return False, None
                    c, k = norm
                    if c not in new_rows or k < new_rows[c]:
                        new_rows[c] = k
            rows = new_rows
        sample = [None] * nv
        for v, vrows in reversed(eliminated):
            lo = None
            hi = None
            for coeffs, const in vrows:
                a = coeffs[v]
                acc = Fraction(const)
                for w, aw in enumerate(coeffs):
                    if w != v and aw:
                        acc += aw * sample[w]
                bound = -acc / a
                if a > 0:
                    if lo is None or bound > lo:
                        lo = bound
                else:
                    if hi is None or bound < hi:
                        hi = bound
            if lo is None and hi is None:
                val = Fraction(0)
            elif lo is None:
                val = min(hi, Fraction(0))
            elif hi is None:
                val = max(lo, Fraction(0))
            else:
                assert lo <= hi, 'back substitution broke an interval'
                val = (lo + hi) / 2
            sample[v] = val
        return True, {self.variables[v]: sample[v] for v in range(nv)}


def lp_member_chain(poset, point, deadline=None):
    '''Chain-side membership by rational feasibility of the defining system.

    Variables are eta on the elements, the eta degree, and the multiplier N;
    eta must sit in the n=1 cone, N*point - eta in the n=-1 cone, N >= 1.
    '''
    if not in_S(point, 0, poset):
        raise NotInS0('point is outside the chain-side degree cone')
    variables = [('eta', e) for e in poset.elements] + ['eta_deg', 'N']
    system = LinearSystem(variables)
    system.add({'N': 1}, -1)
    for e in poset.elements:
        system.add({('eta', e): 1}, -1)
        system.add({'N': point.values[e], ('eta', e): -1}, 1)
    for chain in poset.maximal_chains():
        row = {'eta_deg': 1}
        for c in chain:
            row[('eta', c)] = row.get(('eta', c), 0) - 1
        system.add(dict(row), -1)
        row = {'N': point.degree - sum(point.values[c] for c in chain), 'eta_deg': -1}
        for c in chain:
            row[('eta', c)] = row.get(('eta', c), 0) + 1
        system.add(row, 1)
    ok, _ = system.feasible(deadline)
    return ok


def lp_member_order(poset, point, deadline=None):
    '''Order-side membership by rational feasibility of the defining system.

    eta lives on the extended poset with eta(+inf) = 0 and a free value at
    -inf; it must drop by at least 1 along every extended cover, and
    N*point - eta must drop by at least -1 along every extended cover.
    '''
    if not in_T(point, 0, poset):
        raise NotInT0('point is outside the order-side degree cone')
    ext = poset.extend('both')
    variables = [('eta', e) for e in poset.elements] + ['eta_deg', 'N']
    system = LinearSystem(variables)
    system.add({'N': 1}, -1)

    def var(x):
        if x is BOTTOM:
            return 'eta_deg'
        return ('eta', x)

    def base(x):
        if x is BOTTOM:
            return point.degree
        if x is TOP:
            return 0
        return point.values[x]

    for x, y in ext.covers:
        row = {}
        if y is not TOP:
            row[var(y)] = -1
        row[var(x)] = row.get(var(x), 0) + 1
        system.add(dict(row), -1)
        drop = {'N': base(x) - base(y)}
        for v, a in row.items():
            drop[v] = drop.get(v, 0) - a
        system.add(drop, 1)
    ok, _ = system.feasible(deadline)
    return ok


def hilbert_equal(poset, d_max, deadline=None):
    '''Compare lattice point counts of the two cones for all degrees <= d_max.'''
    for d in range(d_max + 1):
        _check_deadline(deadline)
        if count_points(poset, 'order', d) != count_points(poset, 'chain', d):
            return False
    return True


_STATE_LIMIT = 10 ** 8


def _search_chain(poset, point, n_max, lo, hi, deadline):
    chains = poset.maximal_chains()
    d = point.degree
    plans = []
    total = 0
    for n_mult in range(1, n_max + 1):
        ranges = []
        ok = True
        for e in poset.elements:
            l = max(lo, 1)
            h = min(hi, n_mult * point.values[e] + 1)
            if l > h:
                ok = False
                break
            ranges.append((e, l, h))
        if not ok:
            continue
        size = 1
        for _, l, h in ranges:
            size *= h - l + 1
        total += size
        plans.append((n_mult, ranges))
    if total > _STATE_LIMIT:
        raise BoxTooLarge('pruned search space has about %d states' % (total,))
    for n_mult, ranges in plans:
        vals = {}

        def walk(k):
            if k and k % 3 == 0:
                _check_deadline(deadline)
            if k == len(ranges):
                eta_sums = [sum(vals[c] for c in chain) for chain in chains]
                eta_deg = max(eta_sums) + 1 if eta_sums else 1
                need = max((n_mult * sum(point.values[c] for c in chain) - s
                            for chain, s in zip(chains, eta_sums)), default=0)
                if n_mult * d - eta_deg >= need - 1:
                    eta = LatticePoint(dict(vals), eta_deg)
                    zeta = LatticePoint(
                        {e: n_mult * point.values[e] - vals[e] for e in poset.elements},
                        n_mult * d - eta_deg)
                    return Certificate(n_mult, eta, zeta, 'chain')
                return None
            e, l, h = ranges[k]
            for v in range(l, h + 1):
                vals[e] = v
                found = walk(k + 1)
                if found is not None:
                    return found
            del vals[e]
            return None

        found = walk(0)
        if found is not None:
            return found
    return None


def _search_order(poset, point, n_max, lo, hi, deadline):
    order = list(reversed(poset.linear_extension()))
    mins = poset.minimal_elements()
    min_dist_up = {}
    for e in order:
        ups = poset.up_covers(e)
        min_dist_up[e] = 0 if not ups else 1 + min(min_dist_up[y] for y in ups)
    total = 0
    for n_mult in range(1, n_max + 1):
        size = 1
        for e in poset.elements:
            l = max(lo, 1 + poset.coheight(e))
            h = min(hi, n_mult * point.values[e] + 1 + min_dist_up[e])
            size *= max(0, h - l + 1)
        total += size
    if total > _STATE_LIMIT:
        raise BoxTooLarge('pruned search space has about %d states' % (total,))
    d = point.degree
    for n_mult in range(1, n_max + 1):
        vals = {}

        def walk(k):
            if k and k % 3 == 0:
                _check_deadline(deadline)
            if k == len(order):
                if mins:
                    lo_deg = max(vals[m] + 1 for m in mins)
                    hi_deg = min(n_mult * (d - point.values[m]) + vals[m] + 1
                                 for m in mins)
                else:
                    lo_deg, hi_deg = 0, 0
                if lo_deg > hi_deg:
                    return None
                eta = LatticePoint(dict(vals), lo_deg)
                zeta = LatticePoint(
                    {e: n_mult * point.values[e] - vals[e] for e in poset.elements},
                    n_mult * d - lo_deg)
                return Certificate(n_mult, eta, zeta, 'order')
            e = order[k]
            ups = poset.up_covers(e)
            if ups:
                l = max(lo, max(vals[y] + 1 for y in ups))
                h = min(hi, min(vals[y] + n_mult * (point.values[e] - point.values[y]) + 1
                                for y in ups))
            else:
                l = max(lo, 1)
                h = min(hi, n_mult * point.values[e] + 1)
            for v in range(l, h + 1):
                vals[e] = v
                found = walk(k + 1)
                if found is not None:
                    return found
            if e in vals:
                del vals[e]
            return None

        found = walk(0)
        if found is not None:
            return found
    return None


def bounded_search_certificate(poset, point, ring, n_max=6, box=8, deadline=None):
    '''Find a split certificate by exhaustive integer search, or None.

    Tries multipliers N = 1..n_max; eta values are searched inside the box
    (an int b means [-b, b], or an explicit (lo, hi) pair) intersected with
    the interval forced by the two cones.  The first certificate in scan
    order is returned, so reruns are reproducible.  Raises BoxTooLarge when
    the pruned state count exceeds 10^8.
    '''
    if isinstance(box, int):
        lo, hi = -box, box
    else:
        lo, hi = box
    if ring == 'chain':
        if not in_S(point, 0, poset):
            raise NotInS0('point is outside the chain-side degree cone')
        return _search_chain(poset, point, n_max, lo, hi, deadline)
    if ring == 'order':
        if not in_T(point, 0, poset):
            raise NotInT0('point is outside the order-side degree cone')
        return _search_order(poset, point, n_max, lo, hi, deadline)
    raise InvalidFormat('ring must be "order" or "chain"')


def verify(poset, claim, **kwargs):
    '''One-call facade over the oracle checks.

    claim "member": kwargs ring, point -> bool.
    claim "hilbert": kwargs d_max -> bool.
    claim "search": kwargs ring, point, plus optional n_max/box -> Certificate or None.
    All accept an optional deadline (time.monotonic timestamp).
    '''
    deadline = kwargs.get('deadline')
    if claim == 'member':
        ring = kwargs['ring']
        if ring == 'chain':
            return lp_member_chain(poset, kwargs['point'], deadline)
        if ring == 'order':
            return lp_member_order(poset, kwargs['point'], deadline)
        raise InvalidFormat('ring must be "order" or "chain"')
    if claim == 'hilbert':
        return hilbert_equal(poset, kwargs['d_max'], deadline)
    if claim == 'search':
        return bounded_search_certificate(
            poset, kwargs['point'], kwargs['ring'],
            kwargs.get('n_max', 6), kwargs.get('box', 8), deadline)
    raise InvalidFormat('unknown oracle claim %r' % (claim,))
