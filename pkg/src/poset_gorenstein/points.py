'''Integer labelings of a poset and the two cone families they live in.

A LatticePoint assigns an integer to every element of a host poset plus a
degree, which is the implicit value at the adjoined bottom element.  The
value at the adjoined top element is always 0.

Two cone families:
  * order side: T(n) asks value >= n at maximal elements and drops of at
    least n along every cover, including the virtual cover below minimal
    elements (degree >= value + n there);
  * chain side: S(n) asks value >= n everywhere and degree >= chain sum + n
    for every maximal chain.

phi/psi transfer order-side points to chain-side points on the
covering-relation poset of the bottom-and-top extension and back.
'''

from dataclasses import dataclass

from .errors import DomainMismatch, InvalidFormat, NotInG, UnknownElement
from .posets import BOTTOM, TOP, Poset


@dataclass(frozen=True, eq=True)
class LatticePoint:
    '''Integer function on the host poset's elements, plus a degree.'''

    values: dict
    degree: int

    def get(self, x):
        try:
            return self.values[x]
        except KeyError:
            raise UnknownElement('no value for element %r' % (x,)) from None

    def support(self):
        return tuple(x for x, v in self.values.items() if v != 0)

    def scale(self, k):
        return LatticePoint({x: k * v for x, v in self.values.items()}, k * self.degree)

    def add(self, other):
        if set(self.values) != set(other.values):
            raise DomainMismatch('points live on different element sets')
        return LatticePoint({x: v + other.values[x] for x, v in self.values.items()},
                            self.degree + other.degree)

    def negate(self):
        return self.scale(-1)


# chain-side points on a covering-relation poset are ordinary LatticePoints
CRPoint = LatticePoint


def _check_domain(point, poset):
    if set(point.values) != set(poset.elements):
        raise DomainMismatch('point values must cover exactly the poset elements')


def sum_over(point, subset):
    '''Sum of the point's values over a subset (empty sum is 0).'''
    return sum(point.get(x) for x in subset)


def in_T(point, n, poset):
    '''Order-side cone test at level n.'''
    _check_domain(point, poset)
    v = point.values
    for z in poset.maximal_elements():
        if v[z] < n:
            return False
    for x, y in poset.covers:
        if v[x] < v[y] + n:
            return False
    for m in poset.minimal_elements():
        if point.degree < v[m] + n:
            return False
    return True


def max_chain_sum(point, poset):
    '''Maximum of the point's sum over the maximal chains, by longest-path DP.'''
    if not poset.elements:
        return 0
    v = point.values
    best = {}
    for e in reversed(poset.linear_extension()):
        ups = poset.up_covers(e)
        if ups:
            best[e] = v[e] + max(best[u] for u in ups)
        else:
            best[e] = v[e]
    return max(best[m] for m in poset.minimal_elements())


def in_S(point, n, poset, explicit=False):
    '''Chain-side cone test at level n.

    Default path bounds the degree against a longest-path computation over
    the maximal chains; explicit=True enumerates the maximal chains instead
    (kept for cross-checking).
    '''
    _check_domain(point, poset)
    for x in poset.elements:
        if point.values[x] < n:
            return False
    if explicit:
        top = max(sum_over(point, c) for c in poset.maximal_chains())
    else:
        top = max_chain_sum(point, poset)
    return point.degree >= top + n


def level_chains(point, n, poset):
    '''Maximal chains whose value sum equals n, in the fixed chain order.'''
    _check_domain(point, poset)
    return [c for c in poset.maximal_chains() if sum_over(point, c) == n]


def extended_both(poset):
    '''Cached bottom-and-top extension of the poset.'''
    ext = poset._cache.get('extended_both')
    if ext is None:
        ext = poset.extend('both')
        poset._cache['extended_both'] = ext
    return ext


def cr_poset(poset):
    '''Cached covering-relation poset of the bottom-and-top extension.'''
    cr = poset._cache.get('cr_poset')
    if cr is None:
        cr = extended_both(poset).covering_relation_poset()
        poset._cache['cr_poset'] = cr
    return cr


def phi(point, poset):
    '''Order-side point -> chain-side point on the covering-relation poset.

    The value on a cover (x, y) is the drop value(x) - value(y), with the
    bottom sentinel reading the degree and the top sentinel reading 0.
    '''
    _check_domain(point, poset)

    def val(x):
        if x is BOTTOM:
            return point.degree
        if x is TOP:
            return 0
        return point.values[x]

    ext = extended_both(poset)
    return LatticePoint({(x, y): val(x) - val(y) for x, y in ext.covers}, point.degree)


def psi(crpoint, poset):
    '''Chain-side point on the covering-relation poset -> order-side point.

    Requires equal sums along all maximal chains of the covering-relation
    poset (NotInG otherwise); the value at x is the sum of the cover values
    along any saturated chain from x up to the top sentinel.
    '''
    ext = extended_both(poset)
    if set(crpoint.values) != set(ext.covers):
        raise DomainMismatch('point must assign a value to every cover of the extension')
    total = {TOP: 0}
    for x in reversed(ext.linear_extension()):
        if x is TOP:
            continue
        candidates = sorted(set(crpoint.values[(x, y)] + total[y] for y in ext.up_covers(x)))
        if len(candidates) != 1:
            raise NotInG('saturated chains above %r disagree' % (x,))
        total[x] = candidates[0]
    return LatticePoint({e: total[e] for e in poset.elements}, total[BOTTOM])


def _iter_order(poset, d):
    '''Yield value dicts of all order-side points of the given degree.'''
    order = poset.linear_extension()
    n = len(order)
    vals = {}

    def walk(k):
        if k == n:
            yield dict(vals)
            return
        e = order[k]
        downs = poset.down_covers(e)
        ub = min((vals[p] for p in downs), default=d)
        for v in range(0, ub + 1):
            vals[e] = v
            yield from walk(k + 1)
        vals.pop(e, None)

    yield from walk(0)


def _iter_chain(poset, d):
    '''Yield value dicts of all chain-side points of the given degree.'''
    chains = poset.maximal_chains()
    member = {e: [] for e in poset.elements}
    for j, c in enumerate(chains):
        for e in c:
            member[e].append(j)
    rem = [d] * len(chains)
    order = poset.elements
    n = len(order)
    vals = {}

    def walk(k):
        if k == n:
            yield dict(vals)
            return
        e = order[k]
        ub = min((rem[j] for j in member[e]), default=d)
        for v in range(0, ub + 1):
            vals[e] = v
            for j in member[e]:
                rem[j] -= v
            yield from walk(k + 1)
            for j in member[e]:
                rem[j] += v
        vals.pop(e, None)

    yield from walk(0)


def iter_points(poset, ring, degree):
    '''Iterate all cone points of one degree ("order" -> T(0), "chain" -> S(0)).'''
    if ring == 'order':
        gen = _iter_order(poset, degree)
    elif ring == 'chain':
        gen = _iter_chain(poset, degree)
    else:
        raise InvalidFormat('ring must be "order" or "chain"')
    for vals in gen:
        yield LatticePoint(vals, degree)


def count_points(poset, ring, degree):
    '''Number of cone points of one degree; the two rings agree degreewise.'''
    if ring not in ('order', 'chain'):
        raise InvalidFormat('ring must be "order" or "chain"')
    if not poset.elements:
        return 1
    if ring == 'order':
        order = poset.linear_extension()
        downs = [poset.down_covers(e) for e in order]
        n = len(order)
        vals = {}

        def walk(k):
            e = order[k]
            ub = min((vals[p] for p in downs[k]), default=degree)
            if k == n - 1:
                return ub + 1
            total = 0
            for v in range(0, ub + 1):
                vals[e] = v
                total += walk(k + 1)
            vals.pop(e, None)
            return total

        return walk(0)
    chains = poset.maximal_chains()
    member = []
    for e in poset.elements:
        member.append([j for j, c in enumerate(chains) if e in c])
    rem = [degree] * len(chains)
    n = len(poset.elements)

    def walk(k):
        ub = min((rem[j] for j in member[k]), default=degree)
        if k == n - 1:
            return ub + 1
        total = 0
        for v in range(0, ub + 1):
            for j in member[k]:
                rem[j] -= v
            total += walk(k + 1)
            for j in member[k]:
                rem[j] += v
        return total

    return walk(0)


def point_to_dict(point):
    '''JSON-ready dict {"degree": d, "values": {...}}.'''
    return {'degree': point.degree,
            'values': {str(k): v for k, v in point.values.items()}}


def point_from_dict(data, poset):
    '''Validate the file shape and bind the point to the poset's elements.'''
    if not isinstance(data, dict):
        raise InvalidFormat('point file must be a JSON object')
    if set(data) - {'degree', 'values'}:
        raise InvalidFormat('unexpected keys %r' % (sorted(set(data) - {'degree', 'values'}),))
    degree = data.get('degree')
    values = data.get('values')
    if not isinstance(degree, int) or isinstance(degree, bool):
        raise InvalidFormat('"degree" must be an integer')
    if not isinstance(values, dict):
        raise InvalidFormat('"values" must be an object')
    out = {}
    for k, v in values.items():
        if k in ('+inf', 'inf'):
            raise InvalidFormat('the top sentinel is fixed at 0 and cannot carry a value')
        if k == '-inf':
            raise InvalidFormat('the bottom sentinel value is the "degree" field')
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidFormat('value for %r must be an integer' % (k,))
        out[k] = v
    if set(out) != set(poset.elements):
        raise DomainMismatch('point values must cover exactly the poset elements')
    return LatticePoint(out, degree)
