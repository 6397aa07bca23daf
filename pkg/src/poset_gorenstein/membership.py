'''Membership of monomials in the radical of the trace of the canonical module.

Chain side: a degree-cone point is a member unless some chain with a
non-pure star reaches the full degree, or some chain tuple over a defining
cycle reaches u times the degree.  Order side: a point is a member iff
every defining cycle satisfies sum nu(a_i) > sum nu(b_i), reading d at -inf
and 0 at +inf.  Members get explicit certificates (N, eta, zeta) with
eta + zeta = N * point, eta in the n=1 cone and zeta in the n=-1 cone.
'''

from dataclasses import dataclass

from .errors import EmptyPoset, NotInS0, NotInT0, PreconditionViolated
from .locus import enumerate_star_sequences, finite_star_sequences, nonpure_star_chains
from .points import (LatticePoint, cr_poset, in_S, in_T, level_chains, phi,
                     psi, sum_over)
from .posets import BOTTOM, TOP


@dataclass(frozen=True)
class ChainWitness:
    '''Failure evidence on the chain side.

    kind "non_pure_star": chains holds the single offending chain, whose
    point sum equals the degree while its star is not pure.  kind
    "bad_cycle": lower/upper are saturated chains down from the a-entries
    and up from the b-entries whose total point sum equals u * degree.
    '''

    kind: str
    chains: tuple = ()
    lower: tuple = ()
    upper: tuple = ()


@dataclass(frozen=True)
class OrderWitness:
    '''A defining cycle with sum nu(a_i) <= sum nu(b_i).'''

    a: tuple
    b: tuple


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    witness: object = None

    def __bool__(self):
        return self.member


@dataclass(frozen=True)
class Certificate:
    '''Split N * point = eta + zeta with eta and zeta in the two side cones.'''

    N: int
    eta: LatticePoint
    zeta: LatticePoint
    ring: str


@dataclass(frozen=True)
class AdjustFunction:
    '''Correction mu with constant top-level chain sum m.

    mu is 1 off the support of the base point, and every chain whose base
    sum reaches the degree has mu-sum exactly m.
    '''

    mu: dict
    m: int


def _updown_tables(poset, point):
    '''Max point sums over saturated chains ending (wd) / starting (wu) at e.'''
    wd = {}
    for e in poset.linear_extension():
        wd[e] = point.values[e] + max((wd[p] for p in poset.down_covers(e)), default=0)
    wu = {}
    for e in reversed(poset.linear_extension()):
        wu[e] = point.values[e] + max((wu[s] for s in poset.up_covers(e)), default=0)
    return wd, wu


def _best_down_chain(poset, wd, a):
    '''A maximal chain of the closed down-set of a realizing wd[a].'''
    walk = [a]
    cur = a
    while poset.down_covers(cur):
        best = None
        for p in poset.down_covers(cur):
            if best is None or wd[p] > wd[best]:
                best = p
        walk.append(best)
        cur = best
    return tuple(reversed(walk))


def _best_up_chain(poset, wu, b):
    walk = [b]
    cur = b
    while poset.up_covers(cur):
        best = None
        for s in poset.up_covers(cur):
            if best is None or wu[s] > wu[best]:
                best = s
        walk.append(best)
        cur = best
    return tuple(walk)


def chain_member(poset, point):
    '''Radical-of-trace membership on the chain side, with witness if not.'''
    if not in_S(point, 0, poset):
        raise NotInS0('point is outside the chain-side degree cone')
    d = point.degree
    for chain in nonpure_star_chains(poset):
        if sum_over(point, chain) == d:
            return MembershipResult(False, ChainWitness('non_pure_star', chains=(chain,)))
    wd, wu = _updown_tables(poset, point)
    for seq in finite_star_sequences(poset):
        u = seq.u
        total = sum(wd[a] for a in seq.a) + sum(wu[b] for b in seq.b)
        assert total <= u * d, 'cone point exceeds the chain budget'
        if total == u * d:
            lower = tuple(_best_down_chain(poset, wd, a) for a in seq.a)
            upper = tuple(_best_up_chain(poset, wu, b) for b in seq.b)
            return MembershipResult(False, ChainWitness('bad_cycle', lower=lower, upper=upper))
    return MembershipResult(True)


def order_member(poset, point):
    '''Radical-of-trace membership on the order side, with witness if not.'''
    if not in_T(point, 0, poset):
        raise NotInT0('point is outside the order-side degree cone')

    def val(x):
        if x is BOTTOM:
            return point.degree
        if x is TOP:
            return 0
        return point.values[x]

    for seq in enumerate_star_sequences(poset):
        if sum(val(a) for a in seq.a) <= sum(val(b) for b in seq.b):
            return MembershipResult(False, OrderWitness(seq.a, seq.b))
    return MembershipResult(True)


def check_adjust_function(poset, point, adjust):
    '''Validate a correction against the base point; returns (ok, reasons).'''
    reasons = []
    mu = adjust.mu
    if set(mu) != set(poset.elements):
        return False, ['correction domain does not match the poset']
    for e in poset.elements:
        if point.values[e] == 0 and mu[e] != 1:
            reasons.append('correction is %d, not 1, off the support at %r' % (mu[e], e))
    level = level_chains(point, point.degree, poset)
    if level:
        sums = {sum(mu[z] for z in chain) for chain in level}
        if sums != {adjust.m}:
            reasons.append('top-level chain sums %s do not all equal m=%d'
                           % (sorted(sums), adjust.m))
    elif adjust.m != 0:
        reasons.append('no top-level chains, so m must be 0, not %d' % (adjust.m,))
    return (not reasons), reasons


def adjust_mu(poset, point):
    '''Balance a correction so all top-level chains carry the same sum.

    Starts from the indicator of the complement of the support and moves
    mass down/up along support covers shared with extreme chains until the
    max and min top-level sums agree.  Progress is enforced by the strictly
    decreasing pair (max - min, number of chains at max).
    '''
    if not in_S(point, 0, poset):
        raise NotInS0('point is outside the chain-side degree cone')
    supp = [e for e in poset.elements if point.values[e] != 0]
    supp_set = set(supp)
    mu = {e: (0 if e in supp_set else 1) for e in poset.elements}
    level = level_chains(point, point.degree, poset)
    if not level:
        return AdjustFunction(dict(mu), 0)
    level_sets = [frozenset(c) for c in level]
    up_in_supp = {a: [] for a in supp}
    for a in supp:
        for b in supp:
            if poset.less(a, b) and not any(
                    poset.less(a, z) and poset.less(z, b) for z in supp):
                up_in_supp[a].append(b)

    def prefix(chain, c):
        return sum(mu[z] for z in chain if poset.less(z, c))

    prev_measure = None
    while True:
        sums = [sum(mu[z] for z in chain) for chain in level]
        top = max(sums)
        bot = min(sums)
        if top == bot:
            return AdjustFunction(dict(mu), top)
        measure = (top - bot, sums.count(top))
        if prev_measure is not None and not measure < prev_measure:
            raise PreconditionViolated('correction balancing stopped making progress')
        prev_measure = measure
        top_idx = [k for k, s in enumerate(sums) if s == top]
        bot_idx = [k for k, s in enumerate(sums) if s == bot]
        near_idx = [k for k, s in enumerate(sums) if s in (top, top - 1)]
        c0 = level[top_idx[0]]
        cs = [c for c in c0 if c in supp_set]
        if not cs:
            raise PreconditionViolated('top-level chain misses the support')
        if not any(cs[0] in level_sets[k] for k in bot_idx):
            mu[cs[0]] -= 1
            continue
        anchor = None
        for pos in range(len(cs) - 1, -1, -1):
            c = cs[pos]
            p0 = prefix(c0, c)
            if any(c in level_sets[k] and prefix(level[k], c) == p0 for k in bot_idx):
                anchor = c
                break
        if anchor is None:
            raise PreconditionViolated('no anchor on a bottom-level chain')
        sink = [anchor]
        source = []
        used_a = {anchor}
        used_b = set()
        frontier = [anchor]
        while True:
            new_b = []
            for a in frontier:
                for b in up_in_supp[a]:
                    if b in used_b:
                        continue
                    if any(a in level_sets[k] and b in level_sets[k] for k in bot_idx):
                        new_b.append(b)
                        used_b.add(b)
            if not new_b:
                break
            source.extend(new_b)
            new_a = []
            for b in new_b:
                for a in supp:
                    if a in used_a or b not in up_in_supp[a]:
                        continue
                    if any(a in level_sets[k] and b in level_sets[k] for k in near_idx):
                        new_a.append(a)
                        used_a.add(a)
            if not new_a:
                break
            sink.extend(new_a)
            frontier = new_a
        for a in sink:
            mu[a] -= 1
        for b in source:
            mu[b] += 1


def chain_certificate(poset, point):
    '''Explicit split for a chain-side member; raises on non-members.

    With correction mu and level m, H = 1 + sum |mu| + |m| makes
    eta = H * point + mu and zeta = H * point - mu land in the two side
    cones, with degrees H*d + 1 + m and H*d - 1 - m; N = 2H.
    '''
    result = chain_member(poset, point)
    if not result.member:
        raise PreconditionViolated('point is not a member on the chain side')
    adjust = adjust_mu(poset, point)
    mu, m = adjust.mu, adjust.m
    h = 1 + sum(abs(v) for v in mu.values()) + abs(m)
    d = point.degree
    eta = LatticePoint({e: h * point.values[e] + mu[e] for e in poset.elements},
                       h * d + 1 + m)
    zeta = LatticePoint({e: h * point.values[e] - mu[e] for e in poset.elements},
                        h * d - 1 - m)
    n_mult = 1 if d == 0 and all(v == 0 for v in point.values.values()) else 2 * h
    return Certificate(n_mult, eta, zeta, 'chain')


def order_certificate(poset, point):
    '''Explicit split for an order-side member, via the covering relation poset.

    The point is pushed to cover differences, balanced there, and the two
    halves are pulled back to element values by summing along saturated
    chains from the top.
    '''
    result = order_member(poset, point)
    if not result.member:
        raise PreconditionViolated('point is not a member on the order side')
    crp = cr_poset(poset)
    xi = phi(point, poset)
    adjust = adjust_mu(crp, xi)
    mu, m = adjust.mu, adjust.m
    h = 1 + sum(abs(v) for v in mu.values()) + abs(m)
    eta_cr = LatticePoint({e: h * xi.values[e] + mu[e] for e in crp.elements},
                          h * xi.degree + 1 + m)
    zeta_cr = LatticePoint({e: h * xi.values[e] - mu[e] for e in crp.elements},
                           h * xi.degree - 1 - m)
    eta = psi(eta_cr, poset)
    zeta = psi(zeta_cr, poset)
    d = point.degree
    n_mult = 1 if d == 0 and all(v == 0 for v in point.values.values()) else 2 * h
    return Certificate(n_mult, eta, zeta, 'order')


def member(poset, point, ring):
    if ring == 'order':
        return order_member(poset, point)
    if ring == 'chain':
        return chain_member(poset, point)
    raise ValueError('ring must be "order" or "chain"')


def certificate(poset, point, ring):
    if ring == 'order':
        return order_certificate(poset, point)
    if ring == 'chain':
        return chain_certificate(poset, point)
    raise ValueError('ring must be "order" or "chain"')


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reasons: tuple = ()

    def __bool__(self):
        return self.ok


def verify_certificate(poset, point, cert):
    '''Check a split certificate: cones, degrees, and the N-fold sum.'''
    reasons = []
    if cert.ring not in ('order', 'chain'):
        return VerifyResult(False, ('unknown ring %r' % (cert.ring,),))
    if cert.N < 1:
        reasons.append('multiplier N=%d is not positive' % (cert.N,))
    for name, part in (('eta', cert.eta), ('zeta', cert.zeta)):
        if set(part.values) != set(poset.elements):
            return VerifyResult(False, ('%s domain does not match the poset' % name,))
    scaled = point.scale(cert.N)
    total = cert.eta.add(cert.zeta)
    if total != scaled:
        reasons.append('eta + zeta differs from N * point')
    if cert.ring == 'chain':
        if not in_S(cert.eta, 1, poset):
            reasons.append('eta is outside the chain-side n=1 cone')
        if not in_S(cert.zeta, -1, poset):
            reasons.append('zeta is outside the chain-side n=-1 cone')
    else:
        if not in_T(cert.eta, 1, poset):
            reasons.append('eta is outside the order-side n=1 cone')
        if not in_T(cert.zeta, -1, poset):
            reasons.append('zeta is outside the order-side n=-1 cone')
    return VerifyResult(not reasons, tuple(reasons))


@dataclass(frozen=True)
class Classification:
    '''Gorenstein properties shared by both Ehrhart rings of the poset.'''

    gorenstein: bool
    gorenstein_on_punctured_spectrum: bool
    nearly_gorenstein: bool
    component_ranks: tuple


def classify(poset):
    '''Decide the three Gorenstein properties for both rings at once.

    The rings are Gorenstein iff the poset is pure, Gorenstein on the
    punctured spectrum iff every connected component is pure (no defining
    cycle survives except possibly at the closed point), and nearly
    Gorenstein iff additionally the component ranks pairwise differ by at
    most one.
    '''
    if not poset.elements:
        raise EmptyPoset('classification needs a nonempty poset')
    comps = poset.connected_components()
    ranks = tuple(comp.rank() for comp in comps)
    pure_comps = all(comp.is_pure() for comp in comps)
    gor = poset.is_pure()
    punct = pure_comps
    nearly = pure_comps and (max(ranks) - min(ranks) <= 1)
    assert not gor or punct, 'pure posets have pure components'
    return Classification(gor, punct, nearly, ranks)
