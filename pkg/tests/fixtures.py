'''Shared fixture posets and points used across the test modules.

The two certificate examples (the 9-element crossing poset and the
12-element hexagon chain poset) carry hand-checked eta/zeta splits and
correction functions; the three locus posets have printed decompositions;
the last poset is the one whose naive chain tuple spans a face of the
wrong dimension.
'''

from poset_gorenstein import Certificate, LatticePoint, Poset

# crossing poset: two crossing diamonds with a long detour, 9 elements
P_NX = Poset(
    ['a1', 'a2', 'a3', 'b1', 'b2', 'd1', 'd2', 'e1', 'e2'],
    [('a1', 'e1'), ('e1', 'b1'), ('d1', 'a2'), ('d2', 'a2'), ('a2', 'b1'),
     ('a2', 'e2'), ('e2', 'b2'), ('d1', 'a3'), ('d2', 'a3')])

XI_NX = LatticePoint({'a3': 2, 'a1': 1, 'a2': 1, 'b1': 1, 'b2': 1,
                      'd1': 1, 'd2': 1, 'e1': 0, 'e2': 0}, 3)

ETA_NX = LatticePoint({'a3': 4, 'b1': 3, 'b2': 2, 'd1': 2, 'd2': 2,
                       'a1': 1, 'a2': 1, 'e1': 1, 'e2': 1}, 7)

ZETA_NX = LatticePoint({'a1': 1, 'a2': 1, 'a3': 0, 'b2': 0, 'd1': 0,
                        'd2': 0, 'b1': -1, 'e1': -1, 'e2': -1}, -1)

CERT_NX = Certificate(2, ETA_NX, ZETA_NX, 'chain')

MU_NX = {'b1': 1, 'e1': 1, 'e2': 1, 'a2': -1,
         'a1': 0, 'a3': 0, 'b2': 0, 'd1': 0, 'd2': 0}
M_NX = 0

# hexagon poset: six maximal chains arranged in a cycle, 12 elements
P_HEX = Poset(
    ['a1', 'a2', 'a3', 'b1', 'b2', 'b3', 'd1', 'd2', 'd3', 'e1', 'e2', 'e3'],
    [('a1', 'd1'), ('d1', 'e1'), ('e1', 'b1'), ('a1', 'b2'), ('a2', 'd2'),
     ('d2', 'b1'), ('a2', 'b3'), ('a3', 'e2'), ('e2', 'b2'), ('a3', 'd3'),
     ('d3', 'e3'), ('e3', 'b3')])

XI_HEX = LatticePoint({'a1': 1, 'a2': 1, 'a3': 1, 'b1': 1, 'b2': 1, 'b3': 1,
                       'd1': 0, 'd2': 0, 'd3': 0, 'e1': 0, 'e2': 0, 'e3': 0}, 2)

ETA_HEX = LatticePoint({'a1': 2, 'a2': 3, 'a3': 1, 'b1': 4, 'b2': 6, 'b3': 5,
                        'd1': 1, 'd2': 1, 'd3': 1, 'e1': 1, 'e2': 1, 'e3': 1}, 9)

ZETA_HEX = LatticePoint({'a1': 3, 'a2': 2, 'a3': 4, 'b1': 1, 'b2': -1, 'b3': 0,
                         'd1': -1, 'd2': -1, 'd3': -1, 'e1': -1, 'e2': -1,
                         'e3': -1}, 1)

CERT_HEX = Certificate(5, ETA_HEX, ZETA_HEX, 'chain')

MU_HEX = {'a1': -2, 'a2': -1, 'a3': -3, 'b1': 0, 'b2': 2, 'b3': 1,
          'd1': 1, 'd2': 1, 'd3': 1, 'e1': 1, 'e2': 1, 'e3': 1}
M_HEX = 0

# two diamonds glued at the corners, with one subdivided edge
P_BOWTIE = Poset(
    ['a1', 'a2', 'x', 'b1', 'b2'],
    [('a1', 'x'), ('x', 'b1'), ('a1', 'b2'), ('a2', 'b1'), ('a2', 'b2')])

# a fork with two feet and two prongs of different lengths
P_CLAW = Poset(
    ['a', 'c', 'd', 'w', 'y', 'z'],
    [('c', 'a'), ('d', 'a'), ('a', 'y'), ('y', 'z'), ('a', 'w')])

# two side rails of different lengths with crossing rungs
P_LADDER = Poset(
    ['c1', 'a1', 'm', 'b1', 'd1', 'c2', 'a2', 'b2', 'd2'],
    [('c1', 'a1'), ('a1', 'm'), ('m', 'b1'), ('b1', 'd1'), ('c2', 'a2'),
     ('a2', 'b2'), ('b2', 'd2'), ('a1', 'b2'), ('a2', 'b1')])

# poset where the naive chain tuple spans a face of too-small dimension
P_FACEGAP = Poset(
    ['a1', 'a2', 'b1', 'b2', 'd1', 'd2', 'e'],
    [('d1', 'a1'), ('a1', 'e'), ('e', 'b1'), ('d2', 'a2'), ('a2', 'b2'),
     ('a1', 'b2'), ('a2', 'b1'), ('d2', 'a1'), ('d1', 'a2')])

# small helpers reused in several suites


def chain_poset(n):
    names = ['c%d' % i for i in range(n)]
    return Poset(names, [(names[i], names[i + 1]) for i in range(n - 1)])


def antichain_poset(n):
    return Poset(['u%d' % i for i in range(n)], [])
