'''Gorenstein properties of Ehrhart rings of order and chain polytopes.

The public surface: build a Poset, wrap monomial exponent data in a
LatticePoint, then ask membership/certificate questions per ring, classify
the poset, or inspect the non-Gorenstein locus.  The oracle module answers
the same questions by brute force and is kept import-separate on purpose.
'''

from .errors import (BoxTooLarge, CycleDetected, DeadlineExceeded,
                     DomainMismatch, DuplicateElement, EmptyPoset,
                     InvalidFormat, IsAntichain, NonReducedCover, NotAChain,
                     NotComparable, NotInG, NotInS0, NotInT0, NotMember,
                     OutOfRange, PosetError, PreconditionViolated,
                     UnknownElement, UnknownElementInCover)
from .locus import (PrimeLabel, StarSequence, chain_locus_dimension,
                    chain_radical_decomposition, enumerate_star_sequences,
                    face_dimension, generate_poset, is_star_sequence,
                    order_locus_dimension, order_radical_decomposition,
                    realize_chain_tuple, ring_dimension, sequence_mset)
from .membership import (AdjustFunction, Certificate, ChainWitness,
                         Classification, MembershipResult, OrderWitness,
                         VerifyResult, adjust_mu, certificate,
                         chain_certificate, chain_member,
                         check_adjust_function, classify, member,
                         order_certificate, order_member, verify_certificate)
from .points import (LatticePoint, count_points, in_S, in_T, iter_points,
                     level_chains, phi, point_from_dict, point_to_dict, psi,
                     sum_over)
from .posets import (BLOB, BOTTOM, TOP, Poset, build_poset, contract,
                     element_to_json, is_sentinel, poset_from_dict,
                     poset_to_dict)

__version__ = '0.1.0'

__all__ = [name for name in dir() if not name.startswith('_')]
