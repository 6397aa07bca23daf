'''Exception and warning types shared across the package.'''


class PosetError(Exception):
    '''Base class for all errors raised by this library.'''


class InvalidFormat(PosetError):
    '''A JSON file or dict does not have the expected shape.'''


class DuplicateElement(PosetError):
    '''An element identifier occurs twice in the element list.'''


class UnknownElementInCover(PosetError):
    '''A cover relation mentions an identifier not in the element list.'''


class CycleDetected(PosetError):
    '''The cover relations contain a directed cycle.'''


class NonReducedCover(UserWarning):
    '''Warning: supplied covers contained transitively implied pairs (auto-removed).'''


class NotComparable(PosetError):
    '''Interval endpoints are not comparable.'''


class NotAChain(PosetError):
    '''A subset passed where a chain is required is not totally ordered.'''


class IsAntichain(PosetError):
    '''The poset has no cover relations at all.'''


class EmptyPoset(PosetError):
    '''Operation needs at least one element.'''


class UnknownElement(PosetError):
    '''An element identifier is outside the function's domain.'''


class DomainMismatch(PosetError):
    '''A point's value map does not cover exactly the host poset's elements.'''


class NotInG(PosetError):
    '''A point on the covering-relation poset has unequal sums over maximal chains.'''


class NotInS0(PosetError):
    '''The point is not in the degree cone of the chain polytope side.'''


class NotInT0(PosetError):
    '''The point is not in the degree cone of the order polytope side.'''


class NotMember(PosetError):
    '''Certificate requested for a monomial outside the radical of the trace.'''


class PreconditionViolated(PosetError):
    '''An internal invariant or documented precondition failed; fail fast.'''


class OutOfRange(PosetError):
    '''Requested parameters are outside the constructible range.'''


class BoxTooLarge(PosetError):
    '''Bounded search space exceeds the hard state cap.'''


class DeadlineExceeded(PosetError):
    '''Cooperative deadline passed before the computation finished.'''
