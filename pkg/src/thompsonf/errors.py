"""Exception hierarchy shared by every module of the package."""


class ThompsonError(Exception):
    """Base class for all errors raised by :mod:`thompsonf`."""


# dyadic arithmetic

class NotDyadicQuotient(ThompsonError, ArithmeticError):
    """A quotient has an odd factor in its denominator."""


class DyadicParseError(ThompsonError, ValueError):
    pass


# F-membership (raised by make_element and the element parser)

class MembershipError(ThompsonError, ValueError):
    """The breakpoint list does not describe an element of F."""


class BadEndpoints(MembershipError):
    pass


class NotIncreasing(MembershipError):
    pass


class SlopeNotPowerOfTwo(MembershipError):
    pass


class OutOfDomain(ThompsonError, ValueError):
    pass


class ElementParseError(ThompsonError, ValueError):
    pass


# words

class WordParseError(ThompsonError, ValueError):
    pass


class UnknownGenerator(WordParseError):
    pass


class ArityMismatch(ThompsonError, ValueError):
    pass


class TrivialWord(ThompsonError, ValueError):
    pass


class TrivialRelation(TrivialWord):
    pass


class SizeLimitExceeded(ThompsonError):
    pass


# interpolation / witnesses

class LengthMismatch(ThompsonError, ValueError):
    pass


class PartitionError(ThompsonError, ValueError):
    """Points do not form a strictly increasing partition of [0, 1]."""


class NotReduced(ThompsonError, ValueError):
    pass


class ConstraintConflict(ThompsonError, ValueError):
    pass


class NotMonotone(ThompsonError, ValueError):
    pass
