"""Exceptions raised by the monoids library"""


class MonoidError(Exception):
    """Base class for every error raised by the monoids app"""


class PartitionSpecError(MonoidError, ValueError):
    """A partition spec such as '3+2+1' could not be parsed"""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class TransformationError(MonoidError, ValueError):
    """A transformation is malformed or incompatible with its operands"""


class MembershipError(MonoidError):
    """An element lies outside the monoid (or submonoid) an operation requires"""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class SpecialCaseError(MonoidError):
    """The closed-form rank path was used for a partition with |S(X,P)| <= 2"""

    def __init__(self, message, table=None):
        super().__init__(message)
        self.table = dict(table or {})


class WreathSearchError(MonoidError):
    """No two-element generating pair of a wreath product was found"""


class ClosureCapExceeded(MonoidError):
    """Closure enumeration grew past its cap"""

    def __init__(self, order, cap):
        super().__init__(f'closure exceeded cap of {cap} elements ({order} found so far)')
        self.order = order
        self.cap = cap


class SearchInconclusive(MonoidError):
    """An exhaustive search ran out of budget before settling the answer"""

    def __init__(self, message, lower_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound
