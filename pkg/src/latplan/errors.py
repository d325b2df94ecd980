"""Exception types shared across the package."""


class LatplanError(Exception):
    """Base class for all package-specific errors."""


class GroupConstructionError(LatplanError):
    """A multiplication table or generator set does not define a group."""


class NotLatinSquare(GroupConstructionError):
    """Some row or column of the table is not a permutation of 0..n-1."""


class NoIdentity(GroupConstructionError):
    """No element acts as a two-sided identity."""


class NoInverse(GroupConstructionError):
    """Some element has no two-sided inverse."""


class NotAssociative(GroupConstructionError):
    """The table violates associativity; the message names a triple."""


class InvalidPermutation(GroupConstructionError):
    """A generator is not a bijection on 0..degree-1."""


class InvalidParameters(LatplanError):
    """Family parameters violate the defining arithmetic conditions."""


class OrderCapExceeded(LatplanError):
    """A construction or enumeration would exceed the configured order cap."""

    def __init__(self, message: str, cap: int, requested: int):
        super().__init__(message)
        self.cap = cap
        self.requested = requested


class NotASubgroup(LatplanError):
    """A member set is not closed under the group operation."""


class NotPlanarGroup(LatplanError):
    """A check that only applies to planar groups was given a non-planar one."""
