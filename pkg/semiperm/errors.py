"""
This module contains custom exceptions for the semiperm library.
"""


class SemigroupError(Exception):
    """Base exception for all semiperm related errors."""

    pass


class ShapeError(SemigroupError):
    """Raised when a Cayley table is not a square table of valid element ids."""

    pass


class FormatError(ShapeError):
    """Raised when table, structured or action text cannot be parsed."""

    pass


class NonAssociativeError(SemigroupError):
    """Raised when a table fails the associativity check."""

    def __init__(self, witness: tuple[int, int, int], message: str | None = None):
        self.witness = witness
        a, b, c = witness
        super().__init__(message or f"Table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class ElementError(SemigroupError, ValueError):
    """Raised when an element id or an exponent is out of range."""

    pass


class NotASubsemigroupError(SemigroupError):
    """Raised when a subset is not closed under the semigroup product."""

    pass


class SubjectMismatchError(SemigroupError):
    """Raised when two congruences live on sets of different sizes."""

    pass


class NotAnIdealError(SemigroupError):
    """Raised when a subset is expected to be a two-sided ideal but is not."""

    pass


class NotAGroupError(SemigroupError):
    """Raised when a semigroup is not a group."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Not a group: {reason}")


class NotASubgroupError(SemigroupError):
    """Raised when a set of group elements is not a subgroup."""

    pass


class BoundExceededError(SemigroupError):
    """Raised when a computation would exceed one of the configured size caps."""

    pass


class InvalidActionError(SemigroupError):
    """Raised when an action table violates the right G-set axioms."""

    pass


class NotTransitiveError(SemigroupError):
    """Raised when a transitive G-set is required."""

    pass


class StabilizerNotContainedError(SemigroupError):
    """Raised when a subgroup does not contain the stabilizer of the base point."""

    pass


class NotCompletelySimpleError(SemigroupError):
    """Raised when a completely simple semigroup is required."""

    pass


class ShapeMismatchError(SemigroupError):
    """Raised when a semigroup is not a semilattice of a group and a nilpotent part of the required form."""

    pass


class InternalInconsistencyError(SemigroupError):
    """Raised when a computed structure contradicts a proven classification result."""

    pass


class CheckRegistrationError(SemigroupError):
    """Raised when there's an error registering a census check."""

    pass


class CheckExecutionError(SemigroupError):
    """Raised when there's an error executing a census check."""

    pass
