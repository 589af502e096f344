"""Exception hierarchy for all domain errors raised by this package."""

from __future__ import annotations


class AsmError(Exception):
    """Base class for every error raised by asmspin."""


class ValidationError(AsmError):
    """A defining condition of a domain type is violated."""


class BadShape(ValidationError):
    pass


class BadLineSum(ValidationError):
    """A complete row or column sum differs from the required line sum.

    axis is "row" or "col", index is 1-based, actual is the offending sum.
    """

    def __init__(self, axis: str, index: int, actual: int, expected: int):
        self.axis = axis
        self.index = index
        self.actual = actual
        self.expected = expected
        super().__init__(
            f"{axis} {index} sums to {actual}, expected {expected}"
        )


class NegativePartialSum(ValidationError):
    """A partial line sum extending from one end is negative.

    axis/index name the line, end is "left", "right", "top" or "bottom",
    position is the 1-based length of the offending partial sum.
    """

    def __init__(self, axis: str, index: int, end: str, position: int, value: int):
        self.axis = axis
        self.index = index
        self.end = end
        self.position = position
        self.value = value
        super().__init__(
            f"partial sum of {axis} {index} from the {end} end is {value} < 0 "
            f"at length {position}"
        )


class BadBoundary(ValidationError):
    pass


class BadConservation(ValidationError):
    pass


class BadEntryRange(ValidationError):
    pass


class BadMonotone(ValidationError):
    pass


class BadInterlacing(ValidationError):
    pass


class BadMultiplicity(ValidationError):
    pass


class InconsistentPair(ValidationError):
    """Row and column difference formulas of an edge pair disagree."""


class BadQuadruple(ValidationError):
    """A complementary vertex quadruple does not sum to 2r."""


class BadComposition(ValidationError):
    """A tuple fails the defining conditions of the size-3 composition sets."""


class BadSize(ValidationError):
    """An operation defined only for one matrix size received another."""


class InvalidFamily(ValidationError):
    """A path family's edge multiplicities violate the edge pair conditions."""


class CapExceeded(AsmError):
    """An enumeration stream produced more elements than the caller's cap."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"enumeration exceeded cap of {cap}")


class ResourceLimit(AsmError):
    """The dynamic programming state space exceeds the configured bound."""

    def __init__(self, states: int, bound: int):
        self.states = states
        self.bound = bound
        super().__init__(f"state space {states} exceeds configured bound {bound}")


class MissingWeight(AsmError):
    """A weight map does not cover some required vertex type."""

    def __init__(self, key):
        self.key = key
        super().__init__(f"no weight supplied for vertex type {key!r}")


class NonIntegerCoefficient(AsmError):
    """A coefficient that must be a nonnegative integer is not.

    Raised when binomial-basis conversion fails integrality; this signals an
    implementation bug, not a data condition.
    """


class NoCycle(AsmError):
    """An edge point has no non-integer entries, so no cycle exists."""


class NotAMember(AsmError):
    """The point to decompose is not a member of the polytope."""


class UnsupportedView(AsmError):
    """The requested render view does not apply to the given object kind."""
