"""Error hierarchy shared by every symcomb module.

Every domain error is a ``ValueError`` so callers that only guard against
``ValueError`` keep working. The CLI maps the three families below to exit
codes 2 (input format), 3 (precondition) and 4 (resource cap).
"""

from __future__ import annotations


class SymcombError(ValueError):
    """Base class for all symcomb errors."""


class InputFormatError(SymcombError):
    """A file or text argument could not be parsed."""


class PreconditionError(SymcombError):
    """The input is well formed but outside the domain of the operation."""


class EmptyInput(PreconditionError):
    pass


class VertexOutOfRange(PreconditionError):
    pass


class DualHasEmptyFacet(PreconditionError):
    pass


class ComparablePrimes(PreconditionError):
    pass


class AmbientMismatch(PreconditionError):
    pass


class NonpositiveK(PreconditionError):
    pass


class NotSquareFree(PreconditionError):
    pass


class UnitIdealError(PreconditionError):
    pass


class NotACover(PreconditionError):
    pass


class NotMatroid(PreconditionError):
    pass


class NotGoodWeighted(PreconditionError):
    pass


class SumMismatch(PreconditionError):
    pass


class InsufficientData(PreconditionError):
    pass


class HypothesisViolation(PreconditionError):
    pass


class NotAdmissible(PreconditionError):
    pass


class OracleTooLarge(PreconditionError):
    pass


class OutOfRange(PreconditionError):
    pass


class MatrixTooSmall(PreconditionError):
    pass


class NotApplicable(PreconditionError):
    pass


class ResourceCapExceeded(SymcombError):
    """A configured size guard was hit before the computation started or finished."""


class DegreeCapExceeded(ResourceCapExceeded):
    pass


class ClassificationMismatch(SymcombError):
    """Two independent computations of the same quantity disagreed."""


class VerificationError(SymcombError):
    """A post-hoc certificate check failed."""


__all__ = [
    "SymcombError",
    "InputFormatError",
    "PreconditionError",
    "EmptyInput",
    "VertexOutOfRange",
    "DualHasEmptyFacet",
    "ComparablePrimes",
    "AmbientMismatch",
    "NonpositiveK",
    "NotSquareFree",
    "UnitIdealError",
    "NotACover",
    "NotMatroid",
    "NotGoodWeighted",
    "SumMismatch",
    "InsufficientData",
    "HypothesisViolation",
    "NotAdmissible",
    "OracleTooLarge",
    "OutOfRange",
    "MatrixTooSmall",
    "NotApplicable",
    "ResourceCapExceeded",
    "DegreeCapExceeded",
    "ClassificationMismatch",
    "VerificationError",
]
