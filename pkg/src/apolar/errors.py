"""Exception hierarchy shared by every module of the package."""


class ApolarError(Exception):
    """Base class for all errors raised by :mod:`apolar`."""


class NotInSpan(ApolarError):
    """Target vector lies outside the column space of a basis."""


class DependentBasis(ApolarError):
    """Columns handed in as a basis are linearly dependent."""


class DimensionMismatch(ApolarError):
    """Matrix or vector shapes are incompatible."""


class InvalidPartition(ApolarError, ValueError):
    pass


class ShapeContentMismatch(ApolarError):
    """Shape and content partitions have different sizes."""


class NonPartitionContent(ApolarError):
    """Tableau content is not weakly decreasing."""


class SizeMismatch(ApolarError):
    """Character and class partitions belong to different symmetric groups."""


class AmbientMismatch(ApolarError):
    """Polynomials live in rings with different numbers of variables."""


class NotHomogeneous(ApolarError):
    pass


class NotSymmetric(ApolarError):
    """Form is not invariant under permuting the variables."""


class DegreeOutOfRange(ApolarError):
    pass


class DegenerateDegree(ApolarError):
    pass


class NonIntegralMultiplicity(ApolarError):
    """A computed irreducible multiplicity is not a nonnegative integer.

    This never happens for a genuine representation and indicates a bug.
    """


class TheoremHypothesisViolated(ApolarError):
    """Coefficients of the linear form sum to zero."""

    hypothesis = "a1 + ... + an != 0"

    def __init__(self, message: str | None = None):
        super().__init__(
            message
            or f"the character formula requires the hypothesis '{self.hypothesis}'"
        )


class ParseError(ApolarError, ValueError):
    """Malformed textual input (coefficients, partitions, polynomials)."""


class LimitExceeded(ApolarError):
    """Input is beyond the desk-scale guards."""
