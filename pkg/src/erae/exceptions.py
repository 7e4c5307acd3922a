"""Exception taxonomy shared across the package."""


class EraeError(Exception):
    """Base class for all errors raised by this package."""


class NotSquare(EraeError, ValueError):
    """Matrix expected to be square is not."""


class NotHermitian(EraeError, ValueError):
    """Matrix fails the Hermiticity check."""


class NotPSD(EraeError, ValueError):
    """Matrix has an eigenvalue below the rejection threshold."""


class NotNormalized(EraeError, ValueError):
    """State vector is not unit norm."""


class DimensionMismatch(EraeError, ValueError):
    """Declared subsystem dimensions are inconsistent with the data."""


class InvalidAlpha(EraeError, ValueError):
    """Renyi order outside its admissible range."""


class DomainError(EraeError, ValueError):
    """Scalar argument outside the domain of the requested function."""


class AlphaBelowCritical(EraeError):
    """No closed form is available for two-qubit states at this order.

    Raised instead of silently falling back so that closed-form values and
    numerical roof bounds are never conflated.
    """


class InvalidSpec(EraeError, ValueError):
    """Malformed state-family specification."""


class NumericalFailure(EraeError, ArithmeticError):
    """An internal numerical guarantee was violated beyond tolerance."""


class NotIsometry(EraeError, ValueError):
    """Matrix columns are not orthonormal within tolerance."""


class RankMismatch(EraeError, ValueError):
    """Isometry/ensemble size incompatible with the state's rank."""


class DimensionTooLarge(EraeError, ValueError):
    """State exceeds the size supported by the numerical minimizer."""


class NonFiniteFunction(EraeError, ValueError):
    """Function evaluator returned NaN or infinity."""


class OutOfDomain(EraeError, ValueError):
    """Evaluation point lies outside the curve's domain."""
