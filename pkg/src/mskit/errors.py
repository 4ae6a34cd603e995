"""Exception hierarchy.

The CLI maps these onto exit codes: spec/IO problems exit 1, mathematical
preconditions (operation not applicable to the input) exit 2, verification
failures exit 3.
"""


class MskitError(Exception):
    """Base class for all package errors."""


class SpecFormatError(MskitError):
    """A graph-spec file or family description failed to parse or validate."""


class FamilyError(SpecFormatError):
    """A sequence family violates an invariant (negative or non-integer counts)."""


class PreconditionError(MskitError):
    """The operation is mathematically inapplicable to this input."""


class UnknownVertexError(PreconditionError):
    pass


class NotStronglyConnectedError(PreconditionError):
    pass


class ZeroEntropyError(PreconditionError):
    """The system has entropy zero; classification assumes positive entropy."""


class ExactnessError(PreconditionError):
    """Exact/certified values are unavailable; use the empirical route."""


class UnsupportedRegimeError(PreconditionError):
    """Series parameters outside the regime the rigorous tail bound covers."""


class InsufficientDataError(PreconditionError):
    """Too few exact coefficients for an empirical verdict."""


class BudgetError(MskitError):
    """A materialization or enumeration budget would be exceeded."""


class UnresolvedComparisonError(MskitError):
    """An interval comparison did not resolve within the window cap."""


class ConvergenceError(MskitError):
    """An iteration failed to reach the requested enclosure width."""


class VerificationError(MskitError):
    """A recomputed certificate contradicts the claimed result."""
