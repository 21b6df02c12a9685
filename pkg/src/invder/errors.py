"""Exception taxonomy shared by the whole package.

Every error raised on purpose derives from InvderError so callers (and the
command line front end) can distinguish bad input or failed preconditions
from genuine bugs.
"""

from __future__ import annotations


class InvderError(Exception):
    """Base class for all errors raised by this package."""


class InputError(InvderError):
    """Malformed input: bad file, unknown name, dimension mismatch."""


class SingularMatrixError(InvderError):
    """A matrix inversion was requested but the determinant is zero."""


class PreconditionError(InvderError):
    """A construction was invoked on input that fails its precondition."""


class NotInvDerError(PreconditionError):
    """The supplied map is not an invertible derivation with derivation inverse."""


class NotRotaBaxterError(PreconditionError):
    """The supplied operator fails the Rota-Baxter identity at the given weight."""


class CommutationFailureError(PreconditionError):
    """Two maps that must commute do not."""


class NotIdempotentError(PreconditionError):
    """The supplied operator is not idempotent."""


class NotMultiplicativeError(PreconditionError):
    """The supplied operator does not respect the product."""


class SourceAxiomFailureError(PreconditionError):
    """The source algebra fails the axiom the construction relies on."""


class SymmetryPreconditionFailureError(PreconditionError):
    """The two dendriform products fail the symmetry the passage requires."""
