"""Exception types shared across the package.

Every failure mode of the exact-arithmetic model gets its own class so
that callers (and the verification suites) can distinguish "the input
was bad" from "the computation left the representable domain".
"""


class GenHeckeError(Exception):
    """Base class for all package errors."""


class DivisionError(GenHeckeError):
    """Exact division failed (non-monomial divisor, or it does not divide)."""


class SpecializationError(GenHeckeError):
    """A parameter specialization needs an inverse that does not exist."""


class PrecisionError(GenHeckeError):
    """A sum cancelled in the graded p-adic model; the true value is unknown."""


class ConfigError(GenHeckeError):
    """The configured finite field is too small for a requested root."""


class NotInWaff(GenHeckeError):
    """Element is not in the affine Weyl group (translation not in the root lattice)."""


class CoverFailure(GenHeckeError):
    """Length-additivity verification failed for a region base point (a bug)."""


class BallNotClosed(GenHeckeError):
    """A basis conversion needed an element outside the supplied ball."""


class UnsupportedCase(GenHeckeError):
    """Requested operation falls in a case deliberately left unimplemented."""


class NonIntegralEntry(GenHeckeError):
    """An action-matrix entry has negative valuation; reduction is undefined."""


class NotCentralCharacter(GenHeckeError):
    """A central generator does not act by a scalar on the module."""
