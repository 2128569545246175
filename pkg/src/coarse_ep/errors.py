"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class CoarseEPError(Exception):
    """Base class for all library errors."""


class InvalidInput(CoarseEPError, ValueError):
    """Malformed input or a violated caller precondition."""


class NotPlanarEvidence(InvalidInput):
    """The planarity promise is contradicted by a short-cycle check."""


class InternalTheoremViolation(CoarseEPError, RuntimeError):
    """A structural guarantee failed at runtime; indicates a bug, never bad data."""


class InternalError(InternalTheoremViolation):
    """Inconsistent internal bookkeeping (e.g. a corrupt expansion map)."""


class CapExceeded(CoarseEPError):
    """A brute-force computation would exceed its configured budget."""
