"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes: argument/structure problems exit 2,
resource-cap refusals exit 3, domain failures (construction gates, unsupported
parameter regimes) exit 4.
"""


class RanklabError(Exception):
    """Base class for all package errors."""


class ArgumentError(RanklabError):
    """Malformed or inconsistent arguments (bad text forms, shape mismatches)."""


class StructureError(RanklabError):
    """An object violates a structural invariant (non-monic modulus, basis not
    independent, matrix not invertible where required)."""


class ResourceLimitError(RanklabError):
    """An exhaustive computation was refused because it exceeds the configured cap."""

    def __init__(self, message: str, size: int, cap: int):
        super().__init__(message)
        self.size = size
        self.cap = cap


class DomainError(RanklabError):
    """Mathematically invalid request (reducible modulus, rank out of range)."""


class ConstructionRejected(DomainError):
    """A construction's existence gate failed; carries a concrete witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedParameterError(DomainError):
    """Parameter regime the implementation deliberately does not cover."""
