"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so new error kinds should subclass one of
the classes below rather than ``Exception`` directly.
"""


class OspError(Exception):
    """Base class for all library errors."""


class DomainError(OspError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""

    def __init__(self, message, weight=None):
        super().__init__(message)
        self.weight = weight


class RankError(DomainError):
    """Invalid rank (l < 1) or mismatched ranks between arguments."""


class LatticeError(DomainError):
    """A weight that must lie in the root lattice does not."""


class ConeError(DomainError):
    """A weight that must lie in the positive root cone does not."""


class ResourceCapError(OspError):
    """A configured enumeration or truncation cap would be exceeded."""


class TruncationError(OspError, ValueError):
    """A product expansion would not terminate under the requested truncation."""
