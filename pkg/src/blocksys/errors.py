"""Typed errors raised across the toolkit.

The CLI maps these to exit codes: usage problems (InvalidInput) exit 2,
data/computation errors (everything else here) exit 3.
"""

from __future__ import annotations


class BlocksysError(Exception):
    """Base class for all toolkit errors."""


class AmbientMismatch(BlocksysError):
    """Two subspaces or vectors live in different ambient dimensions."""


class ZeroArgument(BlocksysError):
    """lcm/gcd called with an argument outside the allowed range."""


class NonSplitComponent(BlocksysError):
    """A simple component of the dual algebra does not split over the
    working scalar field (or splitting it is outside the implemented
    search envelope).  Carries the component index and the dimension of
    the component's center over the working field."""

    def __init__(self, component_index: int, center_dim: int, reason: str = ""):
        self.component_index = component_index
        self.center_dim = center_dim
        self.reason = reason
        msg = f"component {component_index}: center has dimension {center_dim} over the working field"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class LiftingFailed(BlocksysError):
    """Idempotent lifting did not converge within its budget."""


class InternalDisagreement(BlocksysError):
    """Two independent routes to the same object disagreed.  Always a bug
    or an invalid input that slipped past validation."""


class UnsupportedParams(BlocksysError):
    """A corpus generator was asked for parameters outside its contract."""


class InvalidInput(BlocksysError):
    """Caller-supplied arguments violate a documented precondition."""


class FileFormatError(BlocksysError):
    """A structure-constant document is malformed."""
