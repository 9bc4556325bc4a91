"""Exception types raised by the qshutter package.

Every error that callers may want to catch individually gets its own class;
all inherit from QShutterError so `except QShutterError` catches anything
the library raises deliberately.
"""

from __future__ import annotations


class QShutterError(Exception):
    """Base class for all qshutter errors."""


class ProfileError(QShutterError, ValueError):
    """Invalid potential profile specification."""


class EmptyProfileError(ProfileError):
    """Layer list is empty."""


class LayerWidthError(ProfileError):
    """A layer width is not strictly positive."""


class LayerHeightError(ProfileError):
    """A layer height is negative (wells must sit at zero)."""


class MassRatioError(ProfileError):
    """Effective-mass ratio is not strictly positive."""


class DomainError(QShutterError, ValueError):
    """Argument outside the documented domain (x, t, k, ... checks)."""


class OverflowGuardError(QShutterError, ArithmeticError):
    """A layer exponential would overflow; carries the offending layer data."""

    def __init__(self, layer_index: int, exponent_magnitude: float):
        self.layer_index = layer_index
        self.exponent_magnitude = exponent_magnitude
        super().__init__(
            f"layer {layer_index}: |Im(q)*width| = {exponent_magnitude:.3g} "
            f"exceeds the overflow guard (300); evanescent decay underflows "
            f"double precision"
        )


class PoleError(QShutterError):
    """Base class for pole-search failures."""


class PoleConvergenceError(PoleError):
    """Newton refinement did not converge; carries the iterate trace."""

    def __init__(self, message: str, trace: list):
        self.trace = list(trace)
        super().__init__(f"{message} (trace of {len(self.trace)} iterates attached)")


class QuadrantEscapeError(PoleConvergenceError):
    """Newton iterate left the fourth quadrant of the k plane."""


class PoleCountError(PoleError):
    """Fewer poles found than requested; message names how many were found."""

    def __init__(self, found: int, requested: int):
        self.found = found
        self.requested = requested
        super().__init__(f"{found} poles found, {requested} requested")


class PoleQualityError(PoleError):
    """A mode was built from a pole whose outgoing residual is too large."""


class ConfigError(QShutterError, ValueError):
    """Scenario-config parse or validation failure with line/field context."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
