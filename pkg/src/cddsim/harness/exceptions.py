"""Custom exceptions for experiment orchestration."""

from __future__ import annotations

from typing import Any

from cddsim.exceptions import CDDSimError


class ConfigError(CDDSimError):
    """Raised when an experiment configuration value is invalid."""


class ExperimentError(CDDSimError):
    """Raised when one grid point of an experiment fails.

    Args:
        label: Label of the offending sequence.
        tau0: Pulse interval of the offending point.
        cause: Text of the underlying error.
    """

    def __init__(self, label: str, tau0: float, cause: str):
        """Initialize with custom message."""
        self.label = label
        self.tau0 = tau0
        self.cause = cause
        self.message = f"{label} at tau0={tau0:g} failed: {cause}"
        super().__init__(self.message)

    def __reduce__(self) -> tuple[Any, ...]:
        """Pickle with the constructor arguments to cross process boundaries."""
        return type(self), (self.label, self.tau0, self.cause)
