"""Custom exceptions for state metrics and decay fitting."""

from cddsim.exceptions import CDDSimError


class FitInputError(CDDSimError):
    """Raised when a decay curve cannot be fitted as given."""


class FitConvergenceError(CDDSimError):
    """Raised when the nonlinear refinement does not converge."""

    def __init__(self, label: str, status: int, message: str):
        """Initialize with custom message."""
        self.label = label
        self.status = status
        self.message = (
            f"Exponential fit of {label or 'curve'} did not converge "
            f"(status {status}): {message}"
        )
        super().__init__(self.message)
