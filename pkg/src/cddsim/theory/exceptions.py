"""Custom exceptions for the analytic bounds."""

from cddsim.exceptions import CDDSimError


class TheoryInputError(CDDSimError):
    """Raised when a bound is evaluated outside its domain."""


class UnreachableTargetError(CDDSimError):
    """Raised when no concatenation level reaches the requested distance."""

    def __init__(self, j_tau0: float, beta_tau0: float, delta_star: float):
        """Initialize with custom message."""
        self.j_tau0 = j_tau0
        self.beta_tau0 = beta_tau0
        self.delta_star = delta_star
        self.message = (
            f"Target distance {delta_star:.3e} is unreachable with "
            f"J tau0 = {j_tau0:.3e} and beta tau0 = {beta_tau0:.3e}. "
            "Shorten tau0 or relax the target."
        )
        super().__init__(self.message)
