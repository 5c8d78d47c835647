"""Custom exceptions for spin-bath dynamics."""

from __future__ import annotations

from cddsim.exceptions import CDDSimError


class SpinSystemError(CDDSimError):
    """Raised when spin counts are out of range."""


class PauliWordError(CDDSimError):
    """Raised when a Pauli word is malformed or has the wrong length."""

    def __init__(self, word: str, expected_length: int | None = None):
        """Initialize with custom message."""
        self.word = word
        self.expected_length = expected_length
        if expected_length is None:
            self.message = f"Invalid Pauli word {word!r}; use only I, X, Y, Z."
        else:
            self.message = (
                f"Pauli word {word!r} has length {len(word)}, "
                f"expected {expected_length} spins."
            )
        super().__init__(self.message)


class NotHermitianError(CDDSimError):
    """Raised when an operator expected to be Hermitian is not."""

    def __init__(self, name: str, deviation: float):
        """Initialize with custom message."""
        self.name = name
        self.deviation = deviation
        self.message = (
            f"{name} is not Hermitian (max |A - A^dagger| = {deviation:.3e})."
        )
        super().__init__(self.message)


class BranchCutError(CDDSimError):
    """Raised when a propagator eigenphase sits on the logarithm branch cut."""

    def __init__(self, max_phase: float):
        """Initialize with custom message."""
        self.max_phase = max_phase
        self.message = (
            f"Eigenphase {max_phase:.6f} is within reach of +-pi; the effective "
            "Hamiltonian is ambiguous. Reduce tau0."
        )
        super().__init__(self.message)


class PulseModelError(CDDSimError):
    """Raised when a pulse model does not fit the schedule timing."""


class InvalidStateError(CDDSimError):
    """Raised when a matrix is not a valid density matrix."""
