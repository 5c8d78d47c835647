"""Distances between states and the transverse magnetization signal."""

from __future__ import annotations

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from cddsim.constants import PAULI_X
from cddsim.constants import PAULI_Y
from cddsim.constants import STATE_ATOL
from cddsim.dynamics.exceptions import InvalidStateError
from cddsim.exceptions import ShapeError


def _check_pair(rho: NDArray[np.complex128], sigma: NDArray[np.complex128]) -> None:
    if rho.shape != sigma.shape:
        raise ShapeError(
            "State dimensions differ", ("rho", "sigma"), (rho.shape, sigma.shape)
        )


def trace_norm(operator: NDArray[np.complex128]) -> float:
    """Sum of singular values."""
    return float(scipy.linalg.svdvals(operator).sum())


def _psd_sqrt(rho: NDArray[np.complex128], atol: float) -> NDArray[np.complex128]:
    """Square root of a positive semidefinite matrix."""
    values, vectors = scipy.linalg.eigh((rho + rho.conj().T) / 2)
    if values.min() < -atol:
        raise InvalidStateError(f"State has negative eigenvalue {values.min():.3e}")
    roots = np.sqrt(np.clip(values, 0.0, None))
    return (vectors * roots) @ vectors.conj().T


def trace_distance(rho: NDArray[np.complex128], sigma: NDArray[np.complex128]) -> float:
    """Trace-norm distance ``||rho - sigma||_1 / 2``.

    The maximum probability of telling the two states apart.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    sigma = np.asarray(sigma, dtype=np.complex128)
    _check_pair(rho, sigma)

    return min(1.0, 0.5 * trace_norm(rho - sigma))


def fidelity(
    rho: NDArray[np.complex128],
    sigma: NDArray[np.complex128],
    atol: float = STATE_ATOL,
) -> float:
    """Root fidelity ``|| sqrt(rho) sqrt(sigma) ||_1``.

    For a pure `rho = |psi><psi|` this is ``sqrt(<psi|sigma|psi>)``.

    Raises:
        ShapeError: If the dimensions differ.
        InvalidStateError: If either state has eigenvalues below `-atol`.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    sigma = np.asarray(sigma, dtype=np.complex128)
    _check_pair(rho, sigma)

    value = trace_norm(_psd_sqrt(rho, atol) @ _psd_sqrt(sigma, atol))
    return min(1.0, value)


def magnetization(rho_s: NDArray[np.complex128]) -> float:
    """Absolute transverse magnetization ``sqrt(<X>^2 + <Y>^2)`` of one qubit."""
    rho_s = np.asarray(rho_s, dtype=np.complex128)
    if rho_s.shape != (2, 2):
        raise ShapeError(
            "Magnetization needs a single-qubit state",
            ("rho", "qubit"),
            (rho_s.shape, (2, 2)),
        )

    mx = np.trace(PAULI_X @ rho_s).real
    my = np.trace(PAULI_Y @ rho_s).real
    return float(np.hypot(mx, my))
