"""Density-matrix constructors and validation."""

from __future__ import annotations

from functools import reduce

import numpy as np
from numpy.typing import NDArray

from cddsim.constants import STATE_ATOL
from cddsim.dynamics.exceptions import InvalidStateError
from cddsim.exceptions import ShapeError


def pure_state(vector: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """Projector onto a normalized copy of `vector`."""
    vector = np.asarray(vector, dtype=np.complex128).ravel()
    norm = np.linalg.norm(vector)
    if norm == 0:
        raise InvalidStateError("Cannot build a state from the zero vector")
    vector = vector / norm
    return np.outer(vector, vector.conj())


def plus_state() -> NDArray[np.complex128]:
    """Equal superposition ``(|0> + |1>)/sqrt(2)``."""
    return pure_state(np.array([1.0, 1.0]))


def maximally_mixed(dim: int) -> NDArray[np.complex128]:
    """Identity over `dim`, the infinite-temperature state."""
    return np.eye(dim, dtype=np.complex128) / dim


def random_pure_state(dim: int, rng: np.random.Generator) -> NDArray[np.complex128]:
    """Haar-random pure state from a seeded generator."""
    vector = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return pure_state(vector)


def random_density_matrix(
    dim: int,
    rng: np.random.Generator,
    rank: int | None = None,
) -> NDArray[np.complex128]:
    """Random mixed state ``G G^dagger / Tr`` of the given rank."""
    rank = dim if rank is None else rank
    ginibre = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = ginibre @ ginibre.conj().T
    return rho / np.trace(rho).real


def product_state(*factors: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """Tensor product of density matrices, first factor leading."""
    return reduce(np.kron, factors, np.eye(1, dtype=np.complex128))


def validate_density_matrix(
    rho: NDArray[np.complex128],
    dim: int | None = None,
    atol: float = STATE_ATOL,
) -> NDArray[np.complex128]:
    """Check square shape, hermiticity, unit trace and positivity.

    Returns:
        The input as a complex array.

    Raises:
        ShapeError: If the matrix is not square or not `dim` wide.
        InvalidStateError: If it is not a valid density matrix.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ShapeError(
            "Density matrix must be square",
            ("rho", "expected"),
            (rho.shape, ("n", "n")),
        )
    if dim is not None and rho.shape != (dim, dim):
        raise ShapeError(
            "Density matrix has the wrong dimension",
            ("rho", "expected"),
            (rho.shape, (dim, dim)),
        )

    if not np.allclose(rho, rho.conj().T, atol=atol):
        raise InvalidStateError("Density matrix is not Hermitian")

    trace = np.trace(rho).real
    if abs(trace - 1.0) > atol:
        raise InvalidStateError(f"Density matrix trace is {trace}, expected 1")

    min_eig = np.linalg.eigvalsh(rho).min()
    if min_eig < -atol:
        raise InvalidStateError(f"Density matrix has negative eigenvalue {min_eig:.3e}")

    return rho
