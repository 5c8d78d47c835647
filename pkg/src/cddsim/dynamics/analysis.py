"""Reduced states, Hamiltonian decomposition and residual coupling."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from cddsim.constants import BRANCH_CUT_MARGIN
from cddsim.dynamics.exceptions import BranchCutError
from cddsim.dynamics.propagation import PulseModel
from cddsim.dynamics.propagation import ScheduleSimulator
from cddsim.dynamics.propagation import check_hermitian
from cddsim.dynamics.spins import HamiltonianSpec
from cddsim.dynamics.spins import SpinSystem
from cddsim.exceptions import ShapeError
from cddsim.sequence import Schedule
from cddsim.sequence.exceptions import TimingError


logger = logging.getLogger(__name__)


def _check_joint(
    operator: NDArray[np.complex128],
    system: SpinSystem,
    name: str,
) -> None:
    if operator.shape != (system.dim, system.dim):
        raise ShapeError(
            f"{name} does not live on the joint space",
            (name, "joint"),
            (operator.shape, (system.dim, system.dim)),
        )


def reduced_state(
    rho: NDArray[np.complex128],
    system: SpinSystem,
) -> NDArray[np.complex128]:
    """Partial trace over all bath spins.

    Args:
        rho: Joint density matrix, system factors leading.
        system: Spin system that fixes the split.

    Returns:
        System density matrix.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    _check_joint(rho, system, "rho")

    ds, db = system.system_dim, system.bath_dim
    return np.einsum("ikjk->ij", rho.reshape(ds, db, ds, db))


@dataclass(frozen=True)
class HamiltonianParts:
    """Unique split ``h_S x I + I x h_B + h_SB``.

    `bath` and `coupling` are traceless; the identity component sits in
    `system`. `coupling` has vanishing partial traces over either factor.

    Args:
        system: System factor, system dimension.
        bath: Bath factor, bath dimension.
        coupling: Coupling part on the joint space.
    """

    system: NDArray[np.complex128]
    bath: NDArray[np.complex128]
    coupling: NDArray[np.complex128]

    @property
    def coupling_strength(self) -> float:
        """Spectral norm of the coupling part."""
        return float(np.linalg.norm(self.coupling, ord=2))

    def total(self) -> NDArray[np.complex128]:
        """Reassemble the joint operator."""
        ds, db = self.system.shape[0], self.bath.shape[0]
        return (
            np.kron(self.system, np.eye(db))
            + np.kron(np.eye(ds), self.bath)
            + self.coupling
        )


def decompose_hamiltonian(
    h_eff: NDArray[np.complex128],
    system: SpinSystem,
) -> HamiltonianParts:
    """Split a joint Hermitian operator into system, bath and coupling parts.

    Raises:
        NotHermitianError: If `h_eff` is not Hermitian.
    """
    h_eff = np.asarray(h_eff, dtype=np.complex128)
    _check_joint(h_eff, system, "H_eff")
    check_hermitian(h_eff, "H_eff")

    ds, db = system.system_dim, system.bath_dim
    blocks = h_eff.reshape(ds, db, ds, db)
    mean = np.trace(h_eff) / system.dim

    h_system = np.einsum("ikjk->ij", blocks) / db
    h_bath = np.einsum("kikj->ij", blocks) / ds - mean * np.eye(db)
    coupling = (
        h_eff - np.kron(h_system, np.eye(db)) - np.kron(np.eye(ds), h_bath)
    )

    return HamiltonianParts(h_system, h_bath, coupling)


def effective_hamiltonian(
    unitary: NDArray[np.complex128],
    duration: float,
) -> NDArray[np.complex128]:
    """Principal ``i log(U) / T`` of a unitary.

    Eigenphases are taken in (-pi, pi].

    Raises:
        BranchCutError: If an eigenphase is within the branch-cut margin of +-pi.
    """
    if duration <= 0:
        raise TimingError(f"Effective Hamiltonian needs T > 0, got {duration}")

    triangular, vectors = scipy.linalg.schur(unitary, output="complex")
    phases = np.angle(np.diag(triangular))

    max_phase = float(np.abs(phases).max(initial=0.0))
    if np.pi - max_phase < BRANCH_CUT_MARGIN:
        raise BranchCutError(max_phase)

    h_eff = -(vectors * phases) @ vectors.conj().T / duration
    return (h_eff + h_eff.conj().T) / 2


def effective_coupling_norm(
    schedule: Schedule,
    spec: HamiltonianSpec,
    pulse_model: PulseModel,
) -> float:
    """Residual system-bath coupling of one full schedule.

    The net ideal pulse rotation is divided out of the schedule propagator
    before taking the logarithm, leaving the toggling-frame error
    propagator.

    Returns:
        Spectral norm of the coupling part of the effective Hamiltonian.
    """
    simulator = ScheduleSimulator(spec, pulse_model)
    unitary = simulator.unitary(schedule)
    error = simulator.net_rotation(schedule).conj().T @ unitary

    h_eff = effective_hamiltonian(error, schedule.duration)
    norm = decompose_hamiltonian(h_eff, spec.system).coupling_strength
    logger.debug(f"{schedule.label}: residual coupling {norm:.3e}")
    return norm
