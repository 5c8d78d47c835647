"""Exact propagators and evolution of states through schedules."""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from enum import Enum

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from cddsim.constants import HERMITIAN_ATOL
from cddsim.dynamics.exceptions import NotHermitianError
from cddsim.dynamics.exceptions import PulseModelError
from cddsim.dynamics.spins import HamiltonianSpec
from cddsim.dynamics.spins import SpinSystem
from cddsim.dynamics.spins import build_operator
from cddsim.exceptions import ShapeError
from cddsim.sequence import EventKind
from cddsim.sequence import PulseAxis
from cddsim.sequence import Schedule
from cddsim.sequence import ScheduleEvent
from cddsim.sequence import pulse_rotation


logger = logging.getLogger(__name__)


def check_hermitian(
    operator: NDArray[np.complex128],
    name: str = "H",
    atol: float = HERMITIAN_ATOL,
) -> None:
    """Raise `NotHermitianError` if `operator` deviates from its adjoint."""
    deviation = float(np.abs(operator - operator.conj().T).max(initial=0.0))
    scale = max(1.0, float(np.abs(operator).max(initial=0.0)))
    if deviation > atol * scale:
        raise NotHermitianError(name, deviation)


def propagator(hamiltonian: NDArray[np.complex128], t: float) -> NDArray[np.complex128]:
    """Unitary ``exp(-i H t)`` via Hermitian eigendecomposition.

    Args:
        hamiltonian: Hermitian generator.
        t: Evolution time in time units.

    Returns:
        Propagator for time `t`.

    Raises:
        NotHermitianError: If the generator is not Hermitian.
    """
    return Evolver(hamiltonian).propagator(t)


class Evolver:
    """Propagators of one fixed Hamiltonian, cached per duration.

    The eigendecomposition is computed once. Cached propagators may be read
    concurrently; insertion is serialized by a lock.

    Args:
        hamiltonian: Hermitian generator.
        name: Name used in error messages.
    """

    def __init__(self, hamiltonian: NDArray[np.complex128], name: str = "H"):
        """Diagonalize the generator."""
        hamiltonian = np.asarray(hamiltonian, dtype=np.complex128)
        check_hermitian(hamiltonian, name)

        self.hamiltonian = hamiltonian
        self._energies, self._vectors = scipy.linalg.eigh(hamiltonian)
        self._cache: dict[float, NDArray[np.complex128]] = {}
        self._lock = threading.Lock()

    def propagator(self, t: float) -> NDArray[np.complex128]:
        """Propagator ``exp(-i H t)``."""
        cached = self._cache.get(t)
        if cached is not None:
            return cached

        phases = np.exp(-1j * self._energies * t)
        unitary = (self._vectors * phases) @ self._vectors.conj().T

        with self._lock:
            return self._cache.setdefault(t, unitary)


class PulseMode(Enum):
    """How pi pulses act."""

    IDEAL = "ideal"
    FINITE_WIDTH = "finite_width"


@dataclass(frozen=True)
class PulseModel:
    """Pulse model used when evolving through a schedule.

    Finite-width pulses are square controls ``(Omega/2) sigma`` with
    ``Omega = pi/delta`` on every system qubit.

    Args:
        mode: Ideal instantaneous rotations or finite-width square pulses.
        drift_during_pulse: Keep the full Hamiltonian on during finite pulses.
    """

    mode: PulseMode = PulseMode.IDEAL
    drift_during_pulse: bool = True

    @classmethod
    def ideal(cls) -> PulseModel:
        """Instantaneous perfect pi rotations."""
        return cls(PulseMode.IDEAL)

    @classmethod
    def finite_width(cls, drift_during_pulse: bool = True) -> PulseModel:
        """Square pulses of the schedule's width."""
        return cls(PulseMode.FINITE_WIDTH, drift_during_pulse)

    @property
    def label(self) -> str:
        """Short text label."""
        if self.mode is PulseMode.IDEAL:
            return "ideal"
        return "finite" if self.drift_during_pulse else "finite-nodrift"


class ScheduleSimulator:
    """Evolve joint system-bath states through schedules of one Hamiltonian.

    Args:
        spec: Hamiltonian spec on the joint space.
        pulse_model: Pulse model applied to every pulse event.
    """

    def __init__(self, spec: HamiltonianSpec, pulse_model: PulseModel | None = None):
        """Build the Hamiltonian and the pulse operators."""
        self.spec = spec
        self.system: SpinSystem = spec.system
        self.pulse_model = PulseModel() if pulse_model is None else pulse_model
        self.hamiltonian = build_operator(spec, self.system)
        self._drift = Evolver(self.hamiltonian)

        bath_identity = np.eye(self.system.bath_dim, dtype=np.complex128)
        self._rotations = {
            axis: np.kron(pulse_rotation(axis, self.system.n_system), bath_identity)
            for axis in PulseAxis
        }

        self._pulse_evolvers: dict[tuple[PulseAxis, float], Evolver] = {}
        self._pulse_lock = threading.Lock()

    @property
    def dim(self) -> int:
        """Joint Hilbert-space dimension."""
        return self.system.dim

    def _finite_pulse(self, axis: PulseAxis, width: float) -> NDArray[np.complex128]:
        key = (axis, width)
        evolver = self._pulse_evolvers.get(key)
        if evolver is None:
            # Collective sigma has eigenvalues +-1 on each qubit, so the
            # rotation angle per qubit is Omega * width = pi.
            control = sum(
                self._single_qubit_control(axis, qubit)
                for qubit in range(self.system.n_system)
            )
            generator = (np.pi / (2 * width)) * control
            if self.pulse_model.drift_during_pulse:
                generator = generator + self.hamiltonian
            evolver = Evolver(generator, name=f"pulse {axis.value}")
            with self._pulse_lock:
                evolver = self._pulse_evolvers.setdefault(key, evolver)
        return evolver.propagator(width)

    def _single_qubit_control(
        self,
        axis: PulseAxis,
        qubit: int,
    ) -> NDArray[np.complex128]:
        word = ["I"] * self.system.n_spins
        word[qubit] = axis.value
        return build_operator(
            HamiltonianSpec.from_terms([(1.0, "".join(word))], self.system.n_system),
            self.system,
        )

    def event_unitary(
        self,
        event: ScheduleEvent,
        tick: float,
    ) -> NDArray[np.complex128]:
        """Propagator of one schedule event."""
        duration = event.duration * tick

        if event.kind is not EventKind.PULSE:
            return self._drift.propagator(duration)

        if self.pulse_model.mode is PulseMode.IDEAL:
            if event.duration > 0:
                raise PulseModelError(
                    f"Ideal pulses need zero-width timing, got a {duration} wide "
                    "pulse. Use the finite-width pulse model."
                )
            return self._rotations[event.axis]

        if event.duration == 0:
            return self._rotations[event.axis]
        return self._finite_pulse(event.axis, duration)

    def unitary(self, schedule: Schedule) -> NDArray[np.complex128]:
        """Joint propagator over the whole schedule."""
        unitary = np.eye(self.dim, dtype=np.complex128)
        tick = schedule.timing.tick
        for event in schedule:
            unitary = self.event_unitary(event, tick) @ unitary
        return unitary

    def net_rotation(self, schedule: Schedule) -> NDArray[np.complex128]:
        """Product of the ideal pulse rotations on the joint space."""
        net = np.eye(self.dim, dtype=np.complex128)
        for axis in schedule.pulses:
            net = self._rotations[axis] @ net
        return net

    def run(
        self,
        schedule: Schedule,
        rho0: NDArray[np.complex128],
    ) -> NDArray[np.complex128]:
        """Joint state at the end of the schedule."""
        rho0 = np.asarray(rho0, dtype=np.complex128)
        if rho0.shape != (self.dim, self.dim):
            raise ShapeError(
                "Initial state does not match the Hamiltonian",
                ("rho0", "H"),
                (rho0.shape, (self.dim, self.dim)),
            )

        unitary = self.unitary(schedule)
        rho = unitary @ rho0 @ unitary.conj().T
        return (rho + rho.conj().T) / 2


def run_schedule(
    schedule: Schedule,
    spec: HamiltonianSpec,
    pulse_model: PulseModel,
    rho0: NDArray[np.complex128],
) -> NDArray[np.complex128]:
    """Evolve a joint state through a schedule.

    Free intervals and phase gaps evolve under the full Hamiltonian. Ideal
    pulses apply the exact system pi rotation in zero time; finite-width
    pulses evolve for the pulse width under the square control plus, if
    enabled, the drift.

    Args:
        schedule: Compiled schedule.
        spec: Hamiltonian on the joint space.
        pulse_model: Pulse model.
        rho0: Initial joint density matrix.

    Returns:
        Joint density matrix at the end of the schedule.
    """
    return ScheduleSimulator(spec, pulse_model).run(schedule, rho0)
