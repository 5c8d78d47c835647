"""Low level workers for evolving grid points in worker processes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from cddsim.dynamics import HamiltonianSpec
from cddsim.dynamics import PulseModel
from cddsim.dynamics import ScheduleSimulator
from cddsim.dynamics import SpinSystem
from cddsim.dynamics import TermKind
from cddsim.dynamics import reduced_state
from cddsim.dynamics.states import maximally_mixed
from cddsim.dynamics.states import plus_state
from cddsim.dynamics.states import product_state
from cddsim.dynamics.states import pure_state
from cddsim.dynamics.states import random_pure_state
from cddsim.exceptions import CDDSimError
from cddsim.harness.exceptions import ExperimentError
from cddsim.metrics import magnetization
from cddsim.metrics import trace_distance
from cddsim.sequence import Schedule


@dataclass(frozen=True)
class SimulationTask:
    """Schedules sharing one bath instance and pulse interval.

    Args:
        spec: Bath Hamiltonian of this seed.
        pulse_model: Pulse model.
        schedules: Schedules to evolve, in output order.
        tau0: Pulse interval the schedules were compiled with.
        seed: Bath seed.
        system_state: Initial system state name.
        bath_state: Initial bath state name.
    """

    spec: HamiltonianSpec
    pulse_model: PulseModel
    schedules: tuple[Schedule, ...]
    tau0: float
    seed: int
    system_state: str = "plus"
    bath_state: str = "mixed"


@dataclass(frozen=True)
class PointResult:
    """Signal of one schedule on one bath instance."""

    label: str
    tau0: float
    total_time: float
    signal: float
    distance: float
    seed: int


def initial_state(
    system: SpinSystem,
    system_state: str,
    bath_state: str,
    seed: int,
) -> NDArray[np.complex128]:
    """Joint product state, system factors leading.

    The random pure bath state draws from a stream seeded by ``(seed, 1)``,
    independent of the Hamiltonian draws.
    """
    if system_state == "plus_y":
        qubit = pure_state(np.array([1.0, 1.0j]))
    else:
        qubit = plus_state()

    if bath_state == "random_pure":
        rng = np.random.default_rng([seed, 1])
        bath = random_pure_state(system.bath_dim, rng)
    else:
        bath = maximally_mixed(system.bath_dim)

    return product_state(*([qubit] * system.n_system), bath)


def first_qubit(
    rho_s: NDArray[np.complex128],
    n_system: int,
) -> NDArray[np.complex128]:
    """State of system qubit 0."""
    if n_system == 1:
        return rho_s
    return reduced_state(rho_s, SpinSystem(1, n_system - 1))


def signal_worker(task: SimulationTask) -> list[PointResult]:
    """Evolve every schedule of a task and measure it.

    The desired state comes from the same schedule with all coupling terms
    removed.

    Args:
        task: Schedules plus the bath they act on.

    Returns:
        One result per schedule, in task order.

    Raises:
        ExperimentError: Naming the sequence and pulse interval that failed.
    """
    system = task.spec.system
    rho0 = initial_state(system, task.system_state, task.bath_state, task.seed)

    simulator = ScheduleSimulator(task.spec, task.pulse_model)
    uncoupled = task.spec.without(TermKind.COUPLING)
    reference = ScheduleSimulator(uncoupled, task.pulse_model)

    results = []
    for schedule in task.schedules:
        try:
            rho_s = reduced_state(simulator.run(schedule, rho0), system)
            desired = reduced_state(reference.run(schedule, rho0), system)
        except CDDSimError as exc:
            raise ExperimentError(schedule.label, task.tau0, str(exc)) from exc

        signal = magnetization(first_qubit(rho_s, system.n_system))
        result = PointResult(
            label=schedule.label,
            tau0=task.tau0,
            total_time=schedule.duration,
            signal=signal,
            distance=trace_distance(rho_s, desired),
            seed=task.seed,
        )
        results.append(result)

    return results
