"""Net pulse products and the decoupling condition."""

from __future__ import annotations

from functools import reduce
from typing import Iterable
from typing import Sequence

import numpy as np
from numpy.typing import NDArray

from cddsim.constants import PAULI_I
from cddsim.constants import PAULIS
from cddsim.exceptions import ShapeError
from cddsim.sequence.events import EventKind
from cddsim.sequence.events import PulseAxis
from cddsim.sequence.events import RawEvent
from cddsim.sequence.events import Schedule


def _kron_all(factors: Sequence[NDArray[np.complex128]]) -> NDArray[np.complex128]:
    return reduce(np.kron, factors, np.eye(1, dtype=np.complex128))


def pulse_rotation(axis: PulseAxis | str, n_system: int = 1) -> NDArray[np.complex128]:
    """Exact collective pi rotation ``exp(-i pi/2 sigma)`` on every system qubit."""
    sigma = PAULIS[PulseAxis(axis).value]
    return _kron_all([-1j * sigma] * n_system)


def net_pulse_unitary(
    schedule: Schedule | Iterable[RawEvent | str],
) -> NDArray[np.complex128]:
    """Ordered product of the ideal pi rotations of a schedule.

    Free intervals and phase gaps contribute the identity. Accepts a
    compiled schedule or an untimed raw event list.
    """
    items = schedule.raw() if isinstance(schedule, Schedule) else schedule

    unitary = PAULI_I.copy()
    for item in items:
        if isinstance(item, EventKind):
            continue
        unitary = pulse_rotation(item) @ unitary

    return unitary


def equal_up_to_phase(
    a: NDArray[np.complex128],
    b: NDArray[np.complex128],
    atol: float = 1e-10,
) -> bool:
    """Check `a == exp(i phi) b` for some global phase phi."""
    if a.shape != b.shape:
        return False

    overlap = np.vdot(b, a)
    if abs(overlap) < atol:
        return bool(np.allclose(a, b, atol=atol))

    phase = overlap / abs(overlap)
    return bool(np.allclose(a, phase * b, atol=atol))


def collective_pauli_group(
    n_system: int,
    n_bath: int = 0,
) -> list[NDArray[np.complex128]]:
    """Collective pulses {I, X..X, Y..Y, Z..Z} on the system, identity on the bath."""
    bath_identity = np.eye(2**n_bath, dtype=np.complex128)
    group = []
    for label in ("I", "X", "Y", "Z"):
        system = _kron_all([PAULIS[label]] * n_system)
        group.append(np.kron(system, bath_identity))
    return group


def check_decoupling_condition(
    pulses: Iterable[NDArray[np.complex128]],
    h_sb: NDArray[np.complex128],
) -> float:
    """Spectral norm of ``sum_a P_a^dagger H_SB P_a``.

    Zero means the pulse set averages the coupling away.

    Raises:
        ShapeError: If a pulse and the coupling differ in dimension.
    """
    h_sb = np.asarray(h_sb, dtype=np.complex128)
    total = np.zeros_like(h_sb)
    for pulse in pulses:
        pulse = np.asarray(pulse, dtype=np.complex128)
        if pulse.shape != h_sb.shape:
            raise ShapeError(
                "Pulse and coupling dimensions differ",
                ("pulse", "H_SB"),
                (pulse.shape, h_sb.shape),
            )
        total += pulse.conj().T @ h_sb @ pulse

    return float(np.linalg.norm(total, ord=2))
