"""Compile CDD / PDD pulse sequences into timed schedules."""

from cddsim.sequence.algebra import check_decoupling_condition
from cddsim.sequence.algebra import collective_pauli_group
from cddsim.sequence.algebra import equal_up_to_phase
from cddsim.sequence.algebra import net_pulse_unitary
from cddsim.sequence.algebra import pulse_rotation
from cddsim.sequence.compiler import cdd_sequence
from cddsim.sequence.compiler import cycle_ticks
from cddsim.sequence.compiler import free_sequence
from cddsim.sequence.compiler import pdd_sequence
from cddsim.sequence.compiler import repeat_sequence
from cddsim.sequence.compiler import simplify
from cddsim.sequence.events import EventKind
from cddsim.sequence.events import PulseAxis
from cddsim.sequence.events import Schedule
from cddsim.sequence.events import ScheduleEvent
from cddsim.sequence.timing import TimingParams


__all__ = [
    "EventKind",
    "PulseAxis",
    "Schedule",
    "ScheduleEvent",
    "TimingParams",
    "cdd_sequence",
    "check_decoupling_condition",
    "collective_pauli_group",
    "cycle_ticks",
    "equal_up_to_phase",
    "free_sequence",
    "net_pulse_unitary",
    "pdd_sequence",
    "pulse_rotation",
    "repeat_sequence",
    "simplify",
]
