"""Schedule events and the compiled schedule value object."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any
from typing import Iterator
from typing import Union

from cddsim.sequence.timing import TimingParams


class PulseAxis(Enum):
    """Rotation axis of a pi pulse."""

    X = "X"
    Y = "Y"
    Z = "Z"


class EventKind(Enum):
    """What happens during a schedule event."""

    FREE = "free"
    PULSE = "pulse"
    PHASE_GAP = "phase_gap"


# Untimed form of an event, as consumed by `simplify`.
RawEvent = Union[PulseAxis, EventKind]


@dataclass(frozen=True)
class ScheduleEvent:
    """One timed event of a schedule.

    Args:
        kind: Free evolution, pulse or phase-change gap.
        start: Absolute start time in ticks.
        duration: Duration in ticks.
        axis: Pulse axis, only set for pulses.
    """

    kind: EventKind
    start: int
    duration: int
    axis: PulseAxis | None = None

    @property
    def stop(self) -> int:
        """End time in ticks."""
        return self.start + self.duration

    @property
    def raw(self) -> RawEvent:
        """Untimed form of this event."""
        return self.axis if self.kind is EventKind.PULSE else self.kind


@dataclass(frozen=True)
class Schedule:
    """Execution-ordered events of a compiled DD sequence.

    Events tile `[0, total_duration)` without gaps or overlaps. Start times
    never decrease; zero-width pulses share their start with the next event.

    Args:
        events: Time-ordered events.
        timing: Timing the schedule was compiled with.
        label: Sequence name such as ``CDD_3`` or ``PDD_4``.
    """

    events: tuple[ScheduleEvent, ...]
    timing: TimingParams
    label: str = ""

    def __len__(self) -> int:
        """Number of events."""
        return len(self.events)

    def __iter__(self) -> Iterator[ScheduleEvent]:
        """Iterate over events in execution order."""
        return iter(self.events)

    @property
    def total_duration(self) -> int:
        """Total duration in ticks."""
        return sum(event.duration for event in self.events)

    @property
    def duration(self) -> float:
        """Total duration in time units."""
        return self.timing.to_time(self.total_duration)

    def count(self, kind: EventKind) -> int:
        """Number of events of a kind."""
        return sum(1 for event in self.events if event.kind is kind)

    @property
    def pulse_count(self) -> int:
        """Number of pulses."""
        return self.count(EventKind.PULSE)

    @property
    def phase_gap_count(self) -> int:
        """Number of phase-change gaps."""
        return self.count(EventKind.PHASE_GAP)

    @property
    def free_count(self) -> int:
        """Number of free-evolution intervals."""
        return self.count(EventKind.FREE)

    @property
    def pulses(self) -> tuple[PulseAxis, ...]:
        """Pulse axes in execution order."""
        return tuple(e.axis for e in self.events if e.kind is EventKind.PULSE)

    def raw(self) -> list[RawEvent]:
        """Untimed event list, suitable for `simplify`."""
        return [event.raw for event in self.events]

    def to_rows(self) -> list[dict[str, Any]]:
        """Event table in time units."""
        return [
            dict(
                start_time=self.timing.to_time(event.start),
                kind=event.kind.value,
                axis=event.axis.value if event.axis is not None else "-",
                duration=self.timing.to_time(event.duration),
            )
            for event in self.events
        ]

    def summary(self) -> dict[str, Any]:
        """JSON-ready summary of the schedule."""
        return dict(
            label=self.label,
            pulse_count=self.pulse_count,
            phase_gap_count=self.phase_gap_count,
            free_count=self.free_count,
            total_duration=self.duration,
            total_ticks=self.total_duration,
            tick=self.timing.tick,
        )
