"""Compile CDD and PDD sequences into absolute-time schedules.

Operator expressions such as ``Z[U]X[U]Z[U]X[U]`` read right to left in
time. Schedules are stored in execution order, so one CDD level expands
to ``block, inner, block, outer, block, inner, block, outer``.
"""

from __future__ import annotations

import logging
import os
from typing import Iterable
from typing import Sequence

from cddsim.constants import DEFAULT_MAX_EVENTS
from cddsim.exceptions import EnvironmentFormatError
from cddsim.sequence.events import EventKind
from cddsim.sequence.events import PulseAxis
from cddsim.sequence.events import RawEvent
from cddsim.sequence.events import Schedule
from cddsim.sequence.events import ScheduleEvent
from cddsim.sequence.exceptions import ScheduleSizeError
from cddsim.sequence.exceptions import TimingError
from cddsim.sequence.timing import TimingParams


logger = logging.getLogger(__name__)

DEFAULT_PAIR = ("Z", "X")


def max_schedule_events() -> int:
    """Schedule-size limit, overridable with `CDDSIM__SEQUENCE__MAX_EVENTS`."""
    limit = os.getenv("CDDSIM__SEQUENCE__MAX_EVENTS", DEFAULT_MAX_EVENTS)
    try:
        return int(limit)
    except ValueError:
        raise EnvironmentFormatError("CDDSIM__SEQUENCE__MAX_EVENTS", "int") from None


def _check_size(label: str, n_events: int) -> None:
    limit = max_schedule_events()
    if n_events > limit:
        raise ScheduleSizeError(label, n_events, limit)


def _parse_pair(pair: Sequence[str | PulseAxis]) -> tuple[PulseAxis, PulseAxis]:
    """Validate an (outer, inner) base pair."""
    if len(pair) != 2:
        raise TimingError(f"Base pair must have two axes, got {pair!r}")

    outer, inner = (PulseAxis(axis) for axis in pair)
    if outer is inner:
        raise TimingError(f"Base pair axes must differ, got {outer.value} twice")

    return outer, inner


def _layout(raw: Iterable[RawEvent], timing: TimingParams, label: str) -> Schedule:
    """Assign absolute start times to an untimed event list."""
    durations = {
        EventKind.FREE: timing.tau0_ticks,
        EventKind.PULSE: timing.delta_ticks,
        EventKind.PHASE_GAP: timing.fa_ticks,
    }

    events = []
    start = 0
    for item in raw:
        if isinstance(item, PulseAxis):
            width = durations[EventKind.PULSE]
            event = ScheduleEvent(EventKind.PULSE, start, width, item)
        else:
            event = ScheduleEvent(item, start, durations[item])
        events.append(event)
        start = event.stop

    return Schedule(events=tuple(events), timing=timing, label=label)


def simplify(
    raw: Iterable[RawEvent | str],
    timing: TimingParams,
    label: str = "",
) -> Schedule:
    """Apply the pulse-pair rules and lay the result out in time.

    Pulses not separated by a free interval form a run. Inside a run,
    adjacent same-axis pulses cancel (repeatedly, until none are left) and
    every remaining pair of neighbours gets a phase-change gap. Existing
    gaps in the input are dropped and re-derived, so the function is
    idempotent.

    Args:
        raw: Untimed events. Strings "X", "Y", "Z" are read as pulse axes.
        timing: Timing used for the event durations.
        label: Label of the returned schedule.

    Returns:
        Simplified schedule.
    """
    reduced: list[RawEvent] = []
    run: list[PulseAxis] = []

    def flush() -> None:
        for idx, axis in enumerate(run):
            if idx:
                reduced.append(EventKind.PHASE_GAP)
            reduced.append(axis)
        run.clear()

    for item in raw:
        if item is EventKind.FREE:
            flush()
            reduced.append(EventKind.FREE)
        elif item is EventKind.PHASE_GAP:
            continue
        else:
            axis = PulseAxis(item)
            if run and run[-1] is axis:
                run.pop()
            else:
                run.append(axis)
    flush()

    return _layout(reduced, timing, label)


def cdd_raw_event_count(n: int) -> int:
    """Events in the unsimplified level-n expansion."""
    return 4**n + 4 * (4**n - 1) // 3


def cdd_raw(n: int, pair: Sequence[str | PulseAxis] = DEFAULT_PAIR) -> list[RawEvent]:
    """Unsimplified level-n expansion in execution order."""
    if n < 0:
        raise TimingError(f"Concatenation level must be >= 0, got {n}")

    outer, inner = _parse_pair(pair)
    _check_size(f"CDD_{n}", cdd_raw_event_count(n))

    block: list[RawEvent] = [EventKind.FREE]
    for _ in range(n):
        block = block + [inner] + block + [outer] + block + [inner] + block + [outer]

    return block


def cdd_sequence(
    n: int,
    timing: TimingParams,
    pair: Sequence[str | PulseAxis] = DEFAULT_PAIR,
) -> Schedule:
    """Compile the level-n concatenated sequence.

    Args:
        n: Concatenation level, `n >= 0`.
        timing: Pulse interval, width and phase-change delay.
        pair: (outer, inner) pulse axes of the base sequence.

    Returns:
        Simplified schedule labelled ``CDD_n``.
    """
    schedule = simplify(cdd_raw(n, pair), timing, label=f"CDD_{n}")
    logger.debug(
        f"Compiled {schedule.label}: {len(schedule)} events, "
        f"{schedule.pulse_count} pulses, {schedule.total_duration} ticks"
    )
    return schedule


def pdd_sequence(
    k: int,
    timing: TimingParams,
    pair: Sequence[str | PulseAxis] = DEFAULT_PAIR,
) -> Schedule:
    """Compile k repetitions of the universal decoupler cycle.

    Args:
        k: Cycle count, `k >= 1`.
        timing: Pulse interval, width and phase-change delay.
        pair: (outer, inner) pulse axes of the base sequence.

    Returns:
        Schedule labelled ``PDD_k``.
    """
    if k < 1:
        raise TimingError(f"PDD cycle count must be >= 1, got {k}")

    outer, inner = _parse_pair(pair)
    _check_size(f"PDD_{k}", 8 * k)

    cycle: list[RawEvent] = [EventKind.FREE, inner, EventKind.FREE, outer] * 2
    return simplify(cycle * k, timing, label=f"PDD_{k}")


def repeat_sequence(schedule: Schedule, m: int) -> Schedule:
    """Repeat a compiled cycle m times, simplifying at the junctions."""
    if m < 1:
        raise TimingError(f"Repetition count must be >= 1, got {m}")

    _check_size(schedule.label, len(schedule) * m)
    label = schedule.label if m == 1 else f"{schedule.label}x{m}"
    return simplify(schedule.raw() * m, schedule.timing, label=label)


def free_sequence(
    total_ticks: int,
    timing: TimingParams,
    label: str = "FREE",
) -> Schedule:
    """Unprotected evolution for `total_ticks` as a single free event."""
    if total_ticks <= 0:
        raise TimingError(
            f"Free evolution needs a positive duration, got {total_ticks}"
        )

    event = ScheduleEvent(EventKind.FREE, 0, total_ticks)
    return Schedule(events=(event,), timing=timing, label=label)


def cycle_ticks(n: int, timing: TimingParams) -> int:
    """Minimum CDD cycle time from the experimental timing recurrences.

    Level 1 takes ``4 (tau0 + delta)``, even levels ``4 t(2k-1) + 2 fa`` and
    odd levels ``4 (t(2k) + delta)``.
    """
    if n < 0:
        raise TimingError(f"Concatenation level must be >= 0, got {n}")

    ticks = timing.tau0_ticks
    for level in range(1, n + 1):
        if level % 2:
            ticks = 4 * (ticks + timing.delta_ticks)
        else:
            ticks = 4 * ticks + 2 * timing.fa_ticks
    return ticks
