"""Tests for timing, schedule compilation and simplification."""

from __future__ import annotations

import numpy as np
import pytest

from cddsim.exceptions import EnvironmentFormatError
from cddsim.sequence import EventKind
from cddsim.sequence import PulseAxis
from cddsim.sequence import TimingParams
from cddsim.sequence import cdd_sequence
from cddsim.sequence import cycle_ticks
from cddsim.sequence import free_sequence
from cddsim.sequence import pdd_sequence
from cddsim.sequence import repeat_sequence
from cddsim.sequence import simplify
from cddsim.sequence.compiler import cdd_raw
from cddsim.sequence.compiler import cdd_raw_event_count
from cddsim.sequence.exceptions import ScheduleSizeError
from cddsim.sequence.exceptions import TimingError


F, G = EventKind.FREE, EventKind.PHASE_GAP
X, Y, Z = PulseAxis.X, PulseAxis.Y, PulseAxis.Z


class TestTimingParams:
    """Tick-based timing."""

    def test_from_durations(self):
        """Durations are rounded to the tick grid."""
        timing = TimingParams.from_durations(15e-6, 10.52e-6, 376e-9)
        assert timing.tau0_ticks == 15_000
        assert timing.delta_ticks == 10_520
        assert timing.fa_ticks == 376
        assert not timing.is_ideal

    def test_ideal(self):
        """Zero width and zero delay is the ideal model."""
        assert TimingParams(100).is_ideal

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(tau0_ticks=0),
            dict(tau0_ticks=10, delta_ticks=-1),
            dict(tau0_ticks=10, fa_ticks=-5),
            dict(tau0_ticks=10, tick=0.0),
            dict(tau0_ticks=1.5),
            dict(tau0_ticks=True),
        ],
    )
    def test_invalid(self, kwargs):
        """Out-of-range timing raises."""
        with pytest.raises(TimingError):
            TimingParams(**kwargs)

    def test_with_tau0(self, experiment_timing):
        """Only the interval changes."""
        timing = experiment_timing.with_tau0(30e-6)
        assert timing.tau0_ticks == 30_000
        assert timing.delta_ticks == experiment_timing.delta_ticks


class TestCDD:
    """Concatenated sequences."""

    def test_level_zero(self, ideal_timing):
        """A single free interval."""
        schedule = cdd_sequence(0, ideal_timing)
        assert [e.kind for e in schedule] == [F]
        assert schedule.total_duration == 15_000
        assert schedule.label == "CDD_0"

    def test_level_one_order(self, ideal_timing):
        """Execution order is Free, X, Free, Z, Free, X, Free, Z."""
        schedule = cdd_sequence(1, ideal_timing)
        assert schedule.raw() == [F, X, F, Z, F, X, F, Z]
        assert schedule.total_duration == 4 * 15_000
        assert schedule.pulse_count == 4

    @pytest.mark.parametrize(
        "level, ticks, pulses, gaps",
        [
            (1, 102_080, 4, 0),
            (2, 409_072, 16, 2),
            (3, 1_678_368, 68, 8),
        ],
    )
    def test_experimental_cycle_times(
        self, experiment_timing, level, ticks, pulses, gaps
    ):
        """Cycle times of the experimental timing are exact on the tick grid."""
        schedule = cdd_sequence(level, experiment_timing)
        assert schedule.total_duration == ticks
        assert cycle_ticks(level, experiment_timing) == ticks
        assert schedule.pulse_count == pulses
        assert schedule.phase_gap_count == gaps
        assert schedule.free_count == 4**level

    @pytest.mark.parametrize("level", range(7))
    def test_recurrence_random_timing(self, rng, level):
        """Compiled duration equals the recurrence for random timing."""
        timing = TimingParams(*(int(v) for v in rng.integers(1, 10_000, size=3)))
        schedule = cdd_sequence(level, timing)
        assert schedule.total_duration == cycle_ticks(level, timing)
        assert schedule.free_count == 4**level

    @pytest.mark.parametrize("level", range(1, 6))
    def test_ideal_duration_and_parity(self, ideal_timing, level):
        """Ideal CDD_n lasts 4^n tau0 with an even pulse count."""
        schedule = cdd_sequence(level, ideal_timing)
        assert schedule.total_duration == 4**level * ideal_timing.tau0_ticks
        assert schedule.pulse_count % 2 == 0

    def test_cycle_boundaries(self, experiment_timing):
        """Odd levels end on a pulse, even levels on a free interval."""
        assert cdd_sequence(3, experiment_timing).events[-1].axis is Z
        assert cdd_sequence(2, experiment_timing).events[-1].kind is F

    def test_events_tile_timeline(self, experiment_timing):
        """Every event starts where the previous one stopped."""
        schedule = cdd_sequence(3, experiment_timing)
        for before, after in zip(schedule.events[:-1], schedule.events[1:]):
            assert after.start == before.stop
            assert after.start > before.start

    def test_no_adjacent_same_axis(self, experiment_timing):
        """Same-axis pulses never touch."""
        events = cdd_sequence(4, experiment_timing).events
        for before, after in zip(events[:-1], events[1:]):
            if before.kind is after.kind is EventKind.PULSE:
                assert before.axis is not after.axis

    def test_custom_pair(self, ideal_timing):
        """The base pair is configurable."""
        schedule = cdd_sequence(1, ideal_timing, pair=("X", "Y"))
        assert schedule.pulses == (Y, X, Y, X)

    @pytest.mark.parametrize("pair", [("Z", "Z"), ("Z",), ("X", "Y", "Z")])
    def test_bad_pair(self, ideal_timing, pair):
        """Pairs need two distinct axes."""
        with pytest.raises(TimingError):
            cdd_sequence(1, ideal_timing, pair=pair)

    def test_negative_level(self, ideal_timing):
        """Levels start at zero."""
        with pytest.raises(TimingError):
            cdd_sequence(-1, ideal_timing)

    def test_size_limit(self, ideal_timing, monkeypatch):
        """Oversized expansions are rejected before they are built."""
        monkeypatch.setenv("CDDSIM__SEQUENCE__MAX_EVENTS", "1000")
        cdd_sequence(3, ideal_timing)
        with pytest.raises(ScheduleSizeError, match="CDD_5"):
            cdd_sequence(5, ideal_timing)

    def test_size_limit_format(self, ideal_timing, monkeypatch):
        """A malformed limit raises a format error."""
        monkeypatch.setenv("CDDSIM__SEQUENCE__MAX_EVENTS", "many")
        with pytest.raises(EnvironmentFormatError):
            cdd_sequence(1, ideal_timing)

    @pytest.mark.parametrize("level", range(5))
    def test_raw_event_count(self, level):
        """Closed form of the unsimplified expansion size."""
        assert len(cdd_raw(level)) == cdd_raw_event_count(level)


class TestPDD:
    """Periodic sequences."""

    def test_pdd_one_is_cdd_one(self, experiment_timing):
        """PDD_1 and CDD_1 are the same cycle."""
        pdd = pdd_sequence(1, experiment_timing)
        cdd = cdd_sequence(1, experiment_timing)
        assert pdd.events == cdd.events

    def test_ideal_counts(self, ideal_timing):
        """Three cycles: 12 pulses, 12 free intervals, 12 tau0."""
        schedule = pdd_sequence(3, ideal_timing)
        assert schedule.pulse_count == 12
        assert schedule.free_count == 12
        assert schedule.total_duration == 12 * ideal_timing.tau0_ticks
        assert schedule.label == "PDD_3"

    def test_junctions_need_no_gap(self, experiment_timing):
        """Two cycles take 8 (tau0 + delta) with no phase gaps."""
        schedule = pdd_sequence(2, experiment_timing)
        assert schedule.total_duration == 204_160
        assert schedule.phase_gap_count == 0

    def test_zero_cycles(self, ideal_timing):
        """At least one cycle."""
        with pytest.raises(TimingError):
            pdd_sequence(0, ideal_timing)


class TestSimplify:
    """Pulse-pair rules."""

    def test_same_axis_cancels(self, experiment_timing):
        """Adjacent equal pulses vanish."""
        assert len(simplify([Z, Z], experiment_timing)) == 0

    def test_different_axes_get_gap(self, experiment_timing):
        """Adjacent different pulses get a phase-change gap."""
        schedule = simplify([X, Z], experiment_timing)
        assert schedule.raw() == [X, G, Z]
        assert schedule.total_duration == 2 * 10_520 + 376

    def test_free_blocks_cancellation(self, experiment_timing):
        """A free interval separates pulses."""
        assert simplify([X, F, X], experiment_timing).raw() == [X, F, X]

    def test_transitive_cancellation(self, experiment_timing):
        """Cancellation repeats until no pair is left."""
        assert simplify([X, Z, Z, X, Y], experiment_timing).raw() == [Y]

    def test_strings_accepted(self, experiment_timing):
        """Axis letters are read as pulses."""
        assert simplify(["X", "Y"], experiment_timing).raw() == [X, G, Y]

    def test_idempotent(self, rng, experiment_timing):
        """Simplifying twice changes nothing."""
        alphabet = [F, X, Y, Z]
        for _ in range(100):
            raw = [alphabet[i] for i in rng.integers(0, 4, size=20)]
            once = simplify(raw, experiment_timing)
            twice = simplify(once.raw(), experiment_timing)
            assert once.events == twice.events


class TestRepeatAndFree:
    """Repetition and free evolution."""

    def test_repeat(self, ideal_timing):
        """Repeating CDD_1 k times gives PDD_k."""
        repeated = repeat_sequence(cdd_sequence(1, ideal_timing), 3)
        assert repeated.events == pdd_sequence(3, ideal_timing).events
        assert repeated.label == "CDD_1x3"

    def test_repeat_once_keeps_label(self, ideal_timing):
        """A single repetition is the schedule itself."""
        assert repeat_sequence(cdd_sequence(2, ideal_timing), 1).label == "CDD_2"

    def test_repeat_duration(self, experiment_timing):
        """Durations add up across junctions."""
        cycle = cdd_sequence(2, experiment_timing)
        assert repeat_sequence(cycle, 4).total_duration == 4 * cycle.total_duration

    def test_free(self, ideal_timing):
        """Single free event of the requested length."""
        schedule = free_sequence(60_000, ideal_timing)
        assert len(schedule) == 1
        assert schedule.total_duration == 60_000
        assert schedule.pulse_count == 0
        np.testing.assert_allclose(schedule.duration, 60e-6)

    def test_free_positive(self, ideal_timing):
        """Free evolution needs a positive length."""
        with pytest.raises(TimingError):
            free_sequence(0, ideal_timing)


class TestScheduleOutput:
    """Tables and summaries."""

    def test_rows(self, experiment_timing):
        """Rows carry start time, kind, axis and duration."""
        rows = cdd_sequence(1, experiment_timing).to_rows()
        assert rows[0]["kind"] == "free"
        assert rows[0]["axis"] == "-"
        assert rows[1]["axis"] == "X"
        np.testing.assert_allclose(rows[1]["start_time"], 15e-6)
        np.testing.assert_allclose(rows[1]["duration"], 10.52e-6)

    def test_summary(self, experiment_timing):
        """Summary counts pulses and gaps."""
        summary = cdd_sequence(2, experiment_timing).summary()
        assert summary["label"] == "CDD_2"
        assert summary["pulse_count"] == 16
        assert summary["phase_gap_count"] == 2
        assert summary["total_ticks"] == 409_072
        np.testing.assert_allclose(summary["total_duration"], 409.072e-6)
