"""Pulse timing parameters on an integer tick grid."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import replace
from typing import Any

from cddsim.constants import DEFAULT_TICK
from cddsim.sequence.exceptions import TimingError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TimingParams:
    """Pulse interval, pulse width and phase-change delay.

    Durations are stored as integer multiples of `tick` so that cycle
    times add up exactly. `delta_ticks == fa_ticks == 0` is the ideal
    zero-width pulse model.

    Args:
        tau0_ticks: Pulse interval in ticks, must be positive.
        delta_ticks: Pi-pulse width in ticks.
        fa_ticks: Phase-change delay between back-to-back pulses in ticks.
        tick: Length of one tick in time units.
    """

    tau0_ticks: int
    delta_ticks: int = 0
    fa_ticks: int = 0
    tick: float = DEFAULT_TICK

    def __post_init__(self) -> None:
        """Validate ranges."""
        for name in ("tau0_ticks", "delta_ticks", "fa_ticks"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TimingError(
                    f"{name} must be an integer tick count, got {value!r}"
                )

        if self.tau0_ticks <= 0:
            raise TimingError(f"tau0 must be positive, got {self.tau0_ticks} ticks")
        if self.delta_ticks < 0 or self.fa_ticks < 0:
            raise TimingError(
                f"delta and fa must be non-negative, got {self.delta_ticks} "
                f"and {self.fa_ticks} ticks"
            )
        if not self.tick > 0:
            raise TimingError(f"tick must be positive, got {self.tick}")

    @classmethod
    def from_durations(
        cls,
        tau0: float,
        delta: float = 0.0,
        fa: float = 0.0,
        tick: float = DEFAULT_TICK,
    ) -> TimingParams:
        """Build timing from durations in time units, rounded to the tick grid."""
        if not tick > 0:
            raise TimingError(f"tick must be positive, got {tick}")

        ticks = []
        for name, value in (("tau0", tau0), ("delta", delta), ("fa", fa)):
            count = int(round(value / tick))
            if abs(count * tick - value) > 1e-6 * max(abs(value), tick):
                logger.warning(
                    f"{name}={value} is not a multiple of tick={tick}; "
                    f"rounded to {count * tick}"
                )
            ticks.append(count)

        return cls(*ticks, tick=tick)

    @property
    def tau0(self) -> float:
        """Pulse interval in time units."""
        return self.to_time(self.tau0_ticks)

    @property
    def delta(self) -> float:
        """Pulse width in time units."""
        return self.to_time(self.delta_ticks)

    @property
    def fa(self) -> float:
        """Phase-change delay in time units."""
        return self.to_time(self.fa_ticks)

    @property
    def is_ideal(self) -> bool:
        """Zero-width pulses with no phase-change delay."""
        return self.delta_ticks == 0 and self.fa_ticks == 0

    def to_time(self, ticks: int) -> float:
        """Convert a tick count to time units."""
        return ticks * self.tick

    def with_tau0(self, tau0: float) -> TimingParams:
        """Copy with a different pulse interval (time units)."""
        return replace(self, tau0_ticks=int(round(tau0 / self.tick)))

    def to_dict(self) -> dict[str, Any]:
        """Convert timing to dictionary (time units)."""
        return dict(tau0=self.tau0, delta=self.delta, fa=self.fa, tick=self.tick)
