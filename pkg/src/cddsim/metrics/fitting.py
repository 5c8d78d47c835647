"""Decay curves and exponential decay fitting."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any
from typing import Iterable

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import least_squares

from cddsim.constants import RATE_FLOOR
from cddsim.metrics.exceptions import FitConvergenceError
from cddsim.metrics.exceptions import FitInputError


logger = logging.getLogger(__name__)

MIN_SAMPLES = 3


@dataclass(frozen=True)
class DecayCurve:
    """Signal samples against total evolution time.

    Args:
        times: Strictly increasing total times.
        signals: Signal at each time.
        label: Sequence label, e.g. ``CDD_3``.
        tau0: Pulse interval the curve was recorded with.
        pulse_model: Pulse model label.
    """

    times: NDArray[np.float64]
    signals: NDArray[np.float64]
    label: str = ""
    tau0: float | None = None
    pulse_model: str = "ideal"

    def __post_init__(self) -> None:
        """Convert to arrays and validate ordering."""
        times = np.asarray(self.times, dtype=np.float64)
        signals = np.asarray(self.signals, dtype=np.float64)
        if times.ndim != 1 or times.shape != signals.shape:
            raise FitInputError(
                f"times and signals must be matching vectors, got {times.shape} "
                f"and {signals.shape}"
            )
        if np.any(np.diff(times) <= 0):
            raise FitInputError("Decay curve times must be strictly increasing")

        object.__setattr__(self, "times", times)
        object.__setattr__(self, "signals", signals)

    @classmethod
    def from_samples(
        cls,
        samples: Iterable[tuple[float, float]],
        **metadata: Any,
    ) -> DecayCurve:
        """Build a curve from (time, signal) pairs."""
        pairs = list(samples)
        times = [time for time, _ in pairs]
        signals = [signal for _, signal in pairs]
        return cls(np.asarray(times), np.asarray(signals), **metadata)

    def __len__(self) -> int:
        """Number of samples."""
        return len(self.times)

    @property
    def samples(self) -> list[tuple[float, float]]:
        """(time, signal) pairs."""
        return list(zip(self.times.tolist(), self.signals.tolist()))  # noqa: B905


@dataclass(frozen=True)
class FitResult:
    """Fitted ``S0 exp(-t / T2)``.

    A curve without measurable decay has ``rate == 0`` and ``t2 == inf``.

    Args:
        s0: Amplitude.
        t2: Decay time.
        rate: Decay rate, exactly ``1 / t2``.
        residual: Root-mean-square fit error.
        label: Label of the fitted curve.
    """

    s0: float
    t2: float
    rate: float
    residual: float
    label: str = ""

    @classmethod
    def from_rate(
        cls,
        s0: float,
        rate: float,
        residual: float,
        label: str = "",
    ) -> FitResult:
        """Build from amplitude and rate, clamping negligible rates to zero."""
        if rate < RATE_FLOOR:
            if rate < -RATE_FLOOR:
                logger.warning(
                    f"{label}: growing signal (rate {rate:.3e}) reported as no decay"
                )
            rate = 0.0
        t2 = 1.0 / rate if rate > 0 else math.inf
        return cls(float(s0), t2, float(rate), float(residual), label)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready dictionary. An infinite T2 becomes None."""
        return dict(
            label=self.label,
            s0=self.s0,
            t2=self.t2 if math.isfinite(self.t2) else None,
            rate=self.rate,
            residual=self.residual,
        )


def _log_linear_start(
    times: NDArray[np.float64],
    signals: NDArray[np.float64],
) -> tuple[float, float]:
    """Amplitude and rate from a straight-line fit of log(signal)."""
    positive = signals > 0
    slope, intercept = np.polyfit(times[positive], np.log(signals[positive]), 1)
    return float(np.exp(intercept)), float(-slope)


def fit_exponential(curve: DecayCurve, max_evaluations: int = 1000) -> FitResult:
    """Least-squares fit of ``S0 exp(-t / T2)`` to a decay curve.

    The log-linear regression on positive samples gives the starting
    point; Levenberg-Marquardt (damped Gauss-Newton) refines it on the
    unweighted nonlinear residual.

    Args:
        curve: At least three samples, two of them with positive signal.
        max_evaluations: Iteration cap of the refinement.

    Returns:
        Fitted amplitude, decay time, rate and RMS residual.

    Raises:
        FitInputError: Too few samples or no positive signal.
        FitConvergenceError: Refinement hit the iteration cap or failed.
    """
    if len(curve) < MIN_SAMPLES:
        raise FitInputError(f"Need at least {MIN_SAMPLES} samples, got {len(curve)}")

    times, signals = curve.times, curve.signals
    if np.count_nonzero(signals > 0) < 2:
        raise FitInputError("Need at least two samples with positive signal")

    start = _log_linear_start(times, signals)

    def residuals(params: NDArray[np.float64]) -> NDArray[np.float64]:
        s0, rate = params
        return s0 * np.exp(-rate * times) - signals

    def jacobian(params: NDArray[np.float64]) -> NDArray[np.float64]:
        s0, rate = params
        decay = np.exp(-rate * times)
        return np.column_stack([decay, -times * s0 * decay])

    result = least_squares(
        residuals,
        np.asarray(start),
        jac=jacobian,
        method="lm",
        x_scale="jac",
        xtol=1e-12,
        ftol=1e-12,
        gtol=1e-12,
        max_nfev=max_evaluations,
    )
    if result.status <= 0:
        raise FitConvergenceError(curve.label, result.status, result.message)

    s0, rate = result.x
    rms = float(np.sqrt(np.mean(result.fun**2)))
    logger.debug(
        f"{curve.label}: start {start}, refined ({s0:.6g}, {rate:.6g}) "
        f"after {result.nfev} evaluations, rms {rms:.3e}"
    )
    return FitResult.from_rate(s0, rate, rms, curve.label)
