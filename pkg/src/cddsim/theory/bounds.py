"""Threshold parameter, CDD / PDD distance bounds and level selection.

Every bound depends on the Hamiltonian strengths only through the
dimensionless products ``J tau0`` and ``beta tau0``. The ``<~`` bounds are
reported as they stand, without the hidden constants.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np

from cddsim.dynamics import HamiltonianSpec
from cddsim.dynamics import SpinSystem
from cddsim.dynamics import TermKind
from cddsim.dynamics import build_operator
from cddsim.theory.exceptions import TheoryInputError
from cddsim.theory.exceptions import UnreachableTargetError


logger = logging.getLogger(__name__)


def _log4(value: float) -> float:
    # log2 is exact on powers of two, so powers of four stay exact.
    return math.log2(value) / 2


def _check_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise TheoryInputError(f"{name} must be positive, got {value}")


def _check_non_negative(**values: float) -> None:
    for name, value in values.items():
        if not value >= 0:
            raise TheoryInputError(f"{name} must be >= 0, got {value}")


def _check_level(n: float) -> None:
    if n < 0:
        raise TheoryInputError(f"Concatenation level must be >= 0, got {n}")


class Regime(Enum):
    """Relative strength of bath dynamics and system-bath coupling."""

    PESSIMISTIC = "pessimistic"
    OPTIMISTIC = "optimistic"


def regime(j: float, beta: float) -> Regime:
    """Pessimistic when the bath is faster than the coupling (``J < beta``)."""
    return Regime.PESSIMISTIC if j < beta else Regime.OPTIMISTIC


def hamiltonian_strengths(
    spec: HamiltonianSpec,
    system: SpinSystem | None = None,
) -> tuple[float, float]:
    """Spectral norms ``(J, beta)`` of the coupling and bath parts.

    Args:
        spec: Hamiltonian spec on the joint space.
        system: Spin system to build on. Defaults to the spec's own.

    Returns:
        Norm of the system-bath coupling part and of the bath part.
    """
    system = spec.system if system is None else system

    coupling = build_operator(spec.part(TermKind.COUPLING), system)
    bath = build_operator(spec.part(TermKind.BATH), system)

    j = float(np.linalg.norm(coupling, ord=2))
    beta = float(np.linalg.norm(bath, ord=2))
    return j, beta


def epsilon(beta: float, tau0: float, n: float) -> float:
    """Threshold parameter ``4 beta tau0 2^n``."""
    _check_non_negative(beta=beta)
    _check_positive(tau0=tau0)
    _check_level(n)
    return 4 * beta * tau0 * 2**n


def max_tau0(beta: float, n: float) -> float:
    """Longest pulse interval with ``epsilon < 1`` at level `n` (exclusive)."""
    _check_positive(beta=beta)
    _check_level(n)
    return 1 / (2 ** (n + 2) * beta)


def cdd_bound(j: float, beta: float, tau0: float, n: float) -> float:
    """Distance bound ``2 J tau0 epsilon^n`` after a level-`n` CDD cycle.

    Non-integer levels are accepted, which makes the bound a smooth
    function of `n` for root finding and minimization.
    """
    _check_non_negative(j=j)
    return 2 * j * tau0 * epsilon(beta, tau0, n) ** n


def pdd_bound(j: float, beta: float, tau0: float, n_pulses: int) -> float:
    """Distance bound ``2 N J tau0 beta tau0`` after `n_pulses` intervals."""
    _check_non_negative(j=j, beta=beta)
    _check_positive(tau0=tau0)
    if n_pulses < 1:
        raise TheoryInputError(f"Need at least one pulse, got {n_pulses}")
    return 2 * n_pulses * (j * tau0) * (beta * tau0)


def required_level_continuous(
    j: float,
    beta: float,
    tau0: float,
    delta_star: float,
) -> float:
    """Real level at which `cdd_bound` equals `delta_star`.

    Takes the smaller root of the quadratic in ``n`` obtained from
    ``log4`` of the bound, i.e. the one below the optimal level.

    Raises:
        UnreachableTargetError: If the discriminant is negative.
    """
    _check_positive(j=j, beta=beta, tau0=tau0, delta_star=delta_star)

    shift = 1 + _log4(beta * tau0)
    discriminant = shift**2 - 2 * _log4(j * tau0 / delta_star) - 1
    if discriminant < 0:
        raise UnreachableTargetError(j * tau0, beta * tau0, delta_star)

    return -math.sqrt(discriminant) - shift


def required_level(j: float, beta: float, tau0: float, delta_star: float) -> int:
    """Smallest useful level for a target distance, rounded to nearest.

    Args:
        j: Coupling strength ``J``.
        beta: Bath strength ``beta``.
        tau0: Pulse interval.
        delta_star: Target distance, in (0, 1).

    Returns:
        The rounded root, clamped at zero.

    Raises:
        UnreachableTargetError: If no level reaches `delta_star`.
    """
    level = required_level_continuous(j, beta, tau0, delta_star)
    return max(0, round(level))


def optimal_level(beta: float, tau0: float) -> int:
    """Level minimizing the CDD bound at fixed pulse interval.

    Returns ``floor(log4(1 / (beta tau0)) - 1)``, clamped at zero.
    """
    _check_positive(beta=beta, tau0=tau0)
    level = math.floor(_log4(1 / (beta * tau0)) - 1)
    return max(0, level)


def optimal_bound(j: float, beta: float, tau0: float) -> float:
    """CDD bound at the optimal level."""
    return cdd_bound(j, beta, tau0, optimal_level(beta, tau0))


@dataclass(frozen=True)
class TheoryParams:
    """Inputs of the analytic bounds.

    Args:
        j: Coupling strength ``J = ||H_SB||``.
        beta: Bath strength ``beta = ||H_B||``.
        tau0: Pulse interval.
        n: Concatenation level.
        n_pulses: Pulse count for the PDD bound. Defaults to the matched
            ``4^n`` intervals of a level-`n` CDD cycle.
        delta_star: Optional target distance.
    """

    j: float
    beta: float
    tau0: float
    n: int = 0
    n_pulses: int | None = None
    delta_star: float | None = None

    def __post_init__(self) -> None:
        """Validate ranges."""
        _check_positive(j=self.j, beta=self.beta, tau0=self.tau0)
        _check_level(self.n)
        if self.delta_star is not None and not 0 < self.delta_star < 1:
            raise TheoryInputError(
                f"Target distance must lie in (0, 1), got {self.delta_star}"
            )

    @property
    def j_tau0(self) -> float:
        """Dimensionless coupling ``J tau0``."""
        return self.j * self.tau0

    @property
    def beta_tau0(self) -> float:
        """Dimensionless bath strength ``beta tau0``."""
        return self.beta * self.tau0

    @property
    def pulse_count(self) -> int:
        """Pulse count used for the PDD bound."""
        return 4**self.n if self.n_pulses is None else self.n_pulses

    def summary(self) -> dict[str, Any]:
        """All bounds and levels for these parameters."""
        summary: dict[str, Any] = dict(
            j_tau0=self.j_tau0,
            beta_tau0=self.beta_tau0,
            level=self.n,
            epsilon=epsilon(self.beta, self.tau0, self.n),
            converges=epsilon(self.beta, self.tau0, self.n) < 1,
            max_tau0=max_tau0(self.beta, self.n),
            cdd_bound=cdd_bound(self.j, self.beta, self.tau0, self.n),
            pdd_pulses=self.pulse_count,
            pdd_bound=pdd_bound(self.j, self.beta, self.tau0, self.pulse_count),
            optimal_level=optimal_level(self.beta, self.tau0),
            optimal_bound=optimal_bound(self.j, self.beta, self.tau0),
            regime=regime(self.j, self.beta).value,
        )

        if self.delta_star is not None:
            summary["delta_star"] = self.delta_star
            try:
                summary["required_level"] = required_level(
                    self.j, self.beta, self.tau0, self.delta_star
                )
            except UnreachableTargetError as exc:
                logger.warning(exc.message)
                summary["required_level"] = None

        return summary
