"""Random spin baths with prescribed coupling and bath strengths."""

from __future__ import annotations

import logging
from itertools import combinations
from itertools import product

import numpy as np

from cddsim.dynamics import HamiltonianSpec
from cddsim.dynamics import PauliTerm
from cddsim.dynamics import TermKind
from cddsim.harness.config import BATH_STRUCTURES
from cddsim.harness.config import COUPLING_AXES
from cddsim.harness.exceptions import ConfigError
from cddsim.theory import hamiltonian_strengths


logger = logging.getLogger(__name__)

AXES = "XYZ"


def _word(n_spins: int, placement: dict[int, str]) -> str:
    word = ["I"] * n_spins
    for position, axis in placement.items():
        word[position] = axis
    return "".join(word)


def _bath_pairs(n_system: int, n_bath: int, structure: str) -> list[tuple[int, int]]:
    sites = range(n_system, n_system + n_bath)
    if structure == "chain":
        return list(zip(sites[:-1], sites[1:]))  # noqa: B905
    return list(combinations(sites, 2))


def _coupling_terms(
    rng: np.random.Generator,
    n_system: int,
    n_bath: int,
    coupling_axes: str,
) -> list[PauliTerm]:
    """1-local system-bath words, one system qubit per term."""
    n_spins = n_system + n_bath
    terms = []
    for qubit, spin in product(range(n_system), range(n_system, n_spins)):
        for system_axis, bath_axis in product(coupling_axes, AXES):
            word = _word(n_spins, {qubit: system_axis, spin: bath_axis})
            terms.append(PauliTerm(rng.normal(), word))
    return terms


def _bath_terms(
    rng: np.random.Generator,
    n_system: int,
    n_bath: int,
    structure: str,
) -> list[PauliTerm]:
    """Local fields plus two-spin bath interactions."""
    n_spins = n_system + n_bath
    sites = range(n_system, n_spins)

    field_axes = "Z" if structure == "dipolar" else AXES
    terms = [
        PauliTerm(rng.normal(), _word(n_spins, {spin: axis}))
        for spin in sites
        for axis in field_axes
    ]

    for first, second in _bath_pairs(n_system, n_bath, structure):
        if structure == "dipolar":
            # Secular dipolar form XX + YY - 2 ZZ.
            strength = rng.normal()
            for axis, weight in (("X", 1.0), ("Y", 1.0), ("Z", -2.0)):
                word = _word(n_spins, {first: axis, second: axis})
                terms.append(PauliTerm(weight * strength, word))
        else:
            for axis_a, axis_b in product(AXES, AXES):
                word = _word(n_spins, {first: axis_a, second: axis_b})
                terms.append(PauliTerm(rng.normal(), word))

    return terms


def make_bath(
    n_bath: int,
    seed: int,
    beta_target: float,
    j_target: float,
    n_system: int = 1,
    structure: str = "pairwise",
    coupling_axes: str = "XYZ",
) -> HamiltonianSpec:
    """Random bath Hamiltonian rescaled to exact strengths.

    Coupling and bath coefficients are standard normal draws from
    ``numpy.random.default_rng(seed)``. Each part is then rescaled so its
    spectral norm equals the target. A zero target yields a spec without
    that part.

    Args:
        n_bath: Bath spins, at least one.
        seed: Generator seed.
        beta_target: Spectral norm of the bath part.
        j_target: Spectral norm of the system-bath coupling part.
        n_system: System qubits.
        structure: Bath interactions: ``pairwise`` (all pairs, all axes),
            ``chain`` (nearest neighbours) or ``dipolar`` (secular dipolar
            pairs with Z fields).
        coupling_axes: ``XYZ`` for general 1-local coupling or ``Z`` for
            pure dephasing.

    Returns:
        Spec with coupling and bath terms only, no system Hamiltonian.

    Raises:
        ConfigError: On invalid sizes, targets or choices.
    """
    if n_bath < 1 or n_system < 1:
        raise ConfigError("Need at least one system qubit and one bath spin")
    if beta_target < 0 or j_target < 0:
        raise ConfigError("Target strengths must be >= 0")
    if structure not in BATH_STRUCTURES:
        raise ConfigError(f"structure must be one of {BATH_STRUCTURES}")
    if coupling_axes not in COUPLING_AXES:
        raise ConfigError(f"coupling_axes must be one of {COUPLING_AXES}")

    rng = np.random.default_rng(seed)
    terms = _coupling_terms(rng, n_system, n_bath, coupling_axes)
    terms += _bath_terms(rng, n_system, n_bath, structure)
    spec = HamiltonianSpec(tuple(terms), n_system, n_bath)

    j, beta = hamiltonian_strengths(spec)
    for kind, measured, target in (
        (TermKind.COUPLING, j, j_target),
        (TermKind.BATH, beta, beta_target),
    ):
        if target == 0:
            spec = spec.without(kind)
        else:
            spec = spec.scaled(kind, target / measured)

    logger.debug(
        f"Bath seed {seed}: {len(spec.terms)} terms, "
        f"J={j_target:g}, beta={beta_target:g}"
    )
    return spec
