"""Extra configurations for unit tests."""

from __future__ import annotations

import numpy as np
import pytest

from cddsim.dynamics import HamiltonianSpec
from cddsim.dynamics import PauliTerm


def random_spec(
    rng: np.random.Generator,
    n_system: int = 1,
    n_bath: int = 2,
    n_terms: int = 8,
) -> HamiltonianSpec:
    """Spec of random Pauli words with Gaussian coefficients."""
    n_spins = n_system + n_bath
    terms = []
    for _ in range(n_terms):
        word = "".join(rng.choice(list("IXYZ"), size=n_spins))
        terms.append(PauliTerm(rng.normal(), word))
    return HamiltonianSpec(tuple(terms), n_system, n_bath)


@pytest.fixture
def zz_spec() -> HamiltonianSpec:
    """One qubit coupled to one bath spin by 0.3 ZZ, bath field 0.5 X."""
    return HamiltonianSpec.from_terms([(0.3, "ZZ"), (0.5, "IX")])
