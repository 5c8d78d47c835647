"""Tests for reduced states, Hamiltonian decomposition and residual coupling."""

from __future__ import annotations

import numpy as np
import pytest

from cddsim.dynamics import HamiltonianSpec
from cddsim.dynamics import PulseModel
from cddsim.dynamics import SpinSystem
from cddsim.dynamics import TermKind
from cddsim.dynamics import build_operator
from cddsim.dynamics import decompose_hamiltonian
from cddsim.dynamics import effective_coupling_norm
from cddsim.dynamics import effective_hamiltonian
from cddsim.dynamics import maximally_mixed
from cddsim.dynamics import plus_state
from cddsim.dynamics import product_state
from cddsim.dynamics import propagator
from cddsim.dynamics import pure_state
from cddsim.dynamics import reduced_state
from cddsim.dynamics.exceptions import BranchCutError
from cddsim.exceptions import ShapeError
from cddsim.sequence import TimingParams
from cddsim.sequence import cdd_sequence
from cddsim.sequence import free_sequence
from cddsim.sequence import pdd_sequence
from cddsim.sequence.exceptions import TimingError
from tests.unit.conftest import random_spec


@pytest.fixture
def bath_spec() -> HamiltonianSpec:
    """Anisotropic coupling to one bath spin with a tilted bath field."""
    return HamiltonianSpec.from_terms(
        [
            (0.1, "ZX"),
            (0.1, "XZ"),
            (0.1, "YY"),
            (1.0, "IX"),
            (0.7, "IZ"),
        ]
    )


class TestReducedState:
    """Partial trace over the bath."""

    def test_product(self, rng):
        """Product states give back the system factor."""
        rho_s = pure_state(rng.normal(size=2) + 1j * rng.normal(size=2))
        rho = product_state(rho_s, maximally_mixed(4))
        np.testing.assert_allclose(reduced_state(rho, SpinSystem(1, 2)), rho_s)

    def test_bell(self):
        """Tracing out half a Bell pair leaves I/2."""
        bell = pure_state(np.array([1, 0, 0, 1]))
        np.testing.assert_allclose(
            reduced_state(bell, SpinSystem(1, 1)), maximally_mixed(2), atol=1e-15
        )

    def test_shape(self):
        """The state must match the spin system."""
        with pytest.raises(ShapeError):
            reduced_state(plus_state(), SpinSystem(1, 1))


class TestDecomposeHamiltonian:
    """Unique system, bath and coupling parts."""

    def test_no_coupling(self):
        """Local terms leave no coupling part."""
        h = build_operator(HamiltonianSpec.from_terms([(1, "ZI"), (1, "IX")]))
        parts = decompose_hamiltonian(h, SpinSystem(1, 1))
        assert parts.coupling_strength == pytest.approx(0.0, abs=1e-14)

    def test_pure_coupling(self):
        """ZZ is traceless in both factors."""
        h = build_operator(HamiltonianSpec.from_terms([(1, "ZZ")]))
        parts = decompose_hamiltonian(h, SpinSystem(1, 1))
        np.testing.assert_allclose(parts.system, np.zeros((2, 2)), atol=1e-15)
        np.testing.assert_allclose(parts.bath, np.zeros((2, 2)), atol=1e-15)
        np.testing.assert_allclose(parts.coupling, h, atol=1e-15)

    def test_identity_goes_to_system(self):
        """The identity component is carried by the system part."""
        spec = HamiltonianSpec.from_terms(
            [(2.0, "II"), (1.0, "ZI"), (1.0, "IX"), (0.5, "ZX")]
        )
        parts = decompose_hamiltonian(build_operator(spec), spec.system)
        np.testing.assert_allclose(parts.system, np.diag([3.0, 1.0]), atol=1e-15)
        np.testing.assert_allclose(parts.bath, [[0, 1], [1, 0]], atol=1e-15)
        assert parts.coupling_strength == pytest.approx(0.5)

    def test_reconstruction(self, rng):
        """Parts add back up and the coupling has no partial traces."""
        spec = random_spec(rng, n_system=2, n_bath=2, n_terms=12)
        h = build_operator(spec)
        parts = decompose_hamiltonian(h, spec.system)
        np.testing.assert_allclose(parts.total(), h, atol=1e-12)

        blocks = parts.coupling.reshape(4, 4, 4, 4)
        np.testing.assert_allclose(np.einsum("ikjk->ij", blocks), 0, atol=1e-12)
        np.testing.assert_allclose(np.einsum("kikj->ij", blocks), 0, atol=1e-12)


class TestEffectiveHamiltonian:
    """Principal logarithm of a unitary."""

    def test_recovers_generator(self, rng):
        """i log(exp(-iHT)) / T = H below the branch cut."""
        h = build_operator(random_spec(rng)) * 0.1
        duration = 2.0
        recovered = effective_hamiltonian(propagator(h, duration), duration)
        np.testing.assert_allclose(recovered, h, atol=1e-10)

    def test_branch_cut(self):
        """An eigenphase of pi is ambiguous."""
        with pytest.raises(BranchCutError):
            effective_hamiltonian(-np.eye(2, dtype=complex), 1.0)

    def test_duration(self):
        """The duration must be positive."""
        with pytest.raises(TimingError):
            effective_hamiltonian(np.eye(2, dtype=complex), 0.0)


class TestEffectiveCouplingNorm:
    """Residual system-bath coupling of whole schedules."""

    timing = TimingParams(tau0_ticks=10, tick=1e-3)

    def test_no_coupling(self):
        """Nothing to decouple, nothing left."""
        spec = HamiltonianSpec.from_terms([(1.0, "IX"), (0.4, "IZ")])
        norm = effective_coupling_norm(cdd_sequence(2, self.timing), spec, PulseModel())
        assert norm <= 1e-10

    def test_free_equals_coupling(self, bath_spec):
        """Without pulses the effective Hamiltonian is the Hamiltonian."""
        schedule = free_sequence(1000, self.timing)
        norm = effective_coupling_norm(schedule, bath_spec, PulseModel())
        expected = bath_spec.part(TermKind.COUPLING)
        expected_norm = np.linalg.norm(build_operator(expected), ord=2)
        assert norm == pytest.approx(expected_norm, abs=1e-8)

    def test_concatenation_reduces_coupling(self, bath_spec):
        """Each level lowers the residual coupling at small tau0."""
        schedules = [cdd_sequence(n, self.timing) for n in range(3)]
        norms = [
            effective_coupling_norm(schedule, bath_spec, PulseModel())
            for schedule in schedules
        ]
        assert norms[0] > norms[1] > norms[2]

    def test_pdd_first_order_in_tau0(self, bath_spec):
        """Ideal PDD leaves a residual linear in the pulse interval."""
        tau0s = np.array([0.004, 0.008, 0.016])
        norms = [
            effective_coupling_norm(
                pdd_sequence(1, TimingParams.from_durations(tau0, tick=1e-6)),
                bath_spec,
                PulseModel(),
            )
            for tau0 in tau0s
        ]
        slope = np.polyfit(np.log(tau0s), np.log(norms), 1)[0]
        assert 0.7 <= slope <= 1.3

    def test_finite_width_error_grows_with_duty_cycle(self, bath_spec):
        """Finite PDD pulses leave more coupling when pulses fill the cycle."""
        model = PulseModel.finite_width()
        wide = TimingParams(tau0_ticks=1000, delta_ticks=1000, tick=1e-6)
        sparse = TimingParams(tau0_ticks=10_000, delta_ticks=1000, tick=1e-6)

        dense_norm = effective_coupling_norm(pdd_sequence(1, wide), bath_spec, model)
        sparse_norm = effective_coupling_norm(pdd_sequence(1, sparse), bath_spec, model)
        assert dense_norm > sparse_norm
