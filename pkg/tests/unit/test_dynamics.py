"""Tests for spin systems, operators, propagators and schedule evolution."""

from __future__ import annotations

import numpy as np
import pytest

from cddsim.constants import PAULI_I
from cddsim.constants import PAULI_X
from cddsim.constants import PAULI_Z
from cddsim.dynamics import Evolver
from cddsim.dynamics import HamiltonianSpec
from cddsim.dynamics import PauliTerm
from cddsim.dynamics import PulseModel
from cddsim.dynamics import ScheduleSimulator
from cddsim.dynamics import SpinSystem
from cddsim.dynamics import TermKind
from cddsim.dynamics import build_operator
from cddsim.dynamics import maximally_mixed
from cddsim.dynamics import plus_state
from cddsim.dynamics import product_state
from cddsim.dynamics import propagator
from cddsim.dynamics import random_density_matrix
from cddsim.dynamics import reduced_state
from cddsim.dynamics import run_schedule
from cddsim.dynamics import validate_density_matrix
from cddsim.dynamics.exceptions import InvalidStateError
from cddsim.dynamics.exceptions import NotHermitianError
from cddsim.dynamics.exceptions import PauliWordError
from cddsim.dynamics.exceptions import PulseModelError
from cddsim.dynamics.exceptions import SpinSystemError
from cddsim.exceptions import ShapeError
from cddsim.metrics import trace_distance
from cddsim.sequence import EventKind
from cddsim.sequence import TimingParams
from cddsim.sequence import cdd_sequence
from cddsim.sequence import free_sequence
from cddsim.sequence import simplify
from tests.unit.conftest import random_spec


class TestSpinSystem:
    """Spin counts and dimensions."""

    def test_dimensions(self):
        """System factors lead the joint space."""
        system = SpinSystem(2, 3)
        assert system.n_spins == 5
        assert system.system_dim == 4
        assert system.bath_dim == 8
        assert system.dim == 32

    @pytest.mark.parametrize("n_system, n_bath", [(0, 1), (1, -1)])
    def test_invalid(self, n_system, n_bath):
        """Need a system qubit and a non-negative bath."""
        with pytest.raises(SpinSystemError):
            SpinSystem(n_system, n_bath)


class TestHamiltonianSpec:
    """Pauli-word specs and their partition."""

    def test_kinds(self):
        """Terms are tagged by where they act."""
        spec = HamiltonianSpec.from_terms(
            [(1.0, "ZI"), (1.0, "IX"), (1.0, "XY"), (1.0, "II")]
        )
        assert spec.kinds() == [
            TermKind.SYSTEM,
            TermKind.BATH,
            TermKind.COUPLING,
            TermKind.SYSTEM,
        ]

    def test_word_normalized(self):
        """Lower-case words are accepted."""
        assert PauliTerm(1, "zx").word == "ZX"

    @pytest.mark.parametrize("word", ["", "ZQ", "A"])
    def test_invalid_word(self, word):
        """Only I, X, Y and Z."""
        with pytest.raises(PauliWordError):
            PauliTerm(1.0, word)

    def test_length_mismatch(self):
        """Words must cover every spin."""
        with pytest.raises(PauliWordError):
            HamiltonianSpec(((1.0, "ZZ"),), n_system=1, n_bath=2)

    def test_one_local(self):
        """Each coupling term touches a single system qubit."""
        assert HamiltonianSpec.from_terms([(1, "ZIX")], n_system=2).is_one_local()
        assert not HamiltonianSpec.from_terms([(1, "ZZX")], n_system=2).is_one_local()

    def test_scaled_and_without(self, zz_spec):
        """Parts can be rescaled or dropped."""
        scaled = zz_spec.scaled(TermKind.COUPLING, 2.0)
        assert scaled.terms[0].coefficient == pytest.approx(0.6)
        assert scaled.terms[1].coefficient == pytest.approx(0.5)
        assert zz_spec.without(TermKind.COUPLING).kinds() == [TermKind.BATH]

    def test_add(self, zz_spec):
        """Specs on one spin system concatenate."""
        assert len((zz_spec + zz_spec).terms) == 4
        with pytest.raises(SpinSystemError):
            zz_spec + HamiltonianSpec.from_terms([(1.0, "ZZZ")])

    def test_json(self, zz_spec):
        """Terms serialize as coefficient plus word."""
        stream = zz_spec.serialize("JSON")
        assert '"word": "ZZ"' in stream
        assert HamiltonianSpec.deserialize(stream, "JSON") == zz_spec


class TestBuildOperator:
    """Dense operators from specs."""

    def test_leading_spin(self):
        """Spin 0 is the leading tensor factor."""
        spec = HamiltonianSpec.from_terms([(1.0, "ZI")])
        np.testing.assert_allclose(build_operator(spec), np.diag([1, 1, -1, -1]))

    def test_empty(self):
        """No terms give the zero matrix."""
        spec = HamiltonianSpec((), n_system=1, n_bath=1)
        np.testing.assert_allclose(build_operator(spec), np.zeros((4, 4)))

    def test_xz(self):
        """0.5 X (x) Z entrywise."""
        spec = HamiltonianSpec.from_terms([(0.5, "XZ")])
        expected = 0.5 * np.array(
            [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]]
        )
        np.testing.assert_allclose(build_operator(spec), expected)

    def test_hermitian(self, rng):
        """Real coefficients give Hermitian operators."""
        operator = build_operator(random_spec(rng))
        np.testing.assert_allclose(operator, operator.conj().T, atol=1e-12)

    def test_wrong_system(self, zz_spec):
        """Building on another spin count fails."""
        with pytest.raises(PauliWordError):
            build_operator(zz_spec, SpinSystem(1, 2))


class TestPropagator:
    """Propagators through Hermitian eigendecomposition."""

    def test_sigma_z(self):
        """exp(-i Z pi/2) = diag(-i, i)."""
        np.testing.assert_allclose(
            propagator(PAULI_Z, np.pi / 2), np.diag([-1j, 1j]), atol=1e-15
        )

    def test_zero_time(self, rng):
        """No time, no evolution."""
        hamiltonian = build_operator(random_spec(rng))
        np.testing.assert_allclose(propagator(hamiltonian, 0.0), np.eye(8), atol=1e-14)

    def test_unitary_and_composition(self, rng):
        """U(t1 + t2) = U(t2) U(t1) and U is unitary."""
        evolver = Evolver(build_operator(random_spec(rng)))
        t1, t2 = 0.37, 1.21
        combined = evolver.propagator(t1 + t2)
        np.testing.assert_allclose(
            combined, evolver.propagator(t2) @ evolver.propagator(t1), atol=1e-10
        )
        np.testing.assert_allclose(
            combined.conj().T @ combined, np.eye(8), atol=1e-10
        )

    def test_cache(self):
        """Repeated durations return the cached matrix."""
        evolver = Evolver(PAULI_X)
        assert evolver.propagator(0.5) is evolver.propagator(0.5)

    def test_not_hermitian(self):
        """Non-Hermitian generators are rejected."""
        with pytest.raises(NotHermitianError):
            propagator(np.array([[0, 1], [0, 0]], dtype=complex), 1.0)


class TestStates:
    """Density-matrix helpers."""

    def test_product(self):
        """Product states are valid and factor correctly."""
        rho = product_state(plus_state(), maximally_mixed(2))
        validate_density_matrix(rho, 4)
        np.testing.assert_allclose(reduced_state(rho, SpinSystem(1, 1)), plus_state())

    def test_random_valid(self, rng):
        """Random states pass validation."""
        validate_density_matrix(random_density_matrix(8, rng, rank=3))

    @pytest.mark.parametrize(
        "rho, error",
        [
            (np.ones((2, 3)), ShapeError),
            (np.diag([0.5, 0.6]), InvalidStateError),
            (np.diag([1.5, -0.5]), InvalidStateError),
            (np.array([[0.5, 1], [0, 0.5]]), InvalidStateError),
        ],
    )
    def test_invalid(self, rho, error):
        """Shape, trace, positivity and hermiticity are checked."""
        with pytest.raises(error):
            validate_density_matrix(rho)


class TestScheduleSimulator:
    """Evolution through schedules."""

    def test_uncoupled_cycle_keeps_state(self, ideal_timing):
        """Without coupling a full CDD cycle leaves the system untouched."""
        spec = HamiltonianSpec.from_terms([(2e3, "IX"), (1e3, "IZ")])
        rho0 = product_state(plus_state(), maximally_mixed(2))
        for level in (1, 2, 3):
            schedule = cdd_sequence(level, ideal_timing)
            rho = run_schedule(schedule, spec, PulseModel(), rho0)
            rho_s = reduced_state(rho, spec.system)
            assert trace_distance(rho_s, plus_state()) <= 1e-10

    def test_hahn_echo(self):
        """Free, X, Free, X refocuses a static detuning."""
        timing = TimingParams(tau0_ticks=1000, tick=1e-3)
        spec = HamiltonianSpec.from_terms([(0.7, "Z")])
        schedule = simplify([EventKind.FREE, "X", EventKind.FREE, "X"], timing)
        rho = run_schedule(schedule, spec, PulseModel(), plus_state())
        assert trace_distance(rho, plus_state()) <= 1e-10

    def test_cdd_one_refocuses_zz(self):
        """CDD_1 removes static ZZ coupling while free evolution dephases."""
        timing = TimingParams(tau0_ticks=100, tick=1e-3)
        spec = HamiltonianSpec.from_terms([(0.2, "ZZ")])
        rho0 = product_state(plus_state(), maximally_mixed(2))

        cdd = cdd_sequence(1, timing)
        free = free_sequence(cdd.total_duration, timing)
        protected = reduced_state(
            run_schedule(cdd, spec, PulseModel(), rho0), spec.system
        )
        exposed = reduced_state(
            run_schedule(free, spec, PulseModel(), rho0), spec.system
        )

        assert trace_distance(protected, plus_state()) <= 1e-10
        assert trace_distance(exposed, plus_state()) > 1e-3

    def test_state_stays_valid(self, rng, experiment_timing):
        """Evolution preserves trace, hermiticity and positivity."""
        spec = random_spec(rng).scaled(TermKind.BATH, 1e3)
        rho0 = random_density_matrix(8, rng)
        rho = run_schedule(
            cdd_sequence(2, experiment_timing), spec, PulseModel.finite_width(), rho0
        )
        validate_density_matrix(rho, 8)

    def test_ideal_rejects_wide_pulses(self, zz_spec, experiment_timing):
        """Ideal pulses need zero-width timing."""
        simulator = ScheduleSimulator(zz_spec, PulseModel.ideal())
        with pytest.raises(PulseModelError):
            simulator.unitary(cdd_sequence(1, experiment_timing))

    def test_finite_zero_width_is_ideal(self, zz_spec, ideal_timing):
        """Finite pulses of zero width act as ideal rotations."""
        schedule = cdd_sequence(2, ideal_timing)
        ideal = ScheduleSimulator(zz_spec, PulseModel.ideal()).unitary(schedule)
        finite = ScheduleSimulator(zz_spec, PulseModel.finite_width()).unitary(schedule)
        np.testing.assert_allclose(finite, ideal, atol=1e-12)

    def test_narrow_pulses_converge_to_ideal(self, zz_spec):
        """Narrow finite pulses without drift match ideal pulses."""
        tau0 = 1e-3
        narrow = TimingParams.from_durations(tau0, delta=1e-6 * tau0)
        ideal = TimingParams.from_durations(tau0)
        rho0 = product_state(plus_state(), maximally_mixed(2))

        finite_model = PulseModel.finite_width(drift_during_pulse=False)
        rho_finite = run_schedule(cdd_sequence(2, narrow), zz_spec, finite_model, rho0)
        rho_ideal = run_schedule(cdd_sequence(2, ideal), zz_spec, PulseModel(), rho0)
        assert trace_distance(rho_finite, rho_ideal) <= 1e-6

    def test_finite_pulse_is_pi_rotation(self, experiment_timing):
        """A square pulse without drift is an exact pi rotation."""
        spec = HamiltonianSpec((), n_system=1, n_bath=0)
        simulator = ScheduleSimulator(spec, PulseModel.finite_width(False))
        pulse = cdd_sequence(1, experiment_timing).events[1]
        unitary = simulator.event_unitary(pulse, experiment_timing.tick)
        np.testing.assert_allclose(unitary, -1j * PAULI_X, atol=1e-12)

    @pytest.mark.parametrize("drift", [False, True])
    def test_pulse_widths_cached_separately(self, drift):
        """One simulator rotates by pi at every pulse width it sees."""
        spec = HamiltonianSpec((), n_system=1, n_bath=0)
        simulator = ScheduleSimulator(spec, PulseModel.finite_width(drift))
        for delta_ticks in (10, 40, 10):
            timing = TimingParams(tau0_ticks=100, delta_ticks=delta_ticks)
            pulse = cdd_sequence(1, timing).events[1]
            assert pulse.duration == delta_ticks
            unitary = simulator.event_unitary(pulse, timing.tick)
            np.testing.assert_allclose(unitary, -1j * PAULI_X, atol=1e-12)

    def test_shape_mismatch(self, zz_spec, ideal_timing):
        """Initial state must live on the joint space."""
        with pytest.raises(ShapeError):
            run_schedule(cdd_sequence(1, ideal_timing), zz_spec, PulseModel(), PAULI_I)

    def test_pulse_model_labels(self):
        """Labels name the model."""
        assert PulseModel.ideal().label == "ideal"
        assert PulseModel.finite_width().label == "finite"
        assert PulseModel.finite_width(False).label == "finite-nodrift"
