"""Joint system-bath Hamiltonians, propagators and schedule evolution."""

from cddsim.dynamics.analysis import HamiltonianParts
from cddsim.dynamics.analysis import decompose_hamiltonian
from cddsim.dynamics.analysis import effective_coupling_norm
from cddsim.dynamics.analysis import effective_hamiltonian
from cddsim.dynamics.analysis import reduced_state
from cddsim.dynamics.propagation import Evolver
from cddsim.dynamics.propagation import PulseMode
from cddsim.dynamics.propagation import PulseModel
from cddsim.dynamics.propagation import ScheduleSimulator
from cddsim.dynamics.propagation import propagator
from cddsim.dynamics.propagation import run_schedule
from cddsim.dynamics.spins import HamiltonianSpec
from cddsim.dynamics.spins import PauliTerm
from cddsim.dynamics.spins import SpinSystem
from cddsim.dynamics.spins import TermKind
from cddsim.dynamics.spins import build_operator
from cddsim.dynamics.states import maximally_mixed
from cddsim.dynamics.states import plus_state
from cddsim.dynamics.states import product_state
from cddsim.dynamics.states import pure_state
from cddsim.dynamics.states import random_density_matrix
from cddsim.dynamics.states import random_pure_state
from cddsim.dynamics.states import validate_density_matrix


__all__ = [
    "Evolver",
    "HamiltonianParts",
    "HamiltonianSpec",
    "PauliTerm",
    "PulseMode",
    "PulseModel",
    "ScheduleSimulator",
    "SpinSystem",
    "TermKind",
    "build_operator",
    "decompose_hamiltonian",
    "effective_coupling_norm",
    "effective_hamiltonian",
    "maximally_mixed",
    "plus_state",
    "product_state",
    "propagator",
    "pure_state",
    "random_density_matrix",
    "random_pure_state",
    "reduced_state",
    "run_schedule",
    "validate_density_matrix",
]
