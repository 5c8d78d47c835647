"""Analytic CDD / PDD bounds and concatenation-level selection."""

from cddsim.theory.bounds import Regime
from cddsim.theory.bounds import TheoryParams
from cddsim.theory.bounds import cdd_bound
from cddsim.theory.bounds import epsilon
from cddsim.theory.bounds import hamiltonian_strengths
from cddsim.theory.bounds import max_tau0
from cddsim.theory.bounds import optimal_bound
from cddsim.theory.bounds import optimal_level
from cddsim.theory.bounds import pdd_bound
from cddsim.theory.bounds import regime
from cddsim.theory.bounds import required_level
from cddsim.theory.bounds import required_level_continuous


__all__ = [
    "Regime",
    "TheoryParams",
    "cdd_bound",
    "epsilon",
    "hamiltonian_strengths",
    "max_tau0",
    "optimal_bound",
    "optimal_level",
    "pdd_bound",
    "regime",
    "required_level",
    "required_level_continuous",
]
