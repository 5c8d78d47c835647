"""cddsim library."""

from importlib import metadata

from cddsim.dynamics import HamiltonianSpec
from cddsim.dynamics import PulseModel
from cddsim.dynamics import SpinSystem
from cddsim.dynamics import effective_coupling_norm
from cddsim.dynamics import run_schedule
from cddsim.harness import ExperimentConfig
from cddsim.harness import make_bath
from cddsim.harness import run_experiment
from cddsim.harness import sweep_tau0
from cddsim.metrics import fidelity
from cddsim.metrics import fit_exponential
from cddsim.metrics import magnetization
from cddsim.metrics import trace_distance
from cddsim.sequence import TimingParams
from cddsim.sequence import cdd_sequence
from cddsim.sequence import pdd_sequence
from cddsim.theory import cdd_bound
from cddsim.theory import epsilon
from cddsim.theory import optimal_level
from cddsim.theory import pdd_bound
from cddsim.theory import required_level


__all__ = [
    "ExperimentConfig",
    "HamiltonianSpec",
    "PulseModel",
    "SpinSystem",
    "TimingParams",
    "cdd_bound",
    "cdd_sequence",
    "effective_coupling_norm",
    "epsilon",
    "fidelity",
    "fit_exponential",
    "magnetization",
    "make_bath",
    "optimal_level",
    "pdd_bound",
    "pdd_sequence",
    "required_level",
    "run_experiment",
    "run_schedule",
    "sweep_tau0",
    "trace_distance",
]


try:
    __version__ = metadata.version("cddsim")
except metadata.PackageNotFoundError:
    __version__ = "unknown"
