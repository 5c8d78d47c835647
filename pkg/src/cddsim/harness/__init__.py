"""Experiment configuration, bath synthesis, runs and sweeps."""

from cddsim.harness.baths import make_bath
from cddsim.harness.config import BathConfig
from cddsim.harness.config import ExperimentConfig
from cddsim.harness.config import PulseModelConfig
from cddsim.harness.config import SequenceConfig
from cddsim.harness.config import TimingConfig
from cddsim.harness.config import num_workers
from cddsim.harness.experiment import ExperimentResult
from cddsim.harness.experiment import RateRow
from cddsim.harness.experiment import RateTable
from cddsim.harness.experiment import run_experiment
from cddsim.harness.experiment import sweep_tau0


__all__ = [
    "BathConfig",
    "ExperimentConfig",
    "ExperimentResult",
    "PulseModelConfig",
    "RateRow",
    "RateTable",
    "SequenceConfig",
    "TimingConfig",
    "make_bath",
    "num_workers",
    "run_experiment",
    "sweep_tau0",
]
