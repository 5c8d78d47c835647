"""Test configuration before everything runs."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from cddsim.harness import BathConfig
from cddsim.harness import ExperimentConfig
from cddsim.harness import SequenceConfig
from cddsim.harness import TimingConfig
from cddsim.sequence import TimingParams


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded random generator."""
    return np.random.default_rng(1234)


@pytest.fixture
def experiment_timing() -> TimingParams:
    """15 us interval, 10.52 us pulses, 376 ns phase-change delay on a 1 ns grid."""
    return TimingParams(tau0_ticks=15_000, delta_ticks=10_520, fa_ticks=376)


@pytest.fixture
def ideal_timing() -> TimingParams:
    """Zero-width pulses, 15 us interval."""
    return TimingParams(tau0_ticks=15_000)


@pytest.fixture
def small_config() -> ExperimentConfig:
    """Two-spin bath, two seeds, CDD up to level 2."""
    return ExperimentConfig(
        bath=BathConfig(n_bath=2, n_seeds=2, beta=1.0, j=0.1),
        timing=TimingConfig(tau0=5e-3, tick=1e-6, tau0_grid=(2e-3, 5e-3)),
        sequences=SequenceConfig(
            levels=(0, 1, 2), sweep_levels=(1, 2), cycles=(1, 2, 3)
        ),
    )


@pytest.fixture
def config_path(tmp_path: Path, small_config: ExperimentConfig) -> Path:
    """YAML file of the small configuration."""
    path = tmp_path / "experiment.yaml"
    path.write_text(small_config.serialize())
    return path
