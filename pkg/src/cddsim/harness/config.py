"""Experiment configuration tree and its YAML / JSON (de)serialization.

Every field has a default, so an empty file is a valid configuration::

    bath:
      n_bath: 4            # bath spins
      n_system: 1          # system qubits
      seed: 0              # first bath seed
      n_seeds: 10          # signals are averaged over seeds
      beta: 100.0          # ||H_B||, angular frequency per time unit
      j: 10.0              # ||H_SB||
      structure: pairwise  # pairwise | chain | dipolar
      coupling_axes: XYZ   # XYZ | Z
      initial_state: mixed # mixed | random_pure
    timing:
      tau0: 1.5e-05        # pulse interval, time units
      delta: 0.0           # pi-pulse width
      fa: 0.0              # phase-change delay
      tick: 1.0e-09        # time-grid resolution
      tau0_grid: []        # pulse intervals of a sweep
    sequences:
      levels: [0, 1, 2, 3] # CDD levels of a run
      pdd: true            # PDD at matched total time
      free: true           # free evolution baseline
      pair: [Z, X]         # (outer, inner) pulse axes
      sweep_levels: [1, 2, 3]
      cycles: [1, 2, 3, 4, 6, 8]
    pulse_model:
      mode: ideal          # ideal | finite_width
      drift_during_pulse: true
"""

from __future__ import annotations

import dataclasses
import inspect
import json
import logging
import os
from dataclasses import dataclass
from dataclasses import field
from pathlib import Path
from typing import Any

import yaml
from psutil import cpu_count

from cddsim.core.serialization import Serializer
from cddsim.dynamics import PulseMode
from cddsim.dynamics import PulseModel
from cddsim.exceptions import EnvironmentFormatError
from cddsim.harness.exceptions import ConfigError
from cddsim.sequence import TimingParams
from cddsim.sequence.exceptions import TimingError


logger = logging.getLogger(__name__)

BATH_STRUCTURES = ("pairwise", "chain", "dipolar")
COUPLING_AXES = ("XYZ", "Z")
BATH_STATES = ("mixed", "random_pure")


def num_workers() -> int:
    """Worker-pool size, overridable with `CDDSIM__HARNESS__CPU_COUNT`."""
    default_cpus = cpu_count(logical=True) or 1
    value = os.getenv("CDDSIM__HARNESS__CPU_COUNT", default_cpus)
    try:
        workers = int(value)
    except ValueError:
        raise EnvironmentFormatError("CDDSIM__HARNESS__CPU_COUNT", "int") from None

    if workers < 1:
        raise EnvironmentFormatError(
            "CDDSIM__HARNESS__CPU_COUNT", "int", "Must be a positive integer."
        )
    return workers


def _section(cls: type, payload: dict[str, Any] | None, name: str) -> Any:
    """Build one config section, warning about keys it does not know."""
    payload = {} if payload is None else payload
    if not isinstance(payload, dict):
        raise ConfigError(f"Section '{name}' must be a mapping, got {payload!r}")

    known = {f.name for f in dataclasses.fields(cls)}
    extra = set(payload) - known
    if extra:
        logger.warning(f"Ignoring unknown keys in '{name}': {sorted(extra)}")

    kwargs = {key: value for key, value in payload.items() if key in known}
    for key, value in kwargs.items():
        if isinstance(value, list):
            kwargs[key] = tuple(value)

    try:
        return cls(**kwargs)
    except TypeError as exc:
        raise ConfigError(f"Invalid section '{name}': {exc}") from exc


@dataclass(frozen=True)
class BathConfig:
    """Synthetic spin bath and its initial state."""

    n_bath: int = 4
    n_system: int = 1
    seed: int = 0
    n_seeds: int = 10
    beta: float = 100.0
    j: float = 10.0
    structure: str = "pairwise"
    coupling_axes: str = "XYZ"
    initial_state: str = "mixed"

    def __post_init__(self) -> None:
        """Validate ranges and choices."""
        if self.n_bath < 1 or self.n_system < 1:
            raise ConfigError("Need at least one system qubit and one bath spin")
        if self.n_seeds < 1:
            raise ConfigError(f"n_seeds must be >= 1, got {self.n_seeds}")
        if self.beta < 0 or self.j < 0:
            raise ConfigError("Bath strengths beta and j must be >= 0")
        if self.structure not in BATH_STRUCTURES:
            raise ConfigError(f"structure must be one of {BATH_STRUCTURES}")
        if self.coupling_axes not in COUPLING_AXES:
            raise ConfigError(f"coupling_axes must be one of {COUPLING_AXES}")
        if self.initial_state not in BATH_STATES:
            raise ConfigError(f"initial_state must be one of {BATH_STATES}")

    @property
    def seeds(self) -> range:
        """Bath seeds averaged over."""
        return range(self.seed, self.seed + self.n_seeds)


@dataclass(frozen=True)
class TimingConfig:
    """Pulse interval (or sweep grid) and hardware delays, in time units."""

    tau0: float = 15e-6
    delta: float = 0.0
    fa: float = 0.0
    tick: float = 1e-9
    tau0_grid: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        """Validate by building the timing once per interval."""
        for tau0 in (self.tau0, *self.tau0_grid):
            self.params(tau0)

    def params(self, tau0: float | None = None) -> TimingParams:
        """Tick-based timing for one pulse interval."""
        tau0 = self.tau0 if tau0 is None else tau0
        try:
            return TimingParams.from_durations(tau0, self.delta, self.fa, self.tick)
        except TimingError as exc:
            raise ConfigError(f"Invalid timing: {exc}") from exc


@dataclass(frozen=True)
class SequenceConfig:
    """Which sequences an experiment or sweep records."""

    levels: tuple[int, ...] = (0, 1, 2, 3)
    pdd: bool = True
    free: bool = True
    pair: tuple[str, str] = ("Z", "X")
    sweep_levels: tuple[int, ...] = (1, 2, 3)
    cycles: tuple[int, ...] = (1, 2, 3, 4, 6, 8)

    def __post_init__(self) -> None:
        """Validate levels, cycle counts and the base pair."""
        if not self.levels or min(self.levels) < 0:
            raise ConfigError(f"levels must be non-empty and >= 0, got {self.levels}")
        if self.sweep_levels and min(self.sweep_levels) < 1:
            raise ConfigError(f"sweep_levels must be >= 1, got {self.sweep_levels}")
        if len(set(self.cycles)) < 3 or min(self.cycles) < 1:
            raise ConfigError(
                f"cycles needs at least three distinct counts >= 1, got {self.cycles}"
            )
        pair = tuple(str(axis).upper() for axis in self.pair)
        if len(pair) != 2 or pair[0] == pair[1] or set(pair) - {"X", "Y", "Z"}:
            raise ConfigError(f"pair must be two distinct axes, got {self.pair}")

        object.__setattr__(self, "levels", tuple(sorted(set(self.levels))))
        object.__setattr__(self, "sweep_levels", tuple(sorted(set(self.sweep_levels))))
        object.__setattr__(self, "cycles", tuple(sorted(set(self.cycles))))
        object.__setattr__(self, "pair", pair)


@dataclass(frozen=True)
class PulseModelConfig:
    """Pulse model selection."""

    mode: str = "ideal"
    drift_during_pulse: bool = True

    def __post_init__(self) -> None:
        """Validate the mode name."""
        try:
            PulseMode(self.mode)
        except ValueError:
            modes = [mode.value for mode in PulseMode]
            raise ConfigError(f"mode must be one of {modes}, got {self.mode}") from None

    def model(self) -> PulseModel:
        """Pulse model object."""
        return PulseModel(PulseMode(self.mode), self.drift_during_pulse)


@dataclass(frozen=True)
class ExperimentConfig:
    """Complete description of a simulated experiment.

    Args:
        bath: Bath synthesis and initial bath state.
        timing: Pulse interval, delays and sweep grid.
        sequences: Sequences to record.
        pulse_model: Ideal or finite-width pulses.
        initial_state: Initial system state, ``plus`` or ``plus_y``.
    """

    bath: BathConfig = field(default_factory=BathConfig)
    timing: TimingConfig = field(default_factory=TimingConfig)
    sequences: SequenceConfig = field(default_factory=SequenceConfig)
    pulse_model: PulseModelConfig = field(default_factory=PulseModelConfig)
    initial_state: str = "plus"

    def __post_init__(self) -> None:
        """Validate the system state name."""
        if self.initial_state not in ("plus", "plus_y"):
            raise ConfigError(
                f"initial_state must be 'plus' or 'plus_y', got {self.initial_state}"
            )

    def replace(self, **sections: Any) -> ExperimentConfig:
        """Copy with whole sections swapped."""
        return dataclasses.replace(self, **sections)

    def to_dict(self) -> dict[str, Any]:
        """Convert config to a plain dictionary."""
        payload = dataclasses.asdict(self)
        for section in payload.values():
            if isinstance(section, dict):
                for key, value in section.items():
                    if isinstance(value, tuple):
                        section[key] = list(value)
        return payload

    @classmethod
    def from_dict(cls, other: dict[str, Any] | None) -> ExperimentConfig:
        """Make config from dictionary."""
        other = {} if other is None else other
        if not isinstance(other, dict):
            raise ConfigError(f"Configuration must be a mapping, got {other!r}")

        sections = dict(
            bath=BathConfig,
            timing=TimingConfig,
            sequences=SequenceConfig,
            pulse_model=PulseModelConfig,
        )
        extra = set(other) - set(sections) - {"initial_state"}
        if extra:
            logger.warning(f"Ignoring unknown top-level keys: {sorted(extra)}")

        kwargs = {
            name: _section(section, other.get(name), name)
            for name, section in sections.items()
        }
        return cls(**kwargs, initial_state=other.get("initial_state", "plus"))

    def serialize(self, stream_format: str = "YAML") -> str:
        """Serialize the config into buffer."""
        serializer = ExperimentConfigSerializer(stream_format)
        return serializer.serialize(self)

    @classmethod
    def deserialize(cls, stream: str, stream_format: str = "YAML") -> ExperimentConfig:
        """Deserialize buffer into a config."""
        serializer = ExperimentConfigSerializer(stream_format)
        return serializer.deserialize(stream)

    @classmethod
    def from_file(cls, path: str | Path) -> ExperimentConfig:
        """Read a YAML (or ``.json``) configuration file."""
        path = Path(path)
        stream_format = "JSON" if path.suffix.lower() == ".json" else "YAML"
        return cls.deserialize(path.read_text(), stream_format)


class ExperimentConfigSerializer(Serializer):
    """Serializer implementation for ExperimentConfig."""

    def serialize(self, config: ExperimentConfig) -> str:
        """Serialize ExperimentConfig into buffer."""
        return self.serialize_func(config.to_dict())

    def deserialize(self, stream: str) -> ExperimentConfig:
        """Deserialize buffer into ExperimentConfig."""
        signature = inspect.signature(ExperimentConfig)

        try:
            payload = self.deserialize_func(stream) or {}
        except (yaml.YAMLError, json.JSONDecodeError) as exc:
            raise ConfigError(f"Malformed configuration: {exc}") from exc
        if not isinstance(payload, dict):
            raise ConfigError(f"Configuration must be a mapping, got {payload!r}")
        payload = self.validate_payload(payload, signature, strict=False)

        return ExperimentConfig.from_dict(payload)
