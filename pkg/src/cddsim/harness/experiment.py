"""Decay-curve experiments and pulse-interval sweeps.

Grid points are grouped into tasks of one bath seed and one pulse
interval, evolved in a worker pool and merged back in task order, so the
output does not depend on the worker count.
"""

from __future__ import annotations

import logging
import math
import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Sequence

import numpy as np
import pandas as pd
from tqdm.auto import tqdm

from cddsim.dynamics import HamiltonianSpec
from cddsim.exceptions import CDDSimError
from cddsim.harness._workers import PointResult
from cddsim.harness._workers import SimulationTask
from cddsim.harness._workers import signal_worker
from cddsim.harness.baths import make_bath
from cddsim.harness.config import ExperimentConfig
from cddsim.harness.config import num_workers
from cddsim.harness.exceptions import ConfigError
from cddsim.metrics import DecayCurve
from cddsim.metrics import FitResult
from cddsim.metrics import fit_exponential
from cddsim.sequence import Schedule
from cddsim.sequence import TimingParams
from cddsim.sequence import cdd_sequence
from cddsim.sequence import free_sequence
from cddsim.sequence import pdd_sequence
from cddsim.sequence import repeat_sequence
from cddsim.theory import epsilon


logger = logging.getLogger(__name__)

POINT_COLUMNS = [
    "label",
    "tau0",
    "total_time",
    "signal",
    "seed",
    "distance",
    "j_tau0",
    "beta_tau0",
    "epsilon",
]


def sequence_family(label: str) -> str:
    """``CDD``, ``PDD`` or ``FREE`` from a schedule label."""
    return label.split("_")[0]


def cycle_label(label: str) -> str:
    """Label of the repeated cycle, e.g. ``CDD_2`` for ``CDD_2x4``."""
    return label.split("x")[0]


def _threshold_level(label: str) -> int:
    """Level entering epsilon: the CDD level, 1 for PDD, 0 for free evolution."""
    family, _, rest = cycle_label(label).partition("_")
    if family == "CDD":
        return int(rest)
    return 1 if family == "PDD" else 0


def bath_spec(cfg: ExperimentConfig, seed: int) -> HamiltonianSpec:
    """Bath Hamiltonian of one seed."""
    bath = cfg.bath
    return make_bath(
        bath.n_bath,
        seed,
        bath.beta,
        bath.j,
        n_system=bath.n_system,
        structure=bath.structure,
        coupling_axes=bath.coupling_axes,
    )


def _execute(
    tasks: Sequence[SimulationTask],
    workers: int | None = None,
    progress: bool = False,
    desc: str = "Simulating",
) -> list[PointResult]:
    """Run tasks in a spawn-context process pool and flatten in task order."""
    workers = num_workers() if workers is None else workers
    workers = max(1, min(workers, len(tasks)))
    logger.info(f"{desc}: {len(tasks)} tasks on {workers} workers")

    tqdm_kw = dict(unit="task", dynamic_ncols=True, total=len(tasks), desc=desc)
    if workers == 1:
        lazy_work = map(signal_worker, tasks)
        if progress is True:
            lazy_work = tqdm(iterable=lazy_work, **tqdm_kw)
        batches = list(lazy_work)
    else:
        context = mp.get_context("spawn")
        executor = ProcessPoolExecutor(max_workers=workers, mp_context=context)
        with executor:
            lazy_work = executor.map(signal_worker, tasks)
            if progress is True:
                lazy_work = tqdm(iterable=lazy_work, **tqdm_kw)

            # This executes the lazy work.
            batches = list(lazy_work)

    return [point for batch in batches for point in batch]


def _points_frame(points: Sequence[PointResult], cfg: ExperimentConfig) -> pd.DataFrame:
    """Per-seed rows with the dimensionless audit columns."""
    records = []
    for point in points:
        level = _threshold_level(point.label)
        records.append(
            dict(
                label=point.label,
                tau0=point.tau0,
                total_time=point.total_time,
                signal=point.signal,
                seed=point.seed,
                distance=point.distance,
                j_tau0=cfg.bath.j * point.tau0,
                beta_tau0=cfg.bath.beta * point.tau0,
                epsilon=epsilon(cfg.bath.beta, point.tau0, level),
            )
        )
    return pd.DataFrame.from_records(records, columns=POINT_COLUMNS)


def _seed_mean(frame: pd.DataFrame, keys: list[str]) -> pd.DataFrame:
    """Average signals and distances over bath seeds.

    Every seed shares the schedule, so its total time is taken as is.
    """
    aggregation = {"total_time": "first", "signal": "mean", "distance": "mean"}
    return frame.groupby(keys, sort=False).agg(aggregation).reset_index()


def _tasks(
    cfg: ExperimentConfig,
    timing: TimingParams,
    schedules: Sequence[Schedule],
    specs: dict[int, HamiltonianSpec],
) -> list[SimulationTask]:
    model = cfg.pulse_model.model()
    return [
        SimulationTask(
            spec=specs[seed],
            pulse_model=model,
            schedules=tuple(schedules),
            tau0=timing.tau0,
            seed=seed,
            system_state=cfg.initial_state,
            bath_state=cfg.bath.initial_state,
        )
        for seed in cfg.bath.seeds
    ]


@dataclass
class ExperimentResult:
    """Signals of one experiment.

    Args:
        frame: One row per (schedule, seed).
        curves: Seed-averaged decay curve per sequence family.
    """

    frame: pd.DataFrame
    curves: dict[str, DecayCurve]

    def mean_frame(self) -> pd.DataFrame:
        """Seed-averaged row per schedule label."""
        return _seed_mean(self.frame, ["label"])

    def mean_signal(self, label: str) -> float:
        """Seed-averaged signal of one schedule label."""
        rows = self.frame[self.frame["label"] == label]
        if rows.empty:
            raise KeyError(label)
        return float(rows["signal"].mean())

    def summary(self) -> dict[str, Any]:
        """JSON-ready summary."""
        means = self.mean_frame()
        return dict(
            n_rows=len(self.frame),
            seeds=sorted(set(self.frame["seed"].tolist())),
            signals={
                row.label: dict(
                    total_time=row.total_time,
                    signal=row.signal,
                    distance=row.distance,
                )
                for row in means.itertuples()
            },
        )


def run_experiment(
    cfg: ExperimentConfig,
    workers: int | None = None,
    progress: bool = False,
) -> ExperimentResult:
    """Signal decay of CDD, matched PDD and free evolution.

    CDD levels give geometrically spaced total times ``4^n tau0``. PDD runs
    ``4^(n-1)`` cycles so it matches the total time of CDD level ``n``.
    Free evolution is sampled on the CDD time grid.

    Args:
        cfg: Experiment configuration.
        workers: Worker processes. Defaults to `num_workers`.
        progress: Show a progress bar.

    Returns:
        Per-seed signal rows and seed-averaged curves keyed by family.

    Raises:
        ExperimentError: If a grid point fails, naming sequence and tau0.
        ScheduleSizeError: If a schedule exceeds the size limit.
    """
    timing = cfg.timing.params()
    seq = cfg.sequences

    cdd = [cdd_sequence(n, timing, seq.pair) for n in seq.levels]
    schedules = list(cdd)
    if seq.pdd:
        levels = [n for n in seq.levels if n >= 1]
        schedules += [pdd_sequence(4 ** (n - 1), timing, seq.pair) for n in levels]
    if seq.free:
        schedules += [
            free_sequence(s.total_duration, timing, label=f"FREE_{n}")
            for n, s in zip(seq.levels, cdd)  # noqa: B905
        ]

    specs = {seed: bath_spec(cfg, seed) for seed in cfg.bath.seeds}
    points = _execute(
        _tasks(cfg, timing, schedules, specs),
        workers,
        progress,
        desc=f"Simulating {len(schedules)} schedules",
    )

    frame = _points_frame(points, cfg)
    means = _seed_mean(frame, ["label"])
    means["family"] = means["label"].map(sequence_family)

    curves = {}
    for family, group in means.groupby("family", sort=False):
        group = group.sort_values("total_time")
        curves[family] = DecayCurve(
            group["total_time"].to_numpy(),
            group["signal"].to_numpy(),
            label=family,
            tau0=timing.tau0,
            pulse_model=cfg.pulse_model.model().label,
        )

    return ExperimentResult(frame=frame, curves=curves)


@dataclass(frozen=True)
class RateRow:
    """Fitted decay rate of one (sequence, tau0) pair.

    A failed fit keeps its row with NaN values and the error text.
    """

    label: str
    tau0: float
    rate: float
    residual: float
    t2: float
    s0: float
    j_tau0: float
    beta_tau0: float
    epsilon: float
    error: str | None = None


@dataclass
class RateTable:
    """Decay rate against pulse interval, one row per (sequence, tau0).

    Args:
        rows: Rate rows in (tau0, sequence) order.
        curves: Fitted decay curves keyed by (label, tau0).
        points: Per-seed signal rows behind the curves.
    """

    rows: list[RateRow]
    curves: dict[tuple[str, float], DecayCurve] = field(default_factory=dict)
    points: pd.DataFrame | None = None

    @property
    def labels(self) -> list[str]:
        """Sequence labels in first-seen order."""
        return list(dict.fromkeys(row.label for row in self.rows))

    @property
    def tau0s(self) -> list[float]:
        """Pulse intervals in grid order."""
        return list(dict.fromkeys(row.tau0 for row in self.rows))

    def rates(self, label: str) -> list[float]:
        """Rates of one sequence across the tau0 grid."""
        return [row.rate for row in self.rows if row.label == label]

    def rate(self, label: str, tau0: float) -> float:
        """Rate of one (sequence, tau0) pair."""
        for row in self.rows:
            if row.label == label and math.isclose(row.tau0, tau0, rel_tol=1e-9):
                return row.rate
        raise KeyError((label, tau0))

    def to_frame(self) -> pd.DataFrame:
        """Rows as a DataFrame; infinite T2 is left empty."""
        frame = pd.DataFrame.from_records(
            [row.__dict__ for row in self.rows],
            columns=list(RateRow.__dataclass_fields__),
        )
        frame["t2"] = frame["t2"].replace(np.inf, np.nan)
        return frame

    def summary(self) -> dict[str, Any]:
        """JSON-ready summary."""
        return dict(
            labels=self.labels,
            tau0=self.tau0s,
            failed=[
                dict(label=row.label, tau0=row.tau0, error=row.error)
                for row in self.rows
                if row.error is not None
            ],
        )


def _rate_row(curve: DecayCurve, cfg: ExperimentConfig) -> RateRow:
    tau0 = float(curve.tau0)
    audit = dict(
        j_tau0=cfg.bath.j * tau0,
        beta_tau0=cfg.bath.beta * tau0,
        epsilon=epsilon(cfg.bath.beta, tau0, _threshold_level(curve.label)),
    )
    try:
        fit: FitResult = fit_exponential(curve)
    except CDDSimError as exc:
        logger.warning(f"Fit of {curve.label} at tau0={tau0:g} failed: {exc}")
        nan = float("nan")
        return RateRow(curve.label, tau0, nan, nan, nan, nan, **audit, error=str(exc))

    return RateRow(
        curve.label, tau0, fit.rate, fit.residual, fit.t2, fit.s0, **audit
    )


def sweep_tau0(
    cfg: ExperimentConfig,
    workers: int | None = None,
    progress: bool = False,
) -> RateTable:
    """Decay rate of each sequence across the pulse-interval grid.

    For every tau0 the decay curve of a sequence is built from its cycle
    repeated `cfg.sequences.cycles` times and fitted with
    `fit_exponential`. PDD runs matched to the highest swept CDD level.
    Fit failures are recorded in their row and do not stop the sweep.

    Args:
        cfg: Configuration with a non-empty `timing.tau0_grid`.
        workers: Worker processes. Defaults to `num_workers`.
        progress: Show a progress bar.

    Returns:
        Rate table with one row per (sequence, tau0).

    Raises:
        ConfigError: If the grid or the swept levels are empty.
        ExperimentError: If a grid point fails to simulate.
    """
    seq = cfg.sequences
    if not cfg.timing.tau0_grid:
        raise ConfigError("A sweep needs a non-empty timing.tau0_grid")
    if not seq.sweep_levels:
        raise ConfigError("A sweep needs at least one entry in sequences.sweep_levels")

    specs = {seed: bath_spec(cfg, seed) for seed in cfg.bath.seeds}

    tasks = []
    for tau0 in cfg.timing.tau0_grid:
        timing = cfg.timing.params(tau0)
        cycles = [cdd_sequence(n, timing, seq.pair) for n in seq.sweep_levels]
        if seq.pdd:
            k = 4 ** (max(seq.sweep_levels) - 1)
            cycles.append(pdd_sequence(k, timing, seq.pair))

        schedules = [repeat_sequence(c, m) for c in cycles for m in seq.cycles]
        tasks += _tasks(cfg, timing, schedules, specs)

    points = _execute(tasks, workers, progress, desc="Sweeping tau0")
    frame = _points_frame(points, cfg)
    frame["sequence"] = frame["label"].map(cycle_label)
    means = _seed_mean(frame, ["tau0", "sequence", "label"])

    model_label = cfg.pulse_model.model().label
    rows, curves = [], {}
    for (tau0, label), group in means.groupby(["tau0", "sequence"], sort=False):
        group = group.sort_values("total_time")
        curve = DecayCurve(
            group["total_time"].to_numpy(),
            group["signal"].to_numpy(),
            label=label,
            tau0=tau0,
            pulse_model=model_label,
        )
        curves[(label, tau0)] = curve
        rows.append(_rate_row(curve, cfg))

    return RateTable(rows=rows, curves=curves, points=frame.drop(columns="sequence"))
