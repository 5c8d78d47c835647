"""Decay-curve experiment command."""

from __future__ import annotations

from pathlib import Path

from click import BOOL
from click import INT
from click import Path as PathType
from click import argument
from click import command
from click import option

from cddsim.commands._common import abort_with_record
from cddsim.commands._common import json_print
from cddsim.exceptions import CDDSimError


@command(name="simulate")
@argument("config-path", type=PathType(exists=True, dir_okay=False, path_type=Path))
@argument("csv-path", type=PathType(dir_okay=False, path_type=Path))
@option(
    "-w",
    "--workers",
    required=False,
    default=None,
    help="Worker processes. Defaults to CDDSIM__HARNESS__CPU_COUNT or all CPUs.",
    type=INT,
)
@option(
    "--progress",
    required=False,
    default=False,
    help="Show a progress bar.",
    type=BOOL,
    show_default=True,
)
def simulate(
    config_path: Path,
    csv_path: Path,
    workers: int | None,
    progress: bool,
) -> None:
    """Simulate CDD, matched PDD and free decay from a YAML configuration.

    Writes one CSV row per (schedule, seed) with columns label, tau0,
    total_time, signal, seed, distance, j_tau0, beta_tau0 and epsilon,
    then prints a JSON summary of the seed-averaged signals.
    """
    from cddsim.harness import ExperimentConfig
    from cddsim.harness import run_experiment
    from cddsim.harness.io_utils import write_csv

    try:
        config = ExperimentConfig.from_file(config_path)
        result = run_experiment(config, workers=workers, progress=progress)
    except CDDSimError as exc:
        abort_with_record(exc)

    write_csv(result.frame, csv_path)
    json_print(dict(csv=str(csv_path), **result.summary()))


cli = simulate
