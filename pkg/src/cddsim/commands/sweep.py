"""Pulse-interval sweep command."""

from __future__ import annotations

from pathlib import Path

from click import BOOL
from click import INT
from click import Path as PathType
from click import argument
from click import command
from click import option
from click_params import FloatListParamType

from cddsim.commands._common import abort_with_record
from cddsim.commands._common import json_print
from cddsim.exceptions import CDDSimError


@command(name="sweep")
@argument("config-path", type=PathType(exists=True, dir_okay=False, path_type=Path))
@argument("csv-path", type=PathType(dir_okay=False, path_type=Path))
@option(
    "--tau0-grid",
    required=False,
    default=None,
    help="Pulse intervals, overriding timing.tau0_grid of the configuration.",
    type=FloatListParamType(","),
)
@option(
    "--points-path",
    required=False,
    default=None,
    help="Also write the per-seed signal rows behind the fits.",
    type=PathType(dir_okay=False, path_type=Path),
)
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
def sweep(
    config_path: Path,
    csv_path: Path,
    tau0_grid: list[float] | None,
    points_path: Path | None,
    workers: int | None,
    progress: bool,
) -> None:
    """Fit decay rates of each sequence across a pulse-interval grid.

    Writes the rate table (label, tau0, rate, residual, t2, s0, j_tau0,
    beta_tau0, epsilon, error) as CSV. Failed fits keep their row with
    the error text.
    """
    from dataclasses import replace

    from cddsim.harness import ExperimentConfig
    from cddsim.harness import sweep_tau0
    from cddsim.harness.io_utils import write_csv

    try:
        config = ExperimentConfig.from_file(config_path)
        if tau0_grid:
            timing = replace(config.timing, tau0_grid=tuple(tau0_grid))
            config = config.replace(timing=timing)
        table = sweep_tau0(config, workers=workers, progress=progress)
    except CDDSimError as exc:
        abort_with_record(exc)

    write_csv(table.to_frame(), csv_path)
    if points_path is not None and table.points is not None:
        write_csv(table.points, points_path)
    json_print(dict(csv=str(csv_path), **table.summary()))


cli = sweep
