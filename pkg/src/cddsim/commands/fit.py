"""Exponential decay fitting command."""

from __future__ import annotations

from pathlib import Path

from click import Path as PathType
from click import argument
from click import command
from click import option

from cddsim.commands._common import abort_with_record
from cddsim.commands._common import json_print
from cddsim.exceptions import CDDSimError


@command(name="fit")
@argument("csv-path", type=PathType(exists=True, dir_okay=False, path_type=Path))
@option(
    "-o",
    "--output",
    required=False,
    default=None,
    help="Also write the JSON result to this file.",
    type=PathType(dir_okay=False, path_type=Path),
)
def fit(csv_path: Path, output: Path | None) -> None:
    """Fit S0 exp(-t / T2) to a two-column (time, signal) CSV.

    A header row is optional. The result is printed as JSON; a curve
    without measurable decay reports t2 as null and rate 0.
    """
    from cddsim.harness.io_utils import read_decay_csv
    from cddsim.harness.io_utils import to_json
    from cddsim.metrics import fit_exponential

    try:
        curve = read_decay_csv(csv_path)
        result = fit_exponential(curve)
    except CDDSimError as exc:
        abort_with_record(exc)

    payload = result.to_dict()
    json_print(payload)
    if output is not None:
        output.write_text(to_json(payload))


cli = fit
