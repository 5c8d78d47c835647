"""CSV and JSON input / output for experiments and fits."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from cddsim.metrics import DecayCurve
from cddsim.metrics.exceptions import FitInputError


def write_csv(frame: pd.DataFrame, path: str | Path) -> None:
    """Write rows without the index, full float precision."""
    frame.to_csv(path, index=False, float_format="%.17g")


def read_decay_csv(path: str | Path, label: str = "") -> DecayCurve:
    """Read a two-column (time, signal) CSV into a decay curve.

    A non-numeric first row is taken as a header and skipped. Lines
    starting with ``#`` are comments.

    Raises:
        FitInputError: If the file does not hold two numeric columns.
    """
    try:
        frame = pd.read_csv(path, header=None, comment="#", skipinitialspace=True)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as exc:
        raise FitInputError(f"Cannot parse {path}: {exc}") from exc
    if frame.shape[1] != 2:
        raise FitInputError(
            f"Expected two columns (time, signal) in {path}, got {frame.shape[1]}"
        )

    numeric = frame.apply(pd.to_numeric, errors="coerce")
    if numeric.iloc[0].isna().all():
        numeric = numeric.iloc[1:]
    if numeric.isna().to_numpy().any():
        raise FitInputError(f"Non-numeric samples in {path}")

    times, signals = numeric.to_numpy(dtype=np.float64).T
    return DecayCurve(times, signals, label=label or Path(path).stem)


def json_ready(payload: Any) -> Any:
    """Replace non-finite floats by None so the payload is strict JSON."""
    if isinstance(payload, dict):
        return {key: json_ready(value) for key, value in payload.items()}
    if isinstance(payload, (list, tuple)):
        return [json_ready(value) for value in payload]
    if isinstance(payload, (float, np.floating)):
        return float(payload) if math.isfinite(payload) else None
    if isinstance(payload, np.integer):
        return int(payload)
    return payload


def to_json(payload: Any) -> str:
    """Strict JSON text of a summary payload."""
    return json.dumps(json_ready(payload), indent=2)


def error_record(exc: BaseException) -> dict[str, str]:
    """Machine-readable error record."""
    return {"error": type(exc).__name__, "message": str(exc)}
