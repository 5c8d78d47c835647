"""State-preservation metrics and decay fitting."""

from cddsim.metrics.distance import fidelity
from cddsim.metrics.distance import magnetization
from cddsim.metrics.distance import trace_distance
from cddsim.metrics.distance import trace_norm
from cddsim.metrics.fitting import DecayCurve
from cddsim.metrics.fitting import FitResult
from cddsim.metrics.fitting import fit_exponential


__all__ = [
    "DecayCurve",
    "FitResult",
    "fidelity",
    "fit_exponential",
    "magnetization",
    "trace_distance",
    "trace_norm",
]
