"""Pulse-sequence compilation command."""

from __future__ import annotations

from click import FLOAT
from click import INT
from click import Choice
from click import command
from click import echo
from click import option
from click_params import StringListParamType

from cddsim.commands._common import abort_with_record
from cddsim.commands._common import json_print
from cddsim.commands._common import pretty_print
from cddsim.exceptions import CDDSimError


@command(name="sequence")
@option(
    "-kind",
    "--kind",
    required=False,
    default="cdd",
    help="Sequence family.",
    type=Choice(["cdd", "pdd"]),
    show_default=True,
    show_choices=True,
)
@option(
    "-n",
    "--level",
    required=False,
    default=1,
    help="CDD concatenation level, or PDD cycle count.",
    type=INT,
    show_default=True,
)
@option(
    "--tau0",
    required=True,
    help="Pulse interval in time units.",
    type=FLOAT,
)
@option(
    "--delta",
    required=False,
    default=0.0,
    help="Pi-pulse width in time units.",
    type=FLOAT,
    show_default=True,
)
@option(
    "--fa",
    required=False,
    default=0.0,
    help="Phase-change delay between back-to-back pulses.",
    type=FLOAT,
    show_default=True,
)
@option(
    "--tick",
    required=False,
    default=1e-9,
    help="Time-grid resolution in time units.",
    type=FLOAT,
    show_default=True,
)
@option(
    "--pair",
    required=False,
    default="Z,X",
    help="Outer and inner pulse axes of the base sequence.",
    type=StringListParamType(","),
    show_default=True,
)
@option(
    "--repeat",
    required=False,
    default=1,
    help="Number of back-to-back cycles.",
    type=INT,
    show_default=True,
)
@option(
    "-format",
    "--output-format",
    required=False,
    default="tsv",
    help="Tab-separated table plus JSON summary, or a pretty summary.",
    type=Choice(["tsv", "pretty"]),
    show_default=True,
    show_choices=True,
)
def sequence(
    kind: str,
    level: int,
    tau0: float,
    delta: float,
    fa: float,
    tick: float,
    pair: list[str],
    repeat: int,
    output_format: str,
) -> None:
    """Compile a CDD or PDD schedule.

    The tab-separated table lists start_time, kind, axis and duration of
    every event in execution order. A JSON summary follows it.
    """
    from cddsim.sequence import TimingParams
    from cddsim.sequence import cdd_sequence
    from cddsim.sequence import pdd_sequence
    from cddsim.sequence import repeat_sequence

    try:
        timing = TimingParams.from_durations(tau0, delta, fa, tick)
        if kind == "cdd":
            schedule = cdd_sequence(level, timing, pair)
        else:
            schedule = pdd_sequence(level, timing, pair)
        schedule = repeat_sequence(schedule, repeat)
    except (CDDSimError, ValueError) as exc:
        abort_with_record(exc)

    if output_format == "pretty":
        pretty_print(f"Schedule {schedule.label}", schedule.summary())
        return

    columns = ["start_time", "kind", "axis", "duration"]
    echo("\t".join(columns))
    for row in schedule.to_rows():
        echo("\t".join(str(row[column]) for column in columns))
    json_print(schedule.summary())


cli = sequence
