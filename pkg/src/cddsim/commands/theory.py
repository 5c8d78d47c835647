"""Analytic bounds command."""

from __future__ import annotations

from click import FLOAT
from click import INT
from click import command
from click import option

from cddsim.commands._common import abort_with_record
from cddsim.commands._common import json_print
from cddsim.commands._common import output_format_option
from cddsim.commands._common import pretty_print
from cddsim.exceptions import CDDSimError


@command(name="theory")
@option("--j", "j", required=True, help="Coupling strength J = ||H_SB||.", type=FLOAT)
@option("--beta", required=True, help="Bath strength beta = ||H_B||.", type=FLOAT)
@option("--tau0", required=True, help="Pulse interval.", type=FLOAT)
@option(
    "-n",
    "--level",
    required=False,
    default=0,
    help="Concatenation level for epsilon and the bounds.",
    type=INT,
    show_default=True,
)
@option(
    "--pulses",
    required=False,
    default=None,
    help="PDD pulse count. Defaults to 4^level.",
    type=INT,
)
@option(
    "--target",
    required=False,
    default=None,
    help="Target distance for the required level.",
    type=FLOAT,
)
@output_format_option
def theory(
    j: float,
    beta: float,
    tau0: float,
    level: int,
    pulses: int | None,
    target: float | None,
    output_format: str,
) -> None:
    """Evaluate epsilon, the CDD / PDD bounds and level selection."""
    from cddsim.theory import TheoryParams

    try:
        params = TheoryParams(j, beta, tau0, level, pulses, target)
        summary = params.summary()
    except CDDSimError as exc:
        abort_with_record(exc)

    if output_format == "pretty":
        pretty_print("CDD bounds", summary)

    if output_format == "json":
        json_print(summary)


cli = theory
