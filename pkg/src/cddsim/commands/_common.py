"""Helpers shared by the CLI plugins."""

from __future__ import annotations

from typing import Any
from typing import NoReturn

import click
from click import Choice
from click import option

from cddsim.harness.io_utils import error_record
from cddsim.harness.io_utils import to_json


output_format_option = option(
    "-format",
    "--output-format",
    required=False,
    default="pretty",
    help="Output format. Pretty console or JSON.",
    type=Choice(["pretty", "json"]),
    show_default=True,
    show_choices=True,
)


def abort_with_record(exc: BaseException) -> NoReturn:
    """Print a JSON error record to stderr and exit with code 1."""
    click.echo(to_json(error_record(exc)), err=True)
    raise click.exceptions.Exit(1)


def json_print(payload: dict[str, Any]) -> None:
    """Print a payload as strict JSON."""
    click.echo(to_json(payload))


def pretty_print(title: str, payload: dict[str, Any]) -> None:
    """Print a flat payload as a two-column table."""
    from rich.console import Console
    from rich.table import Table

    table = Table(title=title, show_edge=False)
    table.add_column("Quantity", justify="right", style="cyan", no_wrap=True)
    table.add_column("Value", justify="left", style="magenta")

    for key, value in payload.items():
        text = f"{value:.6g}" if isinstance(value, float) else str(value)
        table.add_row(key, text)

    Console().print(table)
