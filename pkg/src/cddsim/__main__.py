"""Command-line interface."""

from __future__ import annotations

import importlib.util
import logging
from importlib import metadata
from pathlib import Path
from typing import Callable

import click


COMMAND_MODULES = frozenset(
    {"sequence.py", "fit.py", "theory.py", "simulate.py", "sweep.py"}
)


class CommandLoader(click.MultiCommand):
    """Lazily load subcommands from the `commands` package.

    Only files listed in `COMMAND_MODULES` are exposed; each must define
    a module-level `cli` click command.

    Args:
        command_dir: Directory holding the command modules.
    """

    def __init__(self, command_dir: Path, *args, **kwargs):
        """Remember where the command modules live."""
        super().__init__(*args, **kwargs)
        self.command_dir = command_dir

    def list_commands(self, ctx: click.Context) -> list[str]:
        """Names of the registered subcommands, sorted."""
        found = (path.name for path in self.command_dir.glob("*.py"))
        return sorted(name[:-3] for name in found if name in COMMAND_MODULES)

    def get_command(self, ctx: click.Context, name: str) -> Callable | None:
        """Import the module behind `name` and return its command."""
        path = self.command_dir / f"{name}.py"
        if path.name not in COMMAND_MODULES:
            click.echo(f"Unknown command {name}.")
            return None

        try:
            module_spec = importlib.util.spec_from_file_location(
                f"cddsim.commands.{name}", str(path)
            )
            if module_spec is None or module_spec.loader is None:
                return None
            module = importlib.util.module_from_spec(module_spec)
            module_spec.loader.exec_module(module)
        except Exception as e:
            click.echo(f"Error loading command {name}: {e}")
            return None
        return module.cli


def package_version(default: str = "unknown") -> str:
    """Installed cddsim version, or `default` when running from a checkout."""
    try:
        return metadata.version("cddsim")
    except metadata.PackageNotFoundError:
        return default


@click.command(cls=CommandLoader, command_dir=Path(__file__).parent / "commands")
@click.version_option(package_version())
@click.option(
    "-v",
    "--verbose",
    count=True,
    help="Log at INFO (-v) or DEBUG (-vv) level.",
)
def main(verbose: int) -> None:
    """Concatenated dynamical decoupling simulator.

    Compile CDD / PDD pulse schedules, evolve a qubit coupled to a small
    spin bath under them, fit decay curves and compare against the
    analytic error bounds.
    """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
