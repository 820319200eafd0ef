"""ffrsim CLI entrypoint."""

from __future__ import annotations

import click

from ffrsim import __version__


@click.group()
@click.version_option(version=__version__, prog_name="ffrsim")
def main() -> None:
    """ffrsim: coordinated fast frequency response simulator."""


# Register subcommands
from ffrsim.cli_commands import register_commands  # noqa: E402

register_commands(main)

if __name__ == "__main__":
    main()
