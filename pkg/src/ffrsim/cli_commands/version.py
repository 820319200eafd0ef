"""``ffrsim version``."""

from __future__ import annotations

import click

from ffrsim import __version__


@click.command()
def version() -> None:
    """Print the ffrsim version."""
    click.echo(f"ffrsim {__version__}")
