from typing import Annotated

import click
import typer
from typer.core import TyperGroup

from src.cli.commands.bench import bench
from src.cli.commands.gen import gen
from src.cli.commands.op import op
from src.cli.commands.sc import sc
from src.core.log import setup_logging


class BlocksetGroup(TyperGroup):
    """Reports click usage errors with exit code 1; code 2 belongs to length mismatches."""

    def make_context(self, *args, **kwargs) -> click.Context:
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as exc:
            exc.exit_code = 1
            raise

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = 1
            raise


def _configure(verbose: Annotated[bool, typer.Option('--verbose', '-v', help='Log at DEBUG level')] = False):
    setup_logging(verbose)


def get_app() -> typer.Typer:
    app = typer.Typer(
        name='blockset',
        cls=BlocksetGroup,
        no_args_is_help=True,
        pretty_exceptions_enable=False,
        help='State complexity of block languages.',
    )
    app.callback()(_configure)

    commands = [
        ('gen', gen),
        ('op', op),
        ('sc', sc),
        ('bench', bench),
    ]

    for name, command in commands:
        app.command(name)(command)

    return app
