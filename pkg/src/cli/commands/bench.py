from typing import Annotated, Optional

import typer

from src.apps.bench.services import BenchService, has_violations
from src.apps.enums import BenchSuite, TableFormat
from src.cli.exceptions import InvariantViolationExit, domain_errors_as_exits
from src.cli.files import write_text
from src.core.consts import DEFAULT_BENCH_LMAX, DEFAULT_BENCH_SEED
from src.infrastructure.rendering.renderer import render_table_csv, render_table_md


def bench(
    suite: Annotated[BenchSuite, typer.Option(help='Row set to run')] = BenchSuite.TABLE2,
    lmax: Annotated[int, typer.Option(min=1, help='Largest word length of the sweep')] = DEFAULT_BENCH_LMAX,
    table_format: Annotated[TableFormat, typer.Option('--format', help='Table format')] = TableFormat.CSV,
    seed: Annotated[int, typer.Option(help='Seed of the random operands')] = DEFAULT_BENCH_SEED,
    jobs: Annotated[Optional[int], typer.Option(min=1, help='Parameter points evaluated at once')] = None,
    density: Annotated[Optional[float], typer.Option(min=0.0, max=1.0, help='Bit density of random operands')] = None,
):
    """Check the state complexity bounds over witness families and random operands."""
    with domain_errors_as_exits():
        rows = BenchService(jobs=jobs, seed=seed, density=density).run_suite_sync(suite, lmax)

    write_text(None, render_table_md(rows) if table_format == TableFormat.MD else render_table_csv(rows))
    if has_violations(rows):
        raise InvariantViolationExit('Some bench rows violate their bounds')
