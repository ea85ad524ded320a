from pathlib import Path
from typing import Annotated

import typer

from src.apps.enums import ReportFormat
from src.apps.synthesis.services import ComplexityService
from src.cli.exceptions import domain_errors_as_exits
from src.cli.files import read_language, write_text
from src.cli.schemas import ComplexityReportSchema
from src.infrastructure.rendering.renderer import render_report_md


def sc(
    path: Annotated[Path, typer.Option('--in', exists=True, dir_okay=False, help='Language or ranked automaton file')],
    report_format: Annotated[ReportFormat, typer.Option('--format', help='Report format')] = ReportFormat.JSON,
):
    """Measure the deterministic and nondeterministic state complexity of a language."""
    with domain_errors_as_exits():
        report = ComplexityService().measure(read_language(path))

    if report_format == ReportFormat.MD:
        write_text(None, render_report_md(report))
    else:
        write_text(None, ComplexityReportSchema.from_dto(report).model_dump_json(indent=2) + '\n')
