from pathlib import Path
from typing import Annotated, Optional

import typer
from loguru import logger

from src.apps.automata.dto import Automaton
from src.apps.enums import EmitKind, OperationName
from src.apps.operations.dto import OpOutcome
from src.apps.operations.services import OperationService
from src.apps.synthesis.builders import min_nfa_from_bitmap
from src.cli.exceptions import EmptyLanguageExit, UsageExit, domain_errors_as_exits
from src.cli.files import read_language, write_text
from src.cli.schemas import AutomatonFileSchema, LanguageFileSchema, OpOutcomeSchema
from src.infrastructure.rendering.renderer import render_dot


def op(
    operation: Annotated[OperationName, typer.Argument(help='Operation to apply')],
    inputs: Annotated[list[Path], typer.Option('--in', exists=True, dir_okay=False, help='Operand language file')],
    word: Annotated[Optional[str], typer.Option(help='Word for add-word and remove-word')] = None,
    out: Annotated[Optional[Path], typer.Option(help='Result file to write')] = None,
    emit: Annotated[EmitKind, typer.Option(help='What --out holds')] = EmitKind.LANG,
    dot: Annotated[Optional[Path], typer.Option(help='Graphviz file of the result automaton')] = None,
    draw_dead: Annotated[bool, typer.Option('--draw-dead', help='Draw the dead state in --dot output')] = False,
    outcome: Annotated[Optional[Path], typer.Option(help='OpOutcome file, stdout if omitted')] = None,
    strict_nsc: Annotated[bool, typer.Option('--strict-nsc', help='Fail on nsc bounds as well')] = False,
):
    """Apply an operation along both routes and check the result against its bound."""
    if len(inputs) != operation.arity:
        raise UsageExit(f'{operation} takes {operation.arity} --in file(s), got {len(inputs)}')
    if operation.needs_word and word is None:
        raise UsageExit(f'{operation} needs --word')

    service = OperationService(strict_nsc=strict_nsc)
    with domain_errors_as_exits():
        operands = [read_language(path) for path in inputs]
        result = service.run_op(operation, operands, word=word)
        if out is not None:
            write_text(out, _emitted(result, emit))
        if dot is not None:
            automaton = _automaton(result, EmitKind.NFA if emit == EmitKind.NFA else EmitKind.DFA)
            write_text(dot, render_dot(automaton, draw_dead=draw_dead))

    logger.debug('{}: dsc {} against {}', operation, result.result.dsc, result.formula)
    write_text(outcome, OpOutcomeSchema.from_dto(result).model_dump_json(indent=2) + '\n')


def _emitted(result: OpOutcome, emit: EmitKind) -> str:
    if emit == EmitKind.LANG:
        if result.language is None:
            raise UsageExit(f'The result of {result.op} is not a block language; emit dfa or nfa')
        return LanguageFileSchema.from_dto(result.language).model_dump_json(indent=2) + '\n'
    return AutomatonFileSchema.from_dto(_automaton(result, emit)).model_dump_json(indent=2) + '\n'


def _automaton(result: OpOutcome, emit: EmitKind) -> Automaton:
    automaton = result.nfa if emit == EmitKind.NFA else result.dfa
    if automaton is None and emit == EmitKind.NFA and result.language is not None and not result.language.is_empty:
        automaton = min_nfa_from_bitmap(result.language)
    if automaton is None:
        raise EmptyLanguageExit(f'The result of {result.op} is empty and has no {emit.upper()}')
    return automaton
