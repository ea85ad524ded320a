from contextlib import contextmanager
from typing import Iterator

import typer

from src.apps.automata.errors import MultipleFinalsError, NotRankedError, NotTrimError
from src.apps.bench.errors import UnknownSuiteError
from src.apps.bitmaps.errors import (
    BitmapOverflowError,
    EmptyLanguageError,
    IndexOutOfRangeError,
    InvalidWordError,
    LengthMismatchError,
    ShuffleArityMismatchError,
)
from src.apps.operations.errors import BoundViolationError, NoChangeError, RouteDisagreementError
from src.apps.synthesis.errors import ComplexityInvariantError, CoverBudgetExceededError
from src.apps.witnesses.errors import InvalidFamilyParamsError


class CommandExit(typer.Exit):
    def __init__(self, code: int, detail: str):
        typer.echo(f'Error: {detail}', err=True)
        super().__init__(code=code)


class UsageExit(CommandExit):
    def __init__(self, detail: str):
        super().__init__(code=1, detail=detail)


class LengthMismatchExit(CommandExit):
    def __init__(self, detail: str):
        super().__init__(code=2, detail=detail)


class EmptyLanguageExit(CommandExit):
    def __init__(self, detail: str = 'The language is empty'):
        super().__init__(code=3, detail=detail)


class BudgetExceededExit(CommandExit):
    def __init__(self, detail: str):
        super().__init__(code=4, detail=detail)


class InvariantViolationExit(CommandExit):
    def __init__(self, detail: str):
        super().__init__(code=5, detail=detail)


@contextmanager
def domain_errors_as_exits() -> Iterator[None]:
    try:
        yield
    except LengthMismatchError as exc:
        raise LengthMismatchExit(str(exc)) from exc
    except EmptyLanguageError as exc:
        raise EmptyLanguageExit(str(exc) or 'The language is empty') from exc
    except (CoverBudgetExceededError, BitmapOverflowError) as exc:
        raise BudgetExceededExit(str(exc)) from exc
    except (RouteDisagreementError, BoundViolationError, ComplexityInvariantError) as exc:
        raise InvariantViolationExit(str(exc)) from exc
    except (
        InvalidWordError,
        IndexOutOfRangeError,
        ShuffleArityMismatchError,
        NotRankedError,
        NotTrimError,
        MultipleFinalsError,
        NoChangeError,
        InvalidFamilyParamsError,
        UnknownSuiteError,
        ValueError,
        OSError,
    ) as exc:
        raise UsageExit(str(exc)) from exc
