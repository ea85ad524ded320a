from pathlib import Path
from typing import Annotated, Optional

import typer

from src.apps.bitmaps.dto import BlockLanguage
from src.apps.enums import FamilyName
from src.apps.witnesses.families import simple_family, witness_E, witness_ko, witness_parity
from src.cli.exceptions import UsageExit, domain_errors_as_exits
from src.cli.files import read_words, write_text
from src.cli.schemas import LanguageFileSchema


def gen(
    family: Annotated[FamilyName, typer.Option(help='Witness family to generate')],
    k: Annotated[int, typer.Option(min=1, help='Alphabet size')] = 2,
    ell: Annotated[Optional[int], typer.Option(min=1, help='Word length')] = None,
    d: Annotated[Optional[int], typer.Option(min=1, help='Half length of the parity and ko families')] = None,
    x: Annotated[int, typer.Option(min=0, max=1, help='Parity of the mirrored positions')] = 0,
    word: Annotated[Optional[str], typer.Option(help='Word of the singleton family')] = None,
    letters: Annotated[Optional[str], typer.Option(help='Letters of the subalphabet family, e.g. ac')] = None,
    words_file: Annotated[Optional[Path], typer.Option(exists=True, dir_okay=False, help='One word per line')] = None,
    out: Annotated[Optional[Path], typer.Option(help='Language file to write, stdout if omitted')] = None,
):
    """Generate a witness language and write it as a language file."""
    with domain_errors_as_exits():
        lang = _generate(family, k, ell, d, x, word, letters, words_file)
    write_text(out, LanguageFileSchema.from_dto(lang).model_dump_json(indent=2) + '\n')


def _generate(
    family: FamilyName,
    k: int,
    ell: Optional[int],
    d: Optional[int],
    x: int,
    word: Optional[str],
    letters: Optional[str],
    words_file: Optional[Path],
) -> BlockLanguage:
    match family:
        case FamilyName.E:
            if k != 2:
                raise UsageExit('The E family is binary')
            return witness_E(_required(ell, '--ell'))
        case FamilyName.PARITY:
            return witness_parity(k, _required(d, '--d'), x)
        case FamilyName.KO:
            return witness_ko(k, _required(d, '--d'))[0]
        case FamilyName.WORDS:
            return read_words(_required(words_file, '--words-file'), k)
        case _:
            return simple_family(family, k, _required(ell, '--ell'), word=word, letters=letters)


def _required[T](value: Optional[T], flag: str) -> T:
    if value is None:
        raise UsageExit(f'This family needs {flag}')
    return value
