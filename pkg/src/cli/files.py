from pathlib import Path
from typing import Optional

import typer
from pydantic import TypeAdapter

from src.apps.automata.dto import RankedDFA, RankedNFA
from src.apps.automata.language import enumerate_language
from src.apps.bitmaps.dto import Alphabet, BlockLanguage
from src.apps.bitmaps.errors import LengthMismatchError
from src.apps.bitmaps.words import from_words
from src.cli.schemas import AutomatonFileSchema, LanguageFileSchema

_input_file = TypeAdapter(LanguageFileSchema | AutomatonFileSchema)


def write_text(path: Optional[Path], text: str):
    """Writes to `path`, or to stdout when no path is given."""
    if path is None:
        typer.echo(text, nl=not text.endswith('\n'))
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='utf-8')


def read_language(path: Path) -> BlockLanguage:
    """Reads a language file, or a ranked automaton file whose language is then enumerated."""
    schema = _input_file.validate_json(path.read_text(encoding='utf-8'))
    if isinstance(schema, LanguageFileSchema):
        return schema.to_dto()
    automaton = schema.to_dto()
    if not isinstance(automaton, (RankedDFA, RankedNFA)):
        raise ValueError(f'{path} holds a {type(automaton).__name__}, which does not describe a block language')
    return enumerate_language(automaton)


def read_words(path: Path, k: int) -> BlockLanguage:
    alphabet = Alphabet(k=k)
    words = [alphabet.parse(line.strip()) for line in path.read_text(encoding='utf-8').splitlines() if line.strip()]
    if not words:
        raise ValueError(f'{path} holds no words')
    lengths = sorted({len(word) for word in words})
    if len(lengths) > 1:
        raise LengthMismatchError(f'{path} mixes word lengths {lengths}')
    return from_words(alphabet, lengths[0], words)
