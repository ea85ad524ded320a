from typing import Iterable, Sequence

import numpy as np

from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.dto import Alphabet, BlockLanguage, check_capacity
from src.apps.bitmaps.errors import IndexOutOfRangeError, InvalidWordError

Word = str | Sequence[int]


def as_symbols(alphabet: Alphabet, ell: int, word: Word) -> tuple[int, ...]:
    symbols = alphabet.parse(word) if isinstance(word, str) else tuple(int(symbol) for symbol in word)
    if len(symbols) != ell:
        raise InvalidWordError(f'Word {word!r} has length {len(symbols)}, expected {ell}')
    if any(not 0 <= symbol < alphabet.k for symbol in symbols):
        raise InvalidWordError(f'Word {word!r} uses a symbol outside an alphabet of size {alphabet.k}')
    return symbols


def word_to_index(alphabet: Alphabet, ell: int, word: Word) -> int:
    index = 0
    for symbol in as_symbols(alphabet, ell, word):
        index = index * alphabet.k + symbol
    return index


def index_to_symbols(alphabet: Alphabet, ell: int, index: int) -> tuple[int, ...]:
    if not 0 <= index < alphabet.k**ell:
        raise IndexOutOfRangeError(f'Index {index} is outside [0, {alphabet.k}^{ell})')
    digits = []
    for _ in range(ell):
        index, digit = divmod(index, alphabet.k)
        digits.append(digit)
    return tuple(reversed(digits))


def index_to_word(alphabet: Alphabet, ell: int, index: int) -> str:
    return alphabet.render(index_to_symbols(alphabet, ell, index))


def from_words(alphabet: Alphabet, ell: int, words: Iterable[Word]) -> BlockLanguage:
    bits = np.zeros(check_capacity(alphabet.k, ell), dtype=np.bool_)
    for word in words:
        bits[word_to_index(alphabet, ell, word)] = True
    return BlockLanguage(alphabet=alphabet, ell=ell, bits=Bitmap.from_bits(bits))


def to_words(lang: BlockLanguage) -> frozenset[str]:
    return frozenset(index_to_word(lang.alphabet, lang.ell, int(index)) for index in lang.bits.ones_positions())
