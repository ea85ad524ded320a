from dataclasses import dataclass
from typing import Optional, Self, Sequence

from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.errors import BitmapOverflowError, InvalidWordError, LengthMismatchError
from src.core.config import settings
from src.core.consts import GLYPHS, NUMERIC_SYMBOL_PREFIX

ZERO_BLOCK = -1


def check_capacity(k: int, ell: int) -> int:
    size = k**ell
    if size > settings.BITMAP_CAP:
        raise BitmapOverflowError(f'k^ell = {k}^{ell} exceeds the bitmap cap {settings.BITMAP_CAP}')
    return size


@dataclass(frozen=True)
class Alphabet:
    k: int

    def __post_init__(self):
        self._validate_k()

    def _validate_k(self):
        if self.k < 1:
            raise ValueError('Alphabet needs at least one symbol')

    @property
    def uses_letters(self) -> bool:
        return self.k <= len(GLYPHS)

    @property
    def glyphs(self) -> tuple[str, ...]:
        if self.uses_letters:
            return tuple(GLYPHS[: self.k])
        return tuple(f'{NUMERIC_SYMBOL_PREFIX}{symbol}' for symbol in range(self.k))

    def render(self, word: Sequence[int]) -> str:
        glyphs = self.glyphs
        separator = '' if self.uses_letters else ','
        return separator.join(glyphs[symbol] for symbol in word)

    def parse(self, text: str) -> tuple[int, ...]:
        if self.uses_letters:
            tokens = list(text)
        else:
            tokens = [token.strip() for token in text.split(',')] if text else []
        lookup = {glyph: symbol for symbol, glyph in enumerate(self.glyphs)}
        try:
            return tuple(lookup[token] for token in tokens)
        except KeyError as exc:
            raise InvalidWordError(f'Symbol {exc.args[0]!r} is not in an alphabet of size {self.k}') from None


@dataclass(frozen=True)
class BlockLanguage:
    alphabet: Alphabet
    ell: int
    bits: Bitmap

    def __post_init__(self):
        self._validate_ell()
        self._validate_bits()

    def _validate_ell(self):
        if self.ell < 1:
            raise ValueError('Block length must be positive')

    def _validate_bits(self):
        size = check_capacity(self.alphabet.k, self.ell)
        if self.bits.length != size:
            raise LengthMismatchError(f'Bitmap of length {self.bits.length} does not describe {self.k}^{self.ell} words')

    @classmethod
    def empty(cls, alphabet: Alphabet, ell: int) -> Self:
        return cls(alphabet=alphabet, ell=ell, bits=Bitmap.zeros(check_capacity(alphabet.k, ell)))

    @classmethod
    def full(cls, alphabet: Alphabet, ell: int) -> Self:
        return cls(alphabet=alphabet, ell=ell, bits=Bitmap.ones(check_capacity(alphabet.k, ell)))

    @property
    def k(self) -> int:
        return self.alphabet.k

    @property
    def size(self) -> int:
        return self.bits.length

    @property
    def is_empty(self) -> bool:
        return self.bits.is_zero()

    @property
    def word_count(self) -> int:
        return self.bits.popcount()

    def same_block(self, other: 'BlockLanguage') -> bool:
        return self.alphabet == other.alphabet and self.ell == other.ell


@dataclass(frozen=True)
class Factor:
    rank: int
    content: Bitmap
    index: Optional[int] = None


@dataclass(frozen=True)
class FactorSets:
    """Distinct nonzero factors B_0..B_ell, each rank in first-occurrence order.

    `children[i][m]` lists, for member m of rank i, the positions in rank i - 1 of its k blocks
    (ZERO_BLOCK for an all-zero block). Rank 0 members have no children.
    """

    alphabet: Alphabet
    ell: int
    per_rank: tuple[tuple[Bitmap, ...], ...]
    first_index: tuple[tuple[int, ...], ...]
    children: tuple[tuple[tuple[int, ...], ...], ...]

    def __getitem__(self, rank: int) -> tuple[Bitmap, ...]:
        return self.per_rank[rank]

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(len(self.per_rank[rank]) for rank in range(self.ell, -1, -1))

    @property
    def total(self) -> int:
        return sum(len(members) for members in self.per_rank)
