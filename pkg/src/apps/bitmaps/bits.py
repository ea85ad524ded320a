from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Self, Sequence

import numpy as np

from src.apps.bitmaps.errors import IndexOutOfRangeError, LengthMismatchError

WORD_BITS = 8


def _freeze(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def _words_for(length: int) -> int:
    return -(-length // WORD_BITS)


@dataclass(frozen=True, eq=False)
class Bitmap:
    """Immutable bit sequence packed most-significant-bit first into uint8 words.

    Position 0 is the leftmost character of the textual form. Padding bits of the last word are always zero,
    so two equal sequences always have equal packed words.
    """

    packed: np.ndarray
    length: int

    def __post_init__(self):
        self._validate_packed()

    def _validate_packed(self):
        if self.packed.dtype != np.uint8 or self.packed.ndim != 1:
            raise ValueError('Bitmap storage must be a flat uint8 array')
        if self.packed.size != _words_for(self.length):
            raise ValueError('Bitmap storage does not match its length')

    @classmethod
    def from_bits(cls, bits: np.ndarray | Iterable[int]) -> Self:
        array = np.asarray(bits)
        if array.dtype != np.bool_:
            array = array != 0
        return cls(_freeze(np.packbits(array.ravel(), bitorder='big')), int(array.size))

    @classmethod
    def from_string(cls, text: str) -> Self:
        digits = np.frombuffer(text.encode('ascii'), dtype=np.uint8) - ord('0')
        if digits.size and digits.max() > 1:
            raise ValueError(f'Bitmap text may only contain 0 and 1, got {text[:32]!r}')
        return cls.from_bits(digits.astype(np.bool_))

    @classmethod
    def from_int(cls, value: int, length: int) -> Self:
        if value < 0 or value.bit_length() > length:
            raise ValueError(f'{value} does not fit into {length} bits')
        padding = _words_for(length) * WORD_BITS - length
        raw = (value << padding).to_bytes(_words_for(length), 'big')
        return cls(_freeze(np.frombuffer(raw, dtype=np.uint8).copy()), length)

    @classmethod
    def zeros(cls, length: int) -> Self:
        return cls(_freeze(np.zeros(_words_for(length), dtype=np.uint8)), length)

    @classmethod
    def ones(cls, length: int) -> Self:
        return cls.from_bits(np.ones(length, dtype=np.bool_))

    @classmethod
    def concat(cls, parts: Sequence['Bitmap']) -> Self:
        if all(part.length % WORD_BITS == 0 for part in parts[:-1]):
            packed = np.concatenate([part.packed for part in parts]) if parts else np.zeros(0, dtype=np.uint8)
            return cls(_freeze(packed), sum(part.length for part in parts))
        return cls.from_bits(np.concatenate([part.unpack() for part in parts]))

    @cached_property
    def _key(self) -> tuple[int, bytes]:
        return self.length, self.packed.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bitmap):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __lt__(self, other: 'Bitmap') -> bool:
        # shorter first, then lexicographic; padding is zero so byte order is bit order
        return self._key < other._key

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        text = self.to_string()
        if len(text) > 64:
            text = f'{text[:64]}...'
        return f'Bitmap({text!r}, length={self.length})'

    def __getitem__(self, position: int) -> int:
        self._check_position(position)
        return int(self.packed[position >> 3] >> (7 - (position & 7))) & 1

    def _check_position(self, position: int):
        if not 0 <= position < self.length:
            raise IndexOutOfRangeError(f'Bit {position} is outside a bitmap of length {self.length}')

    def _check_same_length(self, other: 'Bitmap'):
        if self.length != other.length:
            raise LengthMismatchError(f'Bitmaps of length {self.length} and {other.length} cannot be combined')

    def unpack(self) -> np.ndarray:
        return np.unpackbits(self.packed, count=self.length, bitorder='big')

    def to_string(self) -> str:
        return (self.unpack() + ord('0')).tobytes().decode('ascii')

    def as_int(self) -> int:
        padding = self.packed.size * WORD_BITS - self.length
        return int.from_bytes(self.packed.tobytes(), 'big') >> padding

    def slice(self, start: int, length: int) -> 'Bitmap':
        """Contiguous sub-sequence; shares storage with `self` when the slice is word-aligned."""
        if start < 0 or length < 0 or start + length > self.length:
            raise IndexOutOfRangeError(f'Slice [{start}, {start + length}) is outside a bitmap of length {self.length}')
        stop = start + length
        if start % WORD_BITS == 0 and (length % WORD_BITS == 0 or stop == self.length):
            return Bitmap(_freeze(self.packed[start // WORD_BITS : _words_for(stop)]), length)
        first_word = start // WORD_BITS
        window = np.unpackbits(self.packed[first_word : _words_for(stop)], bitorder='big')
        offset = start - first_word * WORD_BITS
        return Bitmap.from_bits(window[offset : offset + length])

    def flip(self, position: int) -> 'Bitmap':
        self._check_position(position)
        packed = self.packed.copy()
        packed[position >> 3] ^= np.uint8(1 << (7 - (position & 7)))
        return Bitmap(_freeze(packed), self.length)

    def is_zero(self) -> bool:
        return not self.packed.any()

    def popcount(self) -> int:
        return int(np.bitwise_count(self.packed).sum())

    def ones_positions(self) -> np.ndarray:
        return np.flatnonzero(self.unpack())

    def is_subset_of(self, other: 'Bitmap') -> bool:
        self._check_same_length(other)
        return not np.bitwise_and(self.packed, np.bitwise_not(other.packed)).any()

    def __and__(self, other: 'Bitmap') -> 'Bitmap':
        self._check_same_length(other)
        return Bitmap(_freeze(np.bitwise_and(self.packed, other.packed)), self.length)

    def __or__(self, other: 'Bitmap') -> 'Bitmap':
        self._check_same_length(other)
        return Bitmap(_freeze(np.bitwise_or(self.packed, other.packed)), self.length)

    def __invert__(self) -> 'Bitmap':
        packed = np.bitwise_not(self.packed)
        padding = packed.size * WORD_BITS - self.length
        if padding:
            packed[-1] &= np.uint8((0xFF << padding) & 0xFF)
        return Bitmap(_freeze(packed), self.length)
