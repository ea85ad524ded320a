from typing import Sequence

import numpy as np

from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.dto import BlockLanguage, check_capacity
from src.apps.bitmaps.errors import LengthMismatchError, ShuffleArityMismatchError
from src.apps.bitmaps.words import Word, word_to_index


def _require_same_block(lhs: BlockLanguage, rhs: BlockLanguage):
    if not lhs.same_block(rhs):
        raise LengthMismatchError(
            f'Languages over (k={lhs.k}, ell={lhs.ell}) and (k={rhs.k}, ell={rhs.ell}) cannot be combined'
        )


def bit_and(lhs: BlockLanguage, rhs: BlockLanguage) -> BlockLanguage:
    _require_same_block(lhs, rhs)
    return BlockLanguage(alphabet=lhs.alphabet, ell=lhs.ell, bits=lhs.bits & rhs.bits)


def bit_or(lhs: BlockLanguage, rhs: BlockLanguage) -> BlockLanguage:
    _require_same_block(lhs, rhs)
    return BlockLanguage(alphabet=lhs.alphabet, ell=lhs.ell, bits=lhs.bits | rhs.bits)


def bit_not_block(lang: BlockLanguage) -> BlockLanguage:
    return BlockLanguage(alphabet=lang.alphabet, ell=lang.ell, bits=~lang.bits)


def toggle_word(lang: BlockLanguage, word: Word) -> BlockLanguage:
    index = word_to_index(lang.alphabet, lang.ell, word)
    return BlockLanguage(alphabet=lang.alphabet, ell=lang.ell, bits=lang.bits.flip(index))


def perfect_shuffle(parts: Sequence[Bitmap], block: int) -> Bitmap:
    """Interleave length-`block` slices taken round-robin from equally long `parts`."""
    if not parts:
        raise ShuffleArityMismatchError('Nothing to shuffle')
    length = parts[0].length
    if any(part.length != length for part in parts):
        raise ShuffleArityMismatchError('Shuffled sequences must have equal lengths')
    if block < 1 or length % block:
        raise ShuffleArityMismatchError(f'Block {block} does not divide length {length}')

    stacked = np.stack([part.unpack() for part in parts])
    interleaved = stacked.reshape(len(parts), length // block, block).transpose(1, 0, 2)
    return Bitmap.from_bits(interleaved.ravel())


def _split(bitmap: Bitmap, parts: int) -> list[Bitmap]:
    width = bitmap.length // parts
    return [bitmap.slice(part * width, width) for part in range(parts)]


def reversal_bitmap(lang: BlockLanguage) -> BlockLanguage:
    # R_i moves the symbol read i-th to the back; R_{ell-1} reads every word backwards
    k = lang.k
    current = lang.bits
    for rank in range(1, lang.ell):
        current = perfect_shuffle(_split(current, k), k ** (rank - 1))
    return BlockLanguage(alphabet=lang.alphabet, ell=lang.ell, bits=current)


def concat_bitmap(lhs: BlockLanguage, rhs: BlockLanguage) -> BlockLanguage:
    if lhs.alphabet != rhs.alphabet:
        raise LengthMismatchError(f'Cannot concatenate languages over alphabets of size {lhs.k} and {rhs.k}')
    ell = lhs.ell + rhs.ell
    check_capacity(lhs.k, ell)
    product = np.outer(lhs.bits.unpack(), rhs.bits.unpack())
    return BlockLanguage(alphabet=lhs.alphabet, ell=ell, bits=Bitmap.from_bits(product.ravel()))
