import numpy as np

from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.dto import Alphabet, BlockLanguage, check_capacity


def point_rng(seed: int, *coordinates: int) -> np.random.Generator:
    return np.random.default_rng([seed, *coordinates])


def random_language(alphabet: Alphabet, ell: int, rng: np.random.Generator, density: float) -> BlockLanguage:
    """Each word is a member with probability `density`; an empty draw keeps one random word."""
    size = check_capacity(alphabet.k, ell)
    bits = rng.random(size) < density
    if not bits.any():
        bits[rng.integers(size)] = True
    return BlockLanguage(alphabet=alphabet, ell=ell, bits=Bitmap.from_bits(bits))


def random_member(lang: BlockLanguage, rng: np.random.Generator, present: bool) -> int:
    candidates = lang.bits.ones_positions() if present else (~lang.bits).ones_positions()
    return int(rng.choice(candidates))
