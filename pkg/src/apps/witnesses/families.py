from typing import Iterable, Optional

import numpy as np

from src.apps.automata.dto import RankedNFA
from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.dto import Alphabet, BlockLanguage, check_capacity
from src.apps.bitmaps.words import Word, from_words
from src.apps.enums import FamilyName
from src.apps.witnesses.bounds import bound_params
from src.apps.witnesses.errors import InvalidFamilyParamsError

BINARY = Alphabet(k=2)


def _digits(k: int, ell: int) -> np.ndarray:
    """Row j holds the symbols of the j-th word of length `ell`, leftmost symbol first."""
    indices = np.arange(check_capacity(k, ell), dtype=np.int64)
    powers = k ** np.arange(ell - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] // powers[None, :]) % k


def _language(alphabet: Alphabet, ell: int, members: np.ndarray) -> BlockLanguage:
    return BlockLanguage(alphabet=alphabet, ell=ell, bits=Bitmap.from_bits(members))


def _check_e_length(ell: int):
    if ell < 2:
        raise InvalidFamilyParamsError(f'The maximal-size family starts at ell = 2, got {ell}')


def witness_E(ell: int) -> BlockLanguage:
    """Binary words w1 w2 with |w2| = r_kl where bit ind(w2) of ind(w1) + 1 is set."""
    _check_e_length(ell)
    suffix = bound_params(2, ell).r_kl
    indices = np.arange(check_capacity(2, ell), dtype=np.int64)
    prefix_index = indices >> suffix
    suffix_index = indices & ((1 << suffix) - 1)
    return _language(BINARY, ell, ((prefix_index + 1) >> suffix_index) & 1)


def witness_E_closed_form(ell: int) -> BlockLanguage:
    """Concatenate the reversed, zero-padded binary forms of 1..t; pad with a zero block when t is a Mersenne number."""
    _check_e_length(ell)
    params = bound_params(2, ell)
    block = 2**params.r_kl
    values = np.arange(1, params.t + 1, dtype=np.int64)
    blocks = (values[:, None] >> np.arange(block, dtype=np.int64)[None, :]) & 1
    bits = blocks.ravel()
    if params.t != 2 ** (ell - params.r):
        bits = np.concatenate([bits, np.zeros(block, dtype=np.int64)])
    return _language(BINARY, ell, bits)


def witness_parity(k: int, d: int, x: int) -> BlockLanguage:
    """Words of length 2d whose symbol at i equals its mirror at 2d - 1 - i for every i < d with i = x mod 2."""
    if k < 2 or d < 1 or x not in (0, 1):
        raise InvalidFamilyParamsError(f'Parity family needs k >= 2, d >= 1, x in {{0, 1}}; got k={k}, d={d}, x={x}')
    digits = _digits(k, 2 * d)
    members = np.ones(digits.shape[0], dtype=np.bool_)
    for position in range(x, d, 2):
        members &= digits[:, position] == digits[:, 2 * d - 1 - position]
    return _language(Alphabet(k=k), 2 * d, members)


def _ko_language(k: int, d: int) -> BlockLanguage:
    digits = _digits(k, 2 * d)
    prohibited = k - 1
    matches = (digits[:, :d] == digits[:, d:]) & (digits[:, :d] != prohibited)
    return _language(Alphabet(k=k), 2 * d, matches.any(axis=1))


def _ko_nfa(k: int, d: int) -> RankedNFA:
    """Guess the position i and the symbol of w_i, count d symbols, then check w_(i + d)."""
    alphabet = Alphabet(k=k)
    ranks: list[int] = []
    ids: dict[tuple, int] = {}

    def add(key: tuple, consumed: int):
        ids[key] = len(ranks)
        ranks.append(2 * d - consumed)

    for consumed in range(d):
        add(('wait', consumed), consumed)
    for position in range(d):
        for symbol in range(k - 1):
            for consumed in range(position + 1, position + d + 1):
                add(('match', position, symbol, consumed), consumed)
    for consumed in range(d + 1, 2 * d + 1):
        add(('tail', consumed), consumed)

    delta = [[set() for _ in range(k)] for _ in ranks]
    everywhere = range(k)
    for consumed in range(d):
        source = ids[('wait', consumed)]
        if consumed + 1 < d:
            for symbol in everywhere:
                delta[source][symbol].add(ids[('wait', consumed + 1)])
        for symbol in range(k - 1):
            delta[source][symbol].add(ids[('match', consumed, symbol, consumed + 1)])
    for position in range(d):
        for guessed in range(k - 1):
            for consumed in range(position + 1, position + d):
                source = ids[('match', position, guessed, consumed)]
                for symbol in everywhere:
                    delta[source][symbol].add(ids[('match', position, guessed, consumed + 1)])
            source = ids[('match', position, guessed, position + d)]
            delta[source][guessed].add(ids[('tail', position + d + 1)])
    for consumed in range(d + 1, 2 * d):
        for symbol in everywhere:
            delta[ids[('tail', consumed)]][symbol].add(ids[('tail', consumed + 1)])

    return RankedNFA(
        alphabet=alphabet,
        ell=2 * d,
        ranks=tuple(ranks),
        initial=ids[('wait', 0)],
        final=ids[('tail', 2 * d)],
        delta=tuple(tuple(frozenset(targets) for targets in row) for row in delta),
    )


def witness_ko(k: int, d: int) -> tuple[BlockLanguage, RankedNFA]:
    """Words w of length 2d with w_i = w_(i + d) for some i < d, the shared symbol not being the last one."""
    if k < 2 or d < 2:
        raise InvalidFamilyParamsError(f'Prohibited-symbol family needs k >= 2 and d >= 2, got k={k}, d={d}')
    return _ko_language(k, d), _ko_nfa(k, d)


def simple_family(
    name: FamilyName,
    k: int,
    ell: int,
    word: Optional[Word] = None,
    letters: Optional[Iterable[str | int]] = None,
) -> BlockLanguage:
    alphabet = Alphabet(k=k)
    match name:
        case FamilyName.FULL:
            return BlockLanguage.full(alphabet, ell)
        case FamilyName.SINGLETON:
            return from_words(alphabet, ell, [word if word is not None else (0,) * ell])
        case FamilyName.SUBALPHABET:
            if letters is None:
                raise InvalidFamilyParamsError('The subalphabet family needs its letters')
            allowed = sorted({symbol for letter in letters for symbol in _symbols_of(alphabet, letter)})
            return _language(alphabet, ell, np.isin(_digits(k, ell), allowed).all(axis=1))
        case _:
            raise InvalidFamilyParamsError(f'{name} is not a simple family')


def _symbols_of(alphabet: Alphabet, letter: str | int) -> tuple[int, ...]:
    if isinstance(letter, str):
        return alphabet.parse(letter)
    if not 0 <= letter < alphabet.k:
        raise InvalidFamilyParamsError(f'Symbol {letter} is outside an alphabet of size {alphabet.k}')
    return (letter,)
