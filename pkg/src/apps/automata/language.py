from collections import deque

from src.apps.automata.construction import to_general
from src.apps.automata.dto import Automaton, RankedDFA, RankedNFA
from src.apps.automata.validators import validate
from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.dto import BlockLanguage, check_capacity
from src.apps.bitmaps.errors import InvalidWordError, LengthMismatchError
from src.apps.bitmaps.words import Word


def enumerate_language(automaton: RankedNFA | RankedDFA) -> BlockLanguage:
    """Bitmap of the accepted words, built from the right language of every state bottom-up."""
    validate(automaton)
    k, ell = automaton.alphabet.k, automaton.ell
    check_capacity(k, ell)

    live = automaton.live_states if isinstance(automaton, RankedDFA) else list(range(automaton.size))
    right: dict[int, Bitmap] = {}
    for state in sorted(live, key=lambda state: automaton.ranks[state]):
        rank = automaton.ranks[state]
        if rank == 0:
            right[state] = Bitmap.ones(1)
            continue
        width = k ** (rank - 1)
        blocks = []
        for symbol in range(k):
            block = Bitmap.zeros(width)
            for target in automaton.successors(state, symbol):
                block = block | right[target]
            blocks.append(block)
        right[state] = Bitmap.concat(blocks)

    return BlockLanguage(alphabet=automaton.alphabet, ell=ell, bits=right[automaton.initial])


def accepts(automaton: Automaton, word: Word) -> bool:
    alphabet = automaton.alphabet
    symbols = alphabet.parse(word) if isinstance(word, str) else tuple(word)
    if any(not 0 <= symbol < alphabet.k for symbol in symbols):
        raise InvalidWordError(f'Word {word!r} uses a symbol outside an alphabet of size {alphabet.k}')
    if isinstance(automaton, (RankedNFA, RankedDFA)) and len(symbols) != automaton.ell:
        return False

    current = frozenset((automaton.initial,))
    for symbol in symbols:
        current = frozenset().union(*(automaton.successors(state, symbol) for state in current))
        if not current:
            return False

    if isinstance(automaton, (RankedNFA, RankedDFA)):
        return automaton.final in current
    return bool(current & automaton.finals)


def equivalent(a: Automaton, b: Automaton) -> bool:
    if a.alphabet != b.alphabet:
        raise LengthMismatchError(f'Automata over alphabets of size {a.alphabet.k} and {b.alphabet.k}')

    ranked = (RankedNFA, RankedDFA)
    if isinstance(a, ranked) and isinstance(b, ranked):
        if a.ell != b.ell:
            raise LengthMismatchError(f'Block lengths {a.ell} and {b.ell} differ')
        return enumerate_language(a) == enumerate_language(b)

    left, right = to_general(a), to_general(b)
    start = (left.initial, right.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if (p in left.finals) != (q in right.finals):
            return False
        for symbol in range(a.alphabet.k):
            pair = (left.delta[p][symbol], right.delta[q][symbol])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True
