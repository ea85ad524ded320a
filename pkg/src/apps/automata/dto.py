from dataclasses import dataclass
from typing import Optional

from src.apps.bitmaps.dto import Alphabet


def _validate_table(alphabet: Alphabet, size: int, delta: tuple[tuple, ...], *states: int):
    if len(delta) != size:
        raise ValueError(f'Transition table has {len(delta)} rows for {size} states')
    if any(len(row) != alphabet.k for row in delta):
        raise ValueError(f'Every transition row must have {alphabet.k} entries')
    if any(not 0 <= state < size for state in states):
        raise ValueError('Designated state is out of range')


@dataclass(frozen=True)
class RankedNFA:
    alphabet: Alphabet
    ell: int
    ranks: tuple[int, ...]
    initial: int
    final: int
    delta: tuple[tuple[frozenset[int], ...], ...]

    def __post_init__(self):
        _validate_table(self.alphabet, len(self.ranks), self.delta, self.initial, self.final)

    @property
    def size(self) -> int:
        return len(self.ranks)

    def successors(self, state: int, symbol: int) -> frozenset[int]:
        return self.delta[state][symbol]


@dataclass(frozen=True)
class RankedDFA:
    """Leveled DFA; `dead` is the rankless sink Omega, `None` entries are missing transitions."""

    alphabet: Alphabet
    ell: int
    ranks: tuple[Optional[int], ...]
    initial: int
    final: int
    dead: Optional[int]
    delta: tuple[tuple[Optional[int], ...], ...]

    def __post_init__(self):
        _validate_table(self.alphabet, len(self.ranks), self.delta, self.initial, self.final)
        if self.dead is not None:
            _validate_table(self.alphabet, len(self.ranks), self.delta, self.dead)

    @property
    def size(self) -> int:
        return len(self.ranks)

    @property
    def live_states(self) -> list[int]:
        return [state for state in range(self.size) if state != self.dead]

    def successors(self, state: int, symbol: int) -> frozenset[int]:
        target = self.delta[state][symbol]
        if target is None or target == self.dead:
            return frozenset()
        return frozenset((target,))


@dataclass(frozen=True)
class GeneralDFA:
    alphabet: Alphabet
    initial: int
    finals: frozenset[int]
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _validate_table(self.alphabet, len(self.delta), self.delta, self.initial, *self.finals)

    @property
    def size(self) -> int:
        return len(self.delta)

    def successors(self, state: int, symbol: int) -> frozenset[int]:
        return frozenset((self.delta[state][symbol],))


@dataclass(frozen=True)
class GeneralNFA:
    alphabet: Alphabet
    initial: int
    finals: frozenset[int]
    delta: tuple[tuple[frozenset[int], ...], ...]

    def __post_init__(self):
        _validate_table(self.alphabet, len(self.delta), self.delta, self.initial, *self.finals)

    @property
    def size(self) -> int:
        return len(self.delta)

    def successors(self, state: int, symbol: int) -> frozenset[int]:
        return self.delta[state][symbol]


Ranked = RankedNFA | RankedDFA
Automaton = RankedNFA | RankedDFA | GeneralDFA | GeneralNFA


@dataclass(frozen=True)
class WidthProfile:
    widths: tuple[int, ...]
    has_dead: bool

    @property
    def ell(self) -> int:
        return len(self.widths) - 1

    def width(self, rank: int) -> int:
        return self.widths[self.ell - rank]

    @property
    def max_width(self) -> int:
        return max(self.widths)

    @property
    def states(self) -> int:
        return sum(self.widths) + int(self.has_dead)
