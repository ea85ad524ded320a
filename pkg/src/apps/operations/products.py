from collections import deque
from typing import Optional

from src.apps.automata.dto import RankedDFA
from src.apps.automata.minimization import minimize_ranked
from src.apps.automata.validators import validate
from src.apps.bitmaps.errors import LengthMismatchError

_DEAD = 'dead'
_FINAL = 'final'


def _step(dfa: RankedDFA, state: Optional[int], symbol: int) -> Optional[int]:
    if state is None:
        return None
    target = dfa.delta[state][symbol]
    if target is None or target == dfa.dead:
        return None
    return target


def _require_same_block(a: RankedDFA, b: RankedDFA):
    if a.alphabet != b.alphabet or a.ell != b.ell:
        raise LengthMismatchError(f'Automata over (k={a.alphabet.k}, ell={a.ell}) and (k={b.alphabet.k}, ell={b.ell})')


def _product(a: RankedDFA, b: RankedDFA, both: bool) -> RankedDFA:
    """Pair states rank by rank; a pair stays live while both (or either) components are live.

    Pairs of different ranks never arise, so the product is ranked by construction. Every live rank-0 pair
    is accepting and collapses into one final state.
    """
    validate(a)
    validate(b)
    _require_same_block(a, b)
    k = a.alphabet.k

    def key_of(pair: tuple[Optional[int], Optional[int]]):
        p, q = pair
        alive = (p is not None and q is not None) if both else (p is not None or q is not None)
        if not alive:
            return _DEAD
        rank = a.ranks[p] if p is not None else b.ranks[q]
        return _FINAL if rank == 0 else pair

    start = (a.initial, b.initial)
    index = {start: 0, _FINAL: 1, _DEAD: 2}
    ranks: list[Optional[int]] = [a.ell, 0, None]
    rows: dict[int, tuple[int, ...]] = {1: (2,) * k, 2: (2,) * k}
    queue = deque([start])

    while queue:
        pair = queue.popleft()
        row = []
        for symbol in range(k):
            target = (_step(a, pair[0], symbol), _step(b, pair[1], symbol))
            key = key_of(target)
            if key not in index:
                index[key] = len(ranks)
                ranks.append(ranks[index[pair]] - 1)
                queue.append(key)
            row.append(index[key])
        rows[index[pair]] = tuple(row)

    return minimize_ranked(
        RankedDFA(
            alphabet=a.alphabet,
            ell=a.ell,
            ranks=tuple(ranks),
            initial=0,
            final=1,
            dead=2,
            delta=tuple(rows[state] for state in range(len(ranks))),
        )
    )


def intersect_dfa(a: RankedDFA, b: RankedDFA) -> RankedDFA:
    return _product(a, b, both=True)


def union_dfa(a: RankedDFA, b: RankedDFA) -> RankedDFA:
    return _product(a, b, both=False)


def complement_dfa(dfa: RankedDFA) -> RankedDFA:
    """Block complement: edges into Omega enter a chain of universal states, edges into the final state die."""
    validate(dfa)
    k = dfa.alphabet.k
    live = [state for state in dfa.live_states if state != dfa.final]
    renumber = {state: position for position, state in enumerate(live)}
    # universal state of rank i sits at chain[i]
    chain = {rank: len(live) + rank for rank in range(dfa.ell)}
    dead = len(live) + dfa.ell

    def target_of(state: int, symbol: int) -> int:
        target = _step(dfa, state, symbol)
        if target is None:
            return chain[dfa.ranks[state] - 1]
        if target == dfa.final:
            return dead
        return renumber[target]

    delta = [tuple(target_of(state, symbol) for symbol in range(k)) for state in live]
    delta.extend(tuple(chain[rank - 1] if rank else dead for _ in range(k)) for rank in range(dfa.ell))
    delta.append((dead,) * k)

    return minimize_ranked(
        RankedDFA(
            alphabet=dfa.alphabet,
            ell=dfa.ell,
            ranks=tuple(dfa.ranks[state] for state in live) + tuple(range(dfa.ell)) + (None,),
            initial=renumber[dfa.initial],
            final=chain[0],
            dead=dead,
            delta=tuple(delta),
        )
    )


def concat_dfa(a: RankedDFA, b: RankedDFA) -> RankedDFA:
    """Glue the final state of `a` onto the initial state of `b`, sharing one Omega."""
    validate(a)
    validate(b)
    if a.alphabet != b.alphabet:
        raise LengthMismatchError(f'Cannot concatenate automata over alphabets of size {a.alphabet.k} and {b.alphabet.k}')
    k = a.alphabet.k

    head = [state for state in a.live_states if state != a.final]
    tail = b.live_states
    head_ids = {state: position for position, state in enumerate(head)}
    tail_ids = {state: len(head) + position for position, state in enumerate(tail)}
    dead = len(head) + len(tail)

    def head_target(state: int, symbol: int) -> int:
        target = _step(a, state, symbol)
        if target is None:
            return dead
        return tail_ids[b.initial] if target == a.final else head_ids[target]

    def tail_target(state: int, symbol: int) -> int:
        target = _step(b, state, symbol)
        return dead if target is None else tail_ids[target]

    delta = [tuple(head_target(state, symbol) for symbol in range(k)) for state in head]
    delta.extend(tuple(tail_target(state, symbol) for symbol in range(k)) for state in tail)
    delta.append((dead,) * k)

    return minimize_ranked(
        RankedDFA(
            alphabet=a.alphabet,
            ell=a.ell + b.ell,
            ranks=tuple(a.ranks[state] + b.ell for state in head) + tuple(b.ranks[state] for state in tail) + (None,),
            initial=head_ids[a.initial],
            final=tail_ids[b.final],
            dead=dead,
            delta=tuple(delta),
        )
    )
