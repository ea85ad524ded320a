from collections import deque

from src.apps.automata.dto import Automaton, GeneralDFA, GeneralNFA, RankedDFA, RankedNFA
from src.apps.automata.utils import canonical_dfa, canonical_general
from src.apps.automata.validators import validate

_DEAD = -1


def determinize(nfa: RankedNFA) -> RankedDFA:
    """Subset construction over reachable subsets; a subset only ever holds states of one rank."""
    validate(nfa)
    k = nfa.alphabet.k
    start = frozenset((nfa.initial,))
    index = {start: 0}
    ranks: list[int | None] = [nfa.ell]
    rows: list[list[int]] = []
    queue = deque([start])

    while queue:
        subset = queue.popleft()
        row = []
        for symbol in range(k):
            target = frozenset().union(*(nfa.delta[state][symbol] for state in subset))
            if not target:
                row.append(_DEAD)
                continue
            if target not in index:
                index[target] = len(index)
                ranks.append(nfa.ranks[next(iter(target))])
                queue.append(target)
            row.append(index[target])
        rows.append(row)

    dead = len(index)
    ranks.append(None)
    delta = tuple(tuple(dead if target == _DEAD else target for target in row) for row in rows) + ((dead,) * k,)
    return canonical_dfa(
        RankedDFA(
            alphabet=nfa.alphabet,
            ell=nfa.ell,
            ranks=tuple(ranks),
            initial=0,
            final=index[frozenset((nfa.final,))],
            dead=dead,
            delta=delta,
        )
    )


def determinize_general(nfa: GeneralNFA) -> GeneralDFA:
    k = nfa.alphabet.k
    start = frozenset((nfa.initial,))
    index = {start: 0}
    rows: list[tuple[int, ...]] = []
    queue = deque([start])

    while queue:
        subset = queue.popleft()
        row = []
        for symbol in range(k):
            target = frozenset().union(*(nfa.delta[state][symbol] for state in subset))
            if target not in index:
                index[target] = len(index)
                queue.append(target)
            row.append(index[target])
        rows.append(tuple(row))

    finals = frozenset(position for subset, position in index.items() if subset & nfa.finals)
    return canonical_general(GeneralDFA(alphabet=nfa.alphabet, initial=0, finals=finals, delta=tuple(rows)))


def reverse_nfa(automaton: RankedNFA | RankedDFA) -> RankedNFA:
    validate(automaton)
    live = automaton.live_states if isinstance(automaton, RankedDFA) else list(range(automaton.size))
    renumber = {state: position for position, state in enumerate(live)}
    k = automaton.alphabet.k

    incoming: list[list[set[int]]] = [[set() for _ in range(k)] for _ in live]
    for state in live:
        for symbol in range(k):
            for target in automaton.successors(state, symbol):
                incoming[renumber[target]][symbol].add(renumber[state])

    return RankedNFA(
        alphabet=automaton.alphabet,
        ell=automaton.ell,
        ranks=tuple(automaton.ell - automaton.ranks[state] for state in live),
        initial=renumber[automaton.final],
        final=renumber[automaton.initial],
        delta=tuple(tuple(frozenset(sources) for sources in row) for row in incoming),
    )


def to_general(automaton: Automaton) -> GeneralDFA:
    """Complete general DFA accepting the same words; ranked inputs keep their rank-free structure."""
    if isinstance(automaton, GeneralDFA):
        return automaton
    if isinstance(automaton, GeneralNFA):
        return determinize_general(automaton)
    if isinstance(automaton, RankedNFA):
        automaton = determinize(automaton)

    k = automaton.alphabet.k
    dead = automaton.dead if automaton.dead is not None else automaton.size
    rows = [tuple(dead if target is None else target for target in row) for row in automaton.delta]
    if dead == automaton.size:
        rows.append((dead,) * k)
    return canonical_general(
        GeneralDFA(
            alphabet=automaton.alphabet,
            initial=automaton.initial,
            finals=frozenset((automaton.final,)),
            delta=tuple(rows),
        )
    )
