from collections import deque
from typing import Iterable

from src.apps.automata.dto import Automaton, GeneralDFA, RankedDFA, RankedNFA


def raw_targets(automaton: Automaton, state: int, symbol: int) -> Iterable[int]:
    target = automaton.delta[state][symbol]
    if target is None:
        return ()
    if isinstance(target, int):
        return (target,)
    return sorted(target)


def reachable(automaton: Automaton) -> list[int]:
    """States reachable from the initial one, in breadth-first, symbol-ordered discovery order."""
    order = [automaton.initial]
    seen = {automaton.initial}
    queue = deque(order)
    while queue:
        state = queue.popleft()
        for symbol in range(automaton.alphabet.k):
            for target in raw_targets(automaton, state, symbol):
                if target not in seen:
                    seen.add(target)
                    order.append(target)
                    queue.append(target)
    return order


def coreachable(automaton: Automaton, finals: Iterable[int]) -> set[int]:
    predecessors: dict[int, set[int]] = {}
    for state in range(automaton.size):
        for symbol in range(automaton.alphabet.k):
            for target in raw_targets(automaton, state, symbol):
                predecessors.setdefault(target, set()).add(state)

    seen = set(finals)
    queue = deque(seen)
    while queue:
        state = queue.popleft()
        for source in predecessors.get(state, ()):
            if source not in seen:
                seen.add(source)
                queue.append(source)
    return seen


def canonical_dfa(dfa: RankedDFA) -> RankedDFA:
    order = reachable(dfa)
    renumber = {state: position for position, state in enumerate(order)}
    return RankedDFA(
        alphabet=dfa.alphabet,
        ell=dfa.ell,
        ranks=tuple(dfa.ranks[state] for state in order),
        initial=0,
        final=renumber[dfa.final],
        dead=renumber.get(dfa.dead) if dfa.dead is not None else None,
        delta=tuple(
            tuple(None if target is None else renumber[target] for target in dfa.delta[state]) for state in order
        ),
    )


def canonical_general(dfa: GeneralDFA) -> GeneralDFA:
    order = reachable(dfa)
    renumber = {state: position for position, state in enumerate(order)}
    return GeneralDFA(
        alphabet=dfa.alphabet,
        initial=0,
        finals=frozenset(renumber[state] for state in dfa.finals if state in renumber),
        delta=tuple(tuple(renumber[target] for target in dfa.delta[state]) for state in order),
    )


def canonical_nfa(nfa: RankedNFA) -> RankedNFA:
    order = reachable(nfa)
    renumber = {state: position for position, state in enumerate(order)}
    return RankedNFA(
        alphabet=nfa.alphabet,
        ell=nfa.ell,
        ranks=tuple(nfa.ranks[state] for state in order),
        initial=0,
        final=renumber[nfa.final],
        delta=tuple(
            tuple(frozenset(renumber[target] for target in targets) for targets in nfa.delta[state])
            for state in order
        ),
    )
