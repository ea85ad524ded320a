from src.apps.automata.dto import Automaton, RankedDFA, RankedNFA, WidthProfile
from src.apps.automata.errors import NotRankedError, NotTrimError
from src.apps.automata.utils import coreachable, raw_targets, reachable


def _validate_dead(dfa: RankedDFA):
    if dfa.dead is None:
        return
    if dfa.ranks[dfa.dead] is not None:
        raise NotRankedError('The dead state must not carry a rank')
    if any(target != dfa.dead for target in dfa.delta[dfa.dead]):
        raise NotRankedError('The dead state must loop to itself on every symbol')


def _validate_ranks(automaton: RankedNFA | RankedDFA, live: list[int]):
    ranks = automaton.ranks
    if ranks[automaton.initial] != automaton.ell:
        raise NotRankedError(f'Initial state has rank {ranks[automaton.initial]}, expected {automaton.ell}')
    if ranks[automaton.final] != 0:
        raise NotRankedError(f'Final state has rank {ranks[automaton.final]}, expected 0')

    dead = getattr(automaton, 'dead', None)
    for state in live:
        rank = ranks[state]
        if rank is None or not 0 <= rank <= automaton.ell:
            raise NotRankedError(f'State {state} has rank {rank} outside [0, {automaton.ell}]')
        for symbol in range(automaton.alphabet.k):
            for target in raw_targets(automaton, state, symbol):
                if target != dead and ranks[target] != rank - 1:
                    raise NotRankedError(
                        f'Transition {state} -{symbol}-> {target} goes from rank {rank} to rank {ranks[target]}'
                    )


def _validate_trim(automaton: RankedNFA | RankedDFA, live: list[int]):
    dead = getattr(automaton, 'dead', None)
    forward = set(reachable(automaton))
    backward = coreachable(automaton, [automaton.final])
    for state in live:
        if state not in forward:
            raise NotTrimError(f'State {state} is unreachable from the initial state')
        if state not in backward:
            raise NotTrimError(f'State {state} cannot reach the final state')
    if dead is not None and dead in backward:
        raise NotTrimError('The dead state reaches the final state')


def validate(automaton: Automaton) -> WidthProfile:
    if not isinstance(automaton, (RankedNFA, RankedDFA)):
        raise NotRankedError('General automata carry no ranks')

    if isinstance(automaton, RankedDFA):
        _validate_dead(automaton)
        live = automaton.live_states
    else:
        live = list(range(automaton.size))

    _validate_ranks(automaton, live)
    _validate_trim(automaton, live)

    widths = [0] * (automaton.ell + 1)
    for state in live:
        widths[automaton.ell - automaton.ranks[state]] += 1

    has_dead = isinstance(automaton, RankedDFA) and automaton.dead in set(reachable(automaton))
    return WidthProfile(widths=tuple(widths), has_dead=has_dead)
