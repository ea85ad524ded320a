from loguru import logger

from src.apps.automata.dto import GeneralDFA, RankedDFA
from src.apps.automata.utils import canonical_dfa, canonical_general, coreachable, reachable
from src.apps.bitmaps.errors import EmptyLanguageError

_DEAD_CLASS = -1


def minimize_ranked(dfa: RankedDFA) -> RankedDFA:
    """Merge equivalent states rank by rank from rank 0 upward.

    Within one rank two states are equivalent iff their successor classes agree symbol by symbol,
    so a single pass over the ranks suffices. States that cannot reach the final one collapse into Omega.
    """
    forward = set(reachable(dfa))
    if dfa.final not in forward:
        raise EmptyLanguageError('The automaton accepts no word')
    useful = forward & coreachable(dfa, [dfa.final])
    useful.discard(dfa.dead)

    by_rank: dict[int, list[int]] = {}
    for state in sorted(useful):
        by_rank.setdefault(dfa.ranks[state], []).append(state)

    state_class: dict[int, int] = {}
    representatives: list[int] = []
    for rank in range(dfa.ell + 1):
        signatures: dict[tuple[int, ...], int] = {}
        for state in by_rank.get(rank, []):
            signature = tuple(state_class.get(target, _DEAD_CLASS) for target in dfa.delta[state])
            if signature not in signatures:
                signatures[signature] = len(representatives)
                representatives.append(state)
            state_class[state] = signatures[signature]

    k = dfa.alphabet.k
    dead = len(representatives)
    delta = tuple(
        tuple(state_class.get(target, dead) for target in dfa.delta[state]) for state in representatives
    ) + ((dead,) * k,)
    merged = len(useful) - len(representatives)
    if merged:
        logger.debug('Merged {} equivalent states of a rank-{} DFA', merged, dfa.ell)

    return canonical_dfa(
        RankedDFA(
            alphabet=dfa.alphabet,
            ell=dfa.ell,
            ranks=tuple(dfa.ranks[state] for state in representatives) + (None,),
            initial=state_class[dfa.initial],
            final=state_class[dfa.final],
            dead=dead,
            delta=delta,
        )
    )


def _refine(dfa: GeneralDFA, states: list[int]) -> list[frozenset[int]]:
    k = dfa.alphabet.k
    incoming: list[dict[int, set[int]]] = [{} for _ in range(k)]
    for state in states:
        for symbol, target in enumerate(dfa.delta[state]):
            incoming[symbol].setdefault(target, set()).add(state)

    finals = frozenset(state for state in states if state in dfa.finals)
    others = frozenset(states) - finals
    partition = [block for block in (finals, others) if block]
    pending = [min(partition, key=len)] if len(partition) == 2 else list(partition)

    while pending:
        splitter = pending.pop()
        for symbol in range(k):
            sources = set().union(*(incoming[symbol].get(target, ()) for target in splitter))
            if not sources:
                continue
            refined = []
            for block in partition:
                inside = block & sources
                outside = block - inside
                if not inside or not outside:
                    refined.append(block)
                    continue
                refined.extend((inside, outside))
                if block in pending:
                    pending.remove(block)
                    pending.extend((inside, outside))
                else:
                    pending.append(min(inside, outside, key=len))
            partition = refined

    return partition


def minimize_general(dfa: GeneralDFA) -> GeneralDFA:
    """Hopcroft partition refinement over the reachable part of a complete DFA."""
    states = reachable(dfa)
    partition = _refine(dfa, states)
    block_of = {state: position for position, block in enumerate(partition) for state in block}
    representatives = [min(block) for block in partition]

    return canonical_general(
        GeneralDFA(
            alphabet=dfa.alphabet,
            initial=block_of[dfa.initial],
            finals=frozenset(block_of[state] for state in states if state in dfa.finals),
            delta=tuple(tuple(block_of[target] for target in dfa.delta[state]) for state in representatives),
        )
    )
