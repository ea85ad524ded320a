from typing import Optional

from src.apps.automata.construction import determinize_general
from src.apps.automata.dto import GeneralDFA, GeneralNFA, RankedDFA, RankedNFA
from src.apps.automata.minimization import minimize_general
from src.apps.automata.validators import validate
from src.apps.bitmaps.dto import BlockLanguage
from src.apps.synthesis.builders import min_dfa_from_bitmap, synthesize_nfa


def _complete_rows(dfa: RankedDFA) -> list[list[int]]:
    dead = dfa.dead if dfa.dead is not None else dfa.size
    rows = [[dead if target is None else target for target in row] for row in dfa.delta]
    if dead == dfa.size:
        rows.append([dead] * dfa.alphabet.k)
    return rows


def star_dfa(dfa: RankedDFA) -> GeneralDFA:
    """Drop the final state, send its incoming edges back to the initial state and accept there."""
    validate(dfa)
    rows = _complete_rows(dfa)
    kept = [state for state in range(len(rows)) if state != dfa.final]
    renumber = {state: position for position, state in enumerate(kept)}
    renumber[dfa.final] = renumber[dfa.initial]
    return GeneralDFA(
        alphabet=dfa.alphabet,
        initial=renumber[dfa.initial],
        finals=frozenset((renumber[dfa.initial],)),
        delta=tuple(tuple(renumber[target] for target in rows[state]) for state in kept),
    )


def plus_dfa(dfa: RankedDFA) -> GeneralDFA:
    """The final state keeps accepting and reads on as the initial state does."""
    validate(dfa)
    rows = _complete_rows(dfa)
    rows[dfa.final] = list(rows[dfa.initial])
    return GeneralDFA(
        alphabet=dfa.alphabet,
        initial=dfa.initial,
        finals=frozenset((dfa.final,)),
        delta=tuple(tuple(row) for row in rows),
    )


def star_nfa_from(nfa: RankedNFA) -> GeneralNFA:
    validate(nfa)
    kept = [state for state in range(nfa.size) if state != nfa.final]
    renumber = {state: position for position, state in enumerate(kept)}
    renumber[nfa.final] = renumber[nfa.initial]
    return GeneralNFA(
        alphabet=nfa.alphabet,
        initial=renumber[nfa.initial],
        finals=frozenset((renumber[nfa.initial],)),
        delta=tuple(
            tuple(frozenset(renumber[target] for target in targets) for targets in nfa.delta[state]) for state in kept
        ),
    )


def plus_nfa_from(nfa: RankedNFA) -> GeneralNFA:
    validate(nfa)
    delta = list(nfa.delta)
    delta[nfa.final] = nfa.delta[nfa.initial]
    return GeneralNFA(alphabet=nfa.alphabet, initial=nfa.initial, finals=frozenset((nfa.final,)), delta=tuple(delta))


def star(lang: BlockLanguage) -> GeneralDFA:
    return minimize_general(star_dfa(min_dfa_from_bitmap(lang)))


def plus(lang: BlockLanguage) -> GeneralDFA:
    return minimize_general(plus_dfa(min_dfa_from_bitmap(lang)))


def star_nfa(lang: BlockLanguage, budget: Optional[int] = None) -> GeneralNFA:
    return star_nfa_from(synthesize_nfa(lang, budget=budget, allow_greedy=True).nfa)


def plus_nfa(lang: BlockLanguage, budget: Optional[int] = None) -> GeneralNFA:
    return plus_nfa_from(synthesize_nfa(lang, budget=budget, allow_greedy=True).nfa)


def determinized(nfa: GeneralNFA) -> GeneralDFA:
    return minimize_general(determinize_general(nfa))
