from itertools import product

import pytest
from factory.random import reseed_random
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from src.apps.automata.construction import determinize, determinize_general, reverse_nfa, to_general
from src.apps.automata.dto import GeneralDFA, GeneralNFA, RankedDFA, RankedNFA
from src.apps.automata.errors import NotRankedError, NotTrimError
from src.apps.automata.language import accepts, enumerate_language, equivalent
from src.apps.automata.minimization import minimize_general, minimize_ranked
from src.apps.automata.validators import validate
from src.apps.bitmaps.dto import Alphabet, BlockLanguage
from src.apps.bitmaps.errors import EmptyLanguageError
from src.apps.bitmaps.operations import reversal_bitmap
from src.apps.synthesis.builders import min_dfa_from_bitmap, min_nfa_from_bitmap
from tests.factories.languages import BlockLanguageFactory

BINARY = Alphabet(k=2)
NONE = frozenset()


def _nfa(ranks: tuple[int, ...], edges: dict[tuple[int, int], set[int]], final: int) -> RankedNFA:
    return RankedNFA(
        alphabet=BINARY,
        ell=ranks[0],
        ranks=ranks,
        initial=0,
        final=final,
        delta=tuple(
            tuple(frozenset(edges.get((state, symbol), set())) for symbol in range(2)) for state in range(len(ranks))
        ),
    )


class TestValidate:
    def test_width_profile_of_example(self, example_language: BlockLanguage):
        profile = validate(min_dfa_from_bitmap(example_language))
        assert profile.widths == (1, 2, 4, 3, 1)
        assert profile.has_dead
        assert profile.states == 12
        assert profile.width(2) == 4
        assert profile.max_width == 4

    def test_cross_rank_transition(self):
        with pytest.raises(NotRankedError):
            validate(_nfa((2, 1, 0), {(0, 0): {2}, (1, 0): {2}}, final=2))

    def test_unreachable_state(self):
        with pytest.raises(NotTrimError):
            validate(_nfa((2, 1, 1, 0), {(0, 0): {1}, (1, 0): {3}, (2, 0): {3}}, final=3))

    def test_dead_end_state(self):
        with pytest.raises(NotTrimError):
            validate(_nfa((2, 1, 1, 0), {(0, 0): {1}, (0, 1): {2}, (1, 0): {3}}, final=3))

    def test_general_automata_are_not_ranked(self):
        dfa = GeneralDFA(alphabet=BINARY, initial=0, finals=frozenset((0,)), delta=((0, 0),))
        with pytest.raises(NotRankedError):
            validate(dfa)


class TestMinimization:
    def test_merges_equivalent_states(self):
        # {aa, ba} with one rank-1 state per first symbol
        dfa = RankedDFA(
            alphabet=BINARY,
            ell=2,
            ranks=(2, 1, 1, 0, None),
            initial=0,
            final=3,
            dead=4,
            delta=((1, 2), (3, 4), (3, 4), (4, 4), (4, 4)),
        )
        minimal = minimize_ranked(dfa)
        assert minimal.size == 4
        assert validate(minimal).widths == (1, 1, 1)
        assert enumerate_language(minimal) == enumerate_language(dfa)

    def test_unreachable_final_is_empty(self):
        dfa = RankedDFA(
            alphabet=BINARY,
            ell=1,
            ranks=(1, 0, None),
            initial=0,
            final=1,
            dead=2,
            delta=((2, 2), (2, 2), (2, 2)),
        )
        with pytest.raises(EmptyLanguageError):
            minimize_ranked(dfa)

    def test_general_minimization(self):
        dfa = GeneralDFA(
            alphabet=Alphabet(k=1),
            initial=0,
            finals=frozenset((1, 2)),
            delta=((1,), (2,), (1,)),
        )
        assert minimize_general(dfa).size == 2


class TestConstructions:
    def test_min_dfa_accepts_its_words(self, example_language: BlockLanguage):
        dfa = min_dfa_from_bitmap(example_language)
        assert dfa.initial == 0
        assert accepts(dfa, 'aaaa')
        assert not accepts(dfa, 'abaa')
        assert not accepts(dfa, 'aaa')

    @pytest.mark.parametrize('seed', range(5))
    def test_bitmap_and_automaton_agree(self, seed: int):
        reseed_random(seed)
        lang = BlockLanguageFactory(ell=4)
        dfa = min_dfa_from_bitmap(lang)
        assert enumerate_language(dfa) == lang
        assert minimize_ranked(determinize(min_nfa_from_bitmap(lang))) == dfa

    def test_reversal_routes_agree(self, e5: BlockLanguage):
        reversed_dfa = minimize_ranked(determinize(reverse_nfa(min_dfa_from_bitmap(e5))))
        assert reversed_dfa == min_dfa_from_bitmap(reversal_bitmap(e5))

    def test_equivalence(self, example_language: BlockLanguage):
        dfa = min_dfa_from_bitmap(example_language)
        nfa = min_nfa_from_bitmap(example_language)
        assert equivalent(dfa, nfa)
        assert equivalent(to_general(dfa), nfa)
        assert not equivalent(dfa, min_dfa_from_bitmap(BlockLanguage.full(BINARY, 4)))

    def test_general_subset_construction(self):
        # words ending in b
        nfa = GeneralNFA(
            alphabet=BINARY,
            initial=0,
            finals=frozenset((1,)),
            delta=((frozenset((0,)), frozenset((0, 1))), (NONE, NONE)),
        )
        dfa = determinize_general(nfa)
        assert accepts(dfa, 'aab')
        assert accepts(dfa, 'bab')
        assert not accepts(dfa, 'aba')
        assert minimize_general(dfa).size == 2


@st.composite
def factory_languages(draw, max_ell: int = 4) -> BlockLanguage:
    reseed_random(draw(st.integers(min_value=0, max_value=2**16)))
    k = draw(st.sampled_from([2, 3]))
    ell = draw(st.integers(min_value=1, max_value=max_ell if k == 2 else 3))
    return BlockLanguageFactory(k=k, ell=ell, density=draw(st.sampled_from([0.2, 0.5, 0.8])))


def _right_language(dfa: RankedDFA, state: int) -> frozenset[tuple[int, ...]]:
    accepted = set()
    for suffix in product(range(dfa.alphabet.k), repeat=dfa.ranks[state]):
        current = state
        for symbol in suffix:
            current = dfa.delta[current][symbol]
            if current is None:
                break
        if current == dfa.final:
            accepted.add(suffix)
    return frozenset(accepted)


def _through_reversal(lang: BlockLanguage) -> RankedDFA:
    # subset construction on the reversed minimal DFA, usually far from minimal
    return determinize(reverse_nfa(min_dfa_from_bitmap(reversal_bitmap(lang))))


class TestMinimizationProperties:
    @given(factory_languages())
    @hypothesis_settings(max_examples=50, deadline=None)
    def test_live_states_are_pairwise_distinguishable(self, lang: BlockLanguage):
        minimal = minimize_ranked(_through_reversal(lang))
        right_languages = [_right_language(minimal, state) for state in minimal.live_states]
        assert all(right_languages)
        assert len(set(right_languages)) == len(right_languages)
        assert minimal == min_dfa_from_bitmap(lang)

    @given(factory_languages())
    @hypothesis_settings(max_examples=50, deadline=None)
    def test_ranked_minimization_is_idempotent(self, lang: BlockLanguage):
        dfa = min_dfa_from_bitmap(lang)
        assert minimize_ranked(dfa) == dfa
        once = minimize_ranked(_through_reversal(lang))
        assert minimize_ranked(once) == once

    @given(factory_languages())
    @hypothesis_settings(max_examples=50, deadline=None)
    def test_general_minimization_is_idempotent(self, lang: BlockLanguage):
        dfa = min_dfa_from_bitmap(lang)
        once = minimize_general(to_general(_through_reversal(lang)))
        assert minimize_general(once) == once
        assert once == minimize_general(to_general(dfa))
        assert once.size == dfa.size
