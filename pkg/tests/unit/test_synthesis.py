import pytest
from factory.random import reseed_random

from src.apps.automata.language import enumerate_language
from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.dto import Alphabet, BlockLanguage
from src.apps.bitmaps.errors import EmptyLanguageError
from src.apps.bitmaps.words import from_words
from src.apps.synthesis.builders import min_dfa_from_bitmap, synthesize_nfa
from src.apps.synthesis.covers import minimal_cover
from src.apps.synthesis.errors import CoverBudgetExceededError
from src.apps.synthesis.services import (
    EMPTY_LANGUAGE_NOTE,
    INEXACT_NSC_NOTE,
    PER_RANK_COVER_NOTE,
    ComplexityService,
)
from src.apps.witnesses.families import witness_parity
from tests.factories.languages import BlockLanguageFactory
from tests.utils.oracles import all_words, brute_dsc

BINARY = Alphabet(k=2)


def _palindromes(ell: int) -> BlockLanguage:
    return from_words(BINARY, ell, [word for word in all_words(2, ell) if word == word[::-1]])


def _bitmaps(*texts: str) -> list[Bitmap]:
    return [Bitmap.from_string(text) for text in texts]


class TestMinimalCover:
    def test_shares_members_between_targets(self):
        cover = minimal_cover(_bitmaps('11', '10', '01'), _bitmaps('1'), rank=1)
        assert cover.members == tuple(_bitmaps('01', '10'))
        assert set(cover.covering(Bitmap.from_string('11'))) == set(_bitmaps('01', '10'))
        assert cover.exact

    def test_members_stay_below_their_targets(self, example_language: BlockLanguage):
        for cover in synthesize_nfa(example_language).covers:
            for target in cover.targets:
                covering = cover.covering(target)
                assert all(member.is_subset_of(target) for member in covering)

    def test_outer_covers_are_trivial(self, example_language: BlockLanguage):
        covers = synthesize_nfa(example_language).covers
        assert covers[-1].members == (example_language.bits,)
        assert covers[0].members == (Bitmap.ones(1),)

    def test_budget_keeps_a_fallback_cover(self):
        with pytest.raises(CoverBudgetExceededError) as exc_info:
            minimal_cover(_bitmaps('11', '10', '01'), _bitmaps('1'), rank=1, budget=1)
        fallback = exc_info.value.greedy_cover
        assert fallback is not None
        assert not fallback.exact
        assert len(fallback.members) == 3

    def test_empty_targets(self):
        with pytest.raises(ValueError):
            minimal_cover([], _bitmaps('1'))


class TestSynthesis:
    def test_dfa_of_example(self, example_language: BlockLanguage):
        dfa = min_dfa_from_bitmap(example_language)
        assert dfa.size == 12
        assert dfa.ranks[dfa.dead] is None

    def test_empty_language(self, binary: Alphabet):
        with pytest.raises(EmptyLanguageError):
            min_dfa_from_bitmap(BlockLanguage.empty(binary, 3))
        with pytest.raises(EmptyLanguageError):
            synthesize_nfa(BlockLanguage.empty(binary, 3))

    @pytest.mark.parametrize('seed', range(8))
    def test_synthesized_automata_accept_the_language(self, seed: int):
        reseed_random(seed)
        lang = BlockLanguageFactory(ell=4, density=0.4)
        synthesized = synthesize_nfa(lang)
        assert enumerate_language(synthesized.nfa) == lang
        assert min_dfa_from_bitmap(lang).size == brute_dsc(lang)

    def test_allow_greedy_marks_result_inexact(self, example_language: BlockLanguage):
        with pytest.raises(CoverBudgetExceededError):
            synthesize_nfa(example_language, budget=1)
        synthesized = synthesize_nfa(example_language, budget=1, allow_greedy=True)
        assert not synthesized.exact
        assert enumerate_language(synthesized.nfa) == example_language


class TestComplexityService:
    def test_measure_example(self, complexity_service: ComplexityService, example_language: BlockLanguage):
        report = complexity_service.measure(example_language)
        assert report.dsc == 12
        assert report.dsc_without_dead == 11
        assert report.dfa_widths.widths == (1, 2, 4, 3, 1)
        assert report.nsc <= 11
        assert report.words == 10
        assert report.nsc_exact
        assert report.formula_values['max_dsc'] == 12
        assert PER_RANK_COVER_NOTE in report.notes

    def test_measure_e5(self, complexity_service: ComplexityService, e5: BlockLanguage):
        report = complexity_service.measure(e5, with_nsc=False)
        assert report.dsc == 20
        assert report.dfa_widths.widths == (1, 2, 4, 8, 3, 1)
        assert report.dfa_widths.has_dead
        assert report.nsc is None

    def test_full_language_is_a_chain(self, complexity_service: ComplexityService):
        report = complexity_service.measure(BlockLanguage.full(BINARY, 4))
        assert report.dsc == 6
        assert report.nsc == 5

    @pytest.mark.parametrize(
        'ell, dsc, nsc',
        [
            (4, 11, 10),
            (6, 23, 22),
        ],
    )
    def test_palindromes(self, complexity_service: ComplexityService, ell: int, dsc: int, nsc: int):
        report = complexity_service.measure(_palindromes(ell))
        assert (report.dsc, report.nsc) == (dsc, nsc)

    @pytest.mark.parametrize(
        'x, widths',
        [
            (0, (1, 2, 2, 2, 1)),
            (1, (1, 1, 2, 1, 1)),
        ],
    )
    def test_parity_widths(self, complexity_service: ComplexityService, x: int, widths: tuple[int, ...]):
        report = complexity_service.measure(witness_parity(2, 2, x), with_nsc=False)
        assert report.dfa_widths.widths == widths

    def test_empty_language(self, complexity_service: ComplexityService, binary: Alphabet):
        with pytest.raises(EmptyLanguageError):
            complexity_service.measure(BlockLanguage.empty(binary, 3))
        report = complexity_service.measure(BlockLanguage.empty(binary, 3), allow_empty=True)
        assert report.dsc == 1
        assert report.nsc is None
        assert report.words == 0
        assert EMPTY_LANGUAGE_NOTE in report.notes

    def test_budget_marks_nsc_inexact(self, example_language: BlockLanguage):
        report = ComplexityService(cover_budget=1).measure(example_language)
        assert not report.nsc_exact
        assert INEXACT_NSC_NOTE in report.notes
        assert report.nsc <= report.dsc_without_dead

    def test_unary_language(self, complexity_service: ComplexityService):
        report = complexity_service.measure(BlockLanguage.full(Alphabet(k=1), 3))
        assert report.dsc == 5
        assert report.nsc == 4
        assert report.formula_values == {}

    @pytest.mark.parametrize('seed', range(6))
    def test_nsc_never_exceeds_live_dsc(self, complexity_service: ComplexityService, seed: int):
        reseed_random(seed)
        report = complexity_service.measure(BlockLanguageFactory(ell=4))
        assert report.nsc <= report.dsc_without_dead
        assert sum(report.dfa_widths.widths) + 1 == report.dsc
