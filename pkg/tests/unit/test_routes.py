import pytest

from src.apps.automata.construction import determinize
from src.apps.automata.minimization import minimize_ranked
from src.apps.bench.sampling import point_rng, random_language
from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.dto import Alphabet, BlockLanguage
from src.apps.bitmaps.operations import bit_and, bit_not_block, bit_or, concat_bitmap, reversal_bitmap, toggle_word
from src.apps.bitmaps.words import from_words, index_to_word
from src.apps.operations.products import complement_dfa, concat_dfa, intersect_dfa, union_dfa
from src.apps.operations.services import OperationService
from src.apps.synthesis.builders import min_dfa_from_bitmap
from src.apps.synthesis.services import ComplexityService

BINARY = Alphabet(k=2)


def _every_language(ell: int):
    size = 2**ell
    for value in range(1, 2**size):
        yield BlockLanguage(alphabet=BINARY, ell=ell, bits=Bitmap.from_string(format(value, f'0{size}b')))


def _check_routes(lang: BlockLanguage, complexity_service: ComplexityService, operation_service: OperationService):
    """Every operation built on bitmaps must give the same minimal DFA as its automaton construction."""
    analysis = complexity_service.analyze(lang)
    dfa = analysis.dfa
    assert minimize_ranked(dfa) == dfa
    assert minimize_ranked(determinize(analysis.nfa)) == dfa
    assert analysis.report.nsc <= analysis.report.dsc

    reversed_lang = reversal_bitmap(lang)
    reversed_dfa = min_dfa_from_bitmap(reversed_lang)
    assert operation_service.reverse_via_automaton(lang) == reversed_dfa

    assert union_dfa(dfa, reversed_dfa) == min_dfa_from_bitmap(bit_or(lang, reversed_lang))
    common = bit_and(lang, reversed_lang)
    if not common.is_empty:
        assert intersect_dfa(dfa, reversed_dfa) == min_dfa_from_bitmap(common)
    if lang.word_count < lang.size:
        assert complement_dfa(dfa) == min_dfa_from_bitmap(bit_not_block(lang))

    word = index_to_word(BINARY, lang.ell, lang.size - 1)
    singleton = min_dfa_from_bitmap(from_words(BINARY, lang.ell, [word]))
    toggled = toggle_word(lang, word)
    if lang.bits[lang.size - 1]:
        if not toggled.is_empty:
            assert intersect_dfa(dfa, complement_dfa(singleton)) == min_dfa_from_bitmap(toggled)
    else:
        assert union_dfa(dfa, singleton) == min_dfa_from_bitmap(toggled)

    assert concat_dfa(dfa, reversed_dfa) == min_dfa_from_bitmap(concat_bitmap(lang, reversed_lang))


class TestRouteSweep:
    @pytest.mark.parametrize('ell', [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_every_language(
        self, complexity_service: ComplexityService, lenient_operation_service: OperationService, ell: int
    ):
        for lang in _every_language(ell):
            _check_routes(lang, complexity_service, lenient_operation_service)

    @pytest.mark.parametrize('sample', [300, pytest.param(10_000, marks=pytest.mark.slow)])
    def test_seeded_languages(
        self, complexity_service: ComplexityService, lenient_operation_service: OperationService, sample: int
    ):
        for seed in range(sample):
            rng = point_rng(seed)
            ell = int(rng.integers(1, 5))
            lang = random_language(BINARY, ell, rng, float(rng.uniform(0.1, 0.9)))
            _check_routes(lang, complexity_service, lenient_operation_service)
