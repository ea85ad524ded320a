import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.dto import ZERO_BLOCK, Alphabet, BlockLanguage
from src.apps.bitmaps.errors import (
    BitmapOverflowError,
    IndexOutOfRangeError,
    InvalidWordError,
    LengthMismatchError,
    ShuffleArityMismatchError,
)
from src.apps.bitmaps.factors import factor, factor_sets
from src.apps.bitmaps.operations import (
    bit_and,
    bit_not_block,
    bit_or,
    concat_bitmap,
    perfect_shuffle,
    reversal_bitmap,
    toggle_word,
)
from src.apps.bitmaps.words import from_words, index_to_word, to_words, word_to_index
from src.core.config import settings
from tests.conftest import EXAMPLE_BITMAP
from tests.utils.oracles import language_of, word_set


def languages(max_k: int = 3, max_ell: int = 4):
    @st.composite
    def build(draw):
        k = draw(st.integers(min_value=1, max_value=max_k))
        ell = draw(st.integers(min_value=1, max_value=max_ell if k < 3 else 3))
        bits = draw(st.lists(st.booleans(), min_size=k**ell, max_size=k**ell))
        return BlockLanguage(alphabet=Alphabet(k=k), ell=ell, bits=Bitmap.from_bits(bits))

    return build()


class TestBitmap:
    def test_text_round_trip(self):
        bitmap = Bitmap.from_string(EXAMPLE_BITMAP)
        assert bitmap.to_string() == EXAMPLE_BITMAP
        assert len(bitmap) == 16
        assert bitmap.popcount() == 10
        assert bitmap[0] == 1 and bitmap[1] == 0

    def test_rejects_non_binary_text(self):
        with pytest.raises(ValueError):
            Bitmap.from_string('0120')

    def test_from_int(self):
        bitmap = Bitmap.from_int(5, 4)
        assert bitmap.to_string() == '0101'
        assert bitmap.as_int() == 5
        with pytest.raises(ValueError):
            Bitmap.from_int(16, 4)

    def test_aligned_slice_shares_storage(self):
        bitmap = Bitmap.from_string(EXAMPLE_BITMAP)
        tail = bitmap.slice(8, 8)
        assert tail.to_string() == '00011110'
        assert np.shares_memory(tail.packed, bitmap.packed)

    def test_unaligned_slice(self):
        assert Bitmap.from_string(EXAMPLE_BITMAP).slice(3, 6).to_string() == '101110'

    def test_slice_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            Bitmap.from_string('1010').slice(2, 3)

    def test_flip_keeps_original(self):
        bitmap = Bitmap.from_string(EXAMPLE_BITMAP)
        assert bitmap.flip(1).to_string() == '1111011100011110'
        assert bitmap.to_string() == EXAMPLE_BITMAP

    def test_invert_clears_padding(self):
        inverted = ~Bitmap.from_string('101')
        assert inverted.to_string() == '010'
        assert int(inverted.packed[0]) == 0b01000000
        assert inverted == Bitmap.from_string('010')

    def test_boolean_operators(self):
        left, right = Bitmap.from_string('1100'), Bitmap.from_string('1010')
        assert (left & right).to_string() == '1000'
        assert (left | right).to_string() == '1110'
        assert (left & right).is_subset_of(left)
        assert not left.is_subset_of(right)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            Bitmap.from_string('10') & Bitmap.from_string('100')

    def test_get_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            Bitmap.from_string('10')[2]

    def test_order_is_length_first(self):
        assert Bitmap.from_string('1') < Bitmap.from_string('00')
        assert Bitmap.from_string('01') < Bitmap.from_string('10')

    @pytest.mark.parametrize('parts', [['10110111', '00011110'], ['101', '11', '0']])
    def test_concat(self, parts: list[str]):
        joined = Bitmap.concat([Bitmap.from_string(part) for part in parts])
        assert joined.to_string() == ''.join(parts)


class TestWords:
    def test_index_is_base_k_value(self, binary: Alphabet):
        assert word_to_index(binary, 3, 'aba') == 2
        assert index_to_word(binary, 3, 2) == 'aba'
        assert word_to_index(Alphabet(k=3), 2, 'cb') == 7

    def test_numeric_glyphs_for_large_alphabets(self):
        alphabet = Alphabet(k=30)
        assert alphabet.render((0, 29)) == 's0,s29'
        assert alphabet.parse('s0,s29') == (0, 29)

    @pytest.mark.parametrize('word', ['ab', 'abc', 'abz'])
    def test_invalid_words(self, binary: Alphabet, word: str):
        with pytest.raises(InvalidWordError):
            word_to_index(binary, 3, word)

    def test_index_out_of_range(self, binary: Alphabet):
        with pytest.raises(IndexOutOfRangeError):
            index_to_word(binary, 2, 4)

    def test_words_round_trip(self, binary: Alphabet):
        lang = from_words(binary, 3, ['aab', 'bba', 'aab'])
        assert lang.bits.to_string() == '01000010'
        assert to_words(lang) == {'aab', 'bba'}
        assert lang.word_count == 2


class TestBlockLanguage:
    def test_bitmap_must_match_block(self, binary: Alphabet):
        with pytest.raises(LengthMismatchError):
            BlockLanguage(alphabet=binary, ell=3, bits=Bitmap.zeros(4))

    def test_ell_must_be_positive(self, binary: Alphabet):
        with pytest.raises(ValueError):
            BlockLanguage(alphabet=binary, ell=0, bits=Bitmap.ones(1))

    def test_unary_block(self):
        lang = BlockLanguage.full(Alphabet(k=1), 5)
        assert lang.size == 1
        assert lang.word_count == 1

    def test_capacity_is_read_at_call_time(self, binary: Alphabet, monkeypatch):
        monkeypatch.setattr(settings, 'BITMAP_CAP', 8)
        BlockLanguage.full(binary, 3)
        with pytest.raises(BitmapOverflowError):
            BlockLanguage.full(binary, 4)


class TestFactors:
    def test_factor_is_a_slice(self, example_language: BlockLanguage):
        assert factor(example_language, 2, 1).content.to_string() == '0111'
        assert factor(example_language, 4, 0).content.to_string() == EXAMPLE_BITMAP
        with pytest.raises(IndexOutOfRangeError):
            factor(example_language, 2, 4)
        with pytest.raises(IndexOutOfRangeError):
            factor(example_language, 5, 0)

    def test_factor_sets_of_example(self, example_language: BlockLanguage):
        sets = factor_sets(example_language)
        assert sets.widths == (1, 2, 4, 3, 1)
        assert [member.to_string() for member in sets[1]] == ['10', '11', '01']
        assert [member.to_string() for member in sets[2]] == ['1011', '0111', '0001', '1110']
        assert sets.first_index[1] == (0, 1, 2)
        assert sets.children[2][0] == (0, 1)
        assert sets.children[2][2] == (ZERO_BLOCK, 2)
        assert sets.total == 11

    def test_zero_factors_are_skipped(self, binary: Alphabet):
        sets = factor_sets(from_words(binary, 2, ['bb']))
        assert sets.widths == (1, 1, 1)
        assert sets.children[2] == ((ZERO_BLOCK, 0),)


class TestBitmapOperations:
    def test_perfect_shuffle(self):
        parts = [Bitmap.from_string('0011'), Bitmap.from_string('0101')]
        assert perfect_shuffle(parts, 1).to_string() == '00011011'
        assert perfect_shuffle(parts, 2).to_string() == '00011101'

    def test_perfect_shuffle_arity(self):
        with pytest.raises(ShuffleArityMismatchError):
            perfect_shuffle([Bitmap.from_string('0011'), Bitmap.from_string('01')], 1)
        with pytest.raises(ShuffleArityMismatchError):
            perfect_shuffle([Bitmap.from_string('0011'), Bitmap.from_string('0101')], 3)

    @pytest.mark.parametrize('index', range(8))
    def test_reversal_shuffles_positions(self, binary: Alphabet, index: int):
        after_first, after_second = [0, 4, 1, 5, 2, 6, 3, 7], [0, 4, 2, 6, 1, 5, 3, 7]
        one_hot = Bitmap.from_bits([position == index for position in range(8)])
        first = perfect_shuffle([one_hot.slice(0, 4), one_hot.slice(4, 4)], 1)
        second = perfect_shuffle([first.slice(0, 4), first.slice(4, 4)], 2)
        assert first.ones_positions().tolist() == [after_first.index(index)]
        assert second.ones_positions().tolist() == [after_second.index(index)]
        reversed_lang = reversal_bitmap(BlockLanguage(alphabet=binary, ell=3, bits=one_hot))
        assert reversed_lang.bits == second

    def test_reversal_of_three_words(self, binary: Alphabet):
        lang = BlockLanguage(alphabet=binary, ell=3, bits=Bitmap.from_string('10011000'))
        assert to_words(lang) == {'aaa', 'abb', 'baa'}
        reversed_lang = reversal_bitmap(lang)
        assert reversed_lang.bits.to_string() == '11000010'
        assert to_words(reversed_lang) == {'aaa', 'bba', 'aab'}

    def test_reversal_of_example(self, example_language: BlockLanguage):
        reversed_words = {word[::-1] for word in word_set(example_language)}
        assert word_set(reversal_bitmap(example_language)) == reversed_words

    def test_concat_singletons(self, binary: Alphabet):
        result = concat_bitmap(from_words(binary, 1, ['a']), from_words(binary, 1, ['b']))
        assert result.ell == 2
        assert result.bits.to_string() == '0100'

    def test_boolean_operands_must_share_block(self, binary: Alphabet):
        with pytest.raises(LengthMismatchError):
            bit_and(BlockLanguage.full(binary, 2), BlockLanguage.full(binary, 3))
        with pytest.raises(LengthMismatchError):
            bit_or(BlockLanguage.full(binary, 2), BlockLanguage.full(Alphabet(k=3), 2))

    def test_toggle_word(self, example_language: BlockLanguage):
        toggled = toggle_word(example_language, 'abab')
        assert toggled.bits[word_to_index(example_language.alphabet, 4, 'abab')] == 0
        assert toggle_word(toggled, 'abab') == example_language

    def test_concat_capacity(self, binary: Alphabet, monkeypatch):
        monkeypatch.setattr(settings, 'BITMAP_CAP', 8)
        with pytest.raises(BitmapOverflowError):
            concat_bitmap(BlockLanguage.full(binary, 2), BlockLanguage.full(binary, 2))


class TestBitmapProperties:
    @given(languages())
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_reversal_matches_word_reversal(self, lang: BlockLanguage):
        assert word_set(reversal_bitmap(lang)) == {word[::-1] for word in word_set(lang)}
        assert reversal_bitmap(reversal_bitmap(lang)) == lang

    @given(languages(max_k=2, max_ell=3), languages(max_k=2, max_ell=3))
    @hypothesis_settings(max_examples=40, deadline=None)
    def test_concat_matches_word_concat(self, lhs: BlockLanguage, rhs: BlockLanguage):
        if lhs.k != rhs.k:
            return
        expected = {left + right for left in word_set(lhs) for right in word_set(rhs)}
        assert concat_bitmap(lhs, rhs) == language_of(lhs.k, lhs.ell + rhs.ell, expected)

    @given(languages(), st.data())
    @hypothesis_settings(max_examples=40, deadline=None)
    def test_de_morgan_on_blocks(self, lhs: BlockLanguage, data):
        bits = data.draw(st.lists(st.booleans(), min_size=lhs.size, max_size=lhs.size))
        rhs = BlockLanguage(alphabet=lhs.alphabet, ell=lhs.ell, bits=Bitmap.from_bits(bits))
        assert bit_not_block(bit_and(lhs, rhs)) == bit_or(bit_not_block(lhs), bit_not_block(rhs))
        assert bit_not_block(bit_not_block(lhs)) == lhs
