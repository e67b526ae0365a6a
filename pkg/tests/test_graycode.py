import pytest

from pynumgray.basis import NumerationBasis, SequenceSpec
from pynumgray.codec import DigitString
from pynumgray.config import Settings, SizeGuardError
from pynumgray.graycode import (Block, GrayCursor, LengthMismatchError, avoiding_blocks, brgc_blocks, brgc_cursor,
                                brgc_full_history_list, brgc_list, gray_language, gray_language_list, hamming,
                                oriented)
from pynumgray.language import binary_strings, language_by_recursion


def texts(strings):
    return [str(string) for string in strings]


def consecutive_distances(strings):
    return {hamming(a, b) for a, b in zip(strings, strings[1:])}


def test_brgc_examples():
    assert texts(brgc_list(0)) == ['']
    assert texts(brgc_list(1)) == ['0', '1']
    assert texts(brgc_list(2)) == ['01', '00', '10', '11']
    assert texts(brgc_full_history_list(2)) == ['01', '00', '10', '11']
    assert texts(brgc_full_history_list(0)) == ['']
    assert brgc_full_history_list(3) == brgc_list(3)


@pytest.mark.parametrize('m', range(1, 17))
def test_brgc_is_a_gray_code(m):
    strings = brgc_list(m)
    assert len(strings) == 2 ** m
    assert {string.digits for string in strings} == binary_strings(m).as_set()
    assert consecutive_distances(strings) == {1}


def test_brgc_full_history_matches():
    for m in range(15):
        assert brgc_full_history_list(m) == brgc_list(m)


def test_brgc_cursor_matches_list():
    for m in range(13):
        assert list(brgc_cursor(m)) == brgc_list(m)
    assert next(brgc_cursor(3)).basis_tag == 'pow2'


def test_gray_language_examples():
    assert texts(gray_language(2, 2)) == ['01', '00', '10']
    assert texts(gray_language(2, 3)) == ['010', '000', '001', '101', '100']
    assert texts(gray_language(3, 2)) == ['01', '00', '10', '11']
    assert texts(gray_language(2, 0)) == ['']
    with pytest.raises(ValueError):
        gray_language(1, 3)


@pytest.mark.parametrize('k', [2, 3, 4])
def test_gray_language_properties(k):
    basis = NumerationBasis(SequenceSpec.kbonacci(k))
    previous = None
    for m in range(17):
        strings = list(gray_language(k, m))
        assert len(strings) == basis.term(m)
        assert {string.digits for string in strings} == language_by_recursion(k, m).as_set()
        assert len({string.digits for string in strings}) == len(strings)
        if m > 0:
            assert consecutive_distances(strings) <= {1}
            assert strings[0].digits == (0, *previous[-1].digits)
        previous = strings


@pytest.mark.parametrize('k', [2, 3])
def test_cursor_matches_eager_list(k):
    for m in range(13):
        assert list(gray_language(k, m)) == gray_language_list(k, m)


def test_eager_lists_are_guarded():
    with pytest.raises(ValueError):
        brgc_list(3, Settings(eager_gray_length=2))
    assert len(brgc_list(3, Settings(eager_gray_length=2, force=True))) == 8
    with pytest.raises(SizeGuardError):
        gray_language_list(2, 10, Settings(string_limit=100))
    with pytest.raises(SizeGuardError):
        brgc_list(10, Settings(string_limit=100))
    with pytest.raises(SizeGuardError):
        brgc_full_history_list(10, Settings(string_limit=100))
    assert gray_language_list(2, 6)[0].digits is not gray_language_list(2, 6)[0].digits


def test_cursor_state():
    cursor = gray_language(3, 10)
    assert cursor.current is None
    assert not cursor.exhausted

    deepest = 0
    for string in cursor:
        assert cursor.current == string
        deepest = max(deepest, cursor.depth)
    assert deepest <= 11
    assert cursor.exhausted
    assert cursor.current is None
    assert cursor.emitted == NumerationBasis(SequenceSpec.kbonacci(3)).term(10)
    assert list(cursor) == []


def test_cursor_with_custom_rule():
    cursor = GrayCursor(brgc_blocks, 2, render=lambda digits: ''.join(map(str, digits)))
    assert list(cursor) == ['01', '00', '10', '11']
    with pytest.raises(ValueError):
        GrayCursor(brgc_blocks, -1)


def test_block_rules():
    assert brgc_blocks(3) == [Block((0,), 2, True), Block((1,), 2, False)]
    assert avoiding_blocks(3)(2) == brgc_blocks(2)
    assert avoiding_blocks(3)(5) == [Block((0,), 4, True), Block((1, 0), 3, True), Block((1, 1, 0), 2, True)]
    assert oriented(brgc_blocks(3), True) == [Block((1,), 2, True), Block((0,), 2, False)]
    assert oriented(brgc_blocks(3), False) == brgc_blocks(3)


def test_hamming():
    assert hamming(DigitString((0, 1, 0)), DigitString((0, 0, 0))) == 1
    assert hamming(DigitString((1, 1)), DigitString((1, 1))) == 0
    assert hamming(DigitString((0, 1)), DigitString((1, 0))) == 2
    with pytest.raises(LengthMismatchError):
        hamming(DigitString((0, 1)), DigitString((0,)))
