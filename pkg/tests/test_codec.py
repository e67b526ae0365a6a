import pytest
from hypothesis import given, settings, strategies as st

from pynumgray.basis import NumerationBasis, SequenceSpec
from pynumgray.codec import DigitOutOfRangeError, DigitString, TooLongError, canonical, decode, encode, is_valid, pad

from tests.test_basis import ALL_SPECS


BASES = [NumerationBasis(spec) for spec in ALL_SPECS]
PELL = NumerationBasis(SequenceSpec.pell())
FIB = NumerationBasis(SequenceSpec.kbonacci(2))


def digits(text):
    return DigitString.from_text(text)


def test_pell_golden_values():
    assert str(encode(PELL, 16)) == '1020'
    assert decode(PELL, digits('1020')) == 16


def test_encode_examples():
    assert str(encode(PELL, 0)) == '0'
    assert str(encode(FIB, 0)) == '0'
    assert str(encode(FIB, 4)) == '101'
    assert encode(PELL, 16).basis_tag == 'pell'


def test_decode_examples():
    assert decode(PELL, digits('0000')) == 0
    assert decode(NumerationBasis(SequenceSpec.kbonacci(3)), digits('110')) == 6
    assert decode(PELL, digits('')) == 0


def test_decode_digit_out_of_range():
    with pytest.raises(DigitOutOfRangeError) as err:
        decode(PELL, digits('1030'))
    assert err.value.position == 1
    assert err.value.digit == 3
    assert err.value.bound == 2

    with pytest.raises(DigitOutOfRangeError) as err:
        decode(FIB, digits('2'))
    assert err.value.position == 0


def test_is_valid_examples():
    assert not is_valid(PELL, digits('12'))
    assert not is_valid(FIB, digits('11'))
    assert is_valid(PELL, digits('11'))
    assert is_valid(PELL, digits('001020'))
    assert is_valid(PELL, digits(''))


def test_pad():
    assert str(pad(digits('1020'), 6)) == '001020'
    assert str(pad(digits('0'), 3)) == '000'
    assert str(pad(digits('0'), 0)) == ''
    assert str(pad(digits('001020'), 4)) == '1020'
    with pytest.raises(TooLongError):
        pad(digits('1020'), 3)


def test_text_rendering():
    assert str(DigitString((1, 0, 2, 0))) == '1020'
    assert str(DigitString((1, 12, 0))) == '1.12.0'
    assert DigitString.from_text('1.12.0') == DigitString((1, 12, 0))
    assert DigitString((1, 0), 'pell') == DigitString((1, 0), 'pow2')
    assert str(canonical(digits('000'))) == '0'
    assert str(canonical(digits('0011'))) == '11'
    with pytest.raises(ValueError):
        DigitString.from_text('12a')


@pytest.mark.parametrize('basis', BASES, ids=repr)
def test_exhaustive_round_trip(basis):
    for n in range(20001):
        string = encode(basis, n)
        assert decode(basis, string) == n
        assert is_valid(basis, string)
        assert n == 0 or string.digits[0] != 0


@pytest.mark.parametrize('basis', BASES, ids=repr)
def test_leading_digit_position(basis):
    for n in range(1, 3000):
        assert len(encode(basis, n)) == basis.index_of_largest_leq(n) + 1


@pytest.mark.slow
@pytest.mark.parametrize('basis', BASES, ids=repr)
def test_round_trip_up_to_a_million(basis):
    for n in range(10 ** 6 + 1):
        assert decode(basis, encode(basis, n)) == n


@given(st.integers(min_value=0, max_value=10 ** 40), st.sampled_from(BASES))
@settings(max_examples=1000, deadline=None)
def test_round_trip_big_naturals(n, basis):
    string = encode(basis, n)
    assert decode(basis, string) == n
    assert is_valid(basis, string)


@pytest.mark.parametrize('basis', BASES, ids=repr)
def test_invalidating_increments(basis):
    # Raising a single digit within its bound either gives another valid string, or breaks the prefix-sum condition
    for n in range(min(500, basis.term(8))):
        string = pad(encode(basis, n), 8)
        for position in range(8):
            i = 7 - position
            if string.digits[position] == basis.digit_bound(i):
                continue
            bumped = list(string.digits)
            bumped[position] += 1
            bumped = DigitString(tuple(bumped))
            total = sum(d * basis.term(j) for j, d in bumped.weighted() if j <= i)
            breaks = any(sum(d * basis.term(j) for j, d in bumped.weighted() if j <= top) >= basis.term(top + 1)
                         for top in range(i, 8))
            assert is_valid(basis, bumped) == (not breaks)
            if total >= basis.term(i + 1):
                assert not is_valid(basis, bumped)
