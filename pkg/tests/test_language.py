import pytest

from pynumgray.basis import NumerationBasis, SequenceSpec
from pynumgray.codec import DigitString
from pynumgray.config import Settings, SizeGuardError
from pynumgray.language import (NonBinaryDigitError, Provenance, avoids_ones_run, binary_strings,
                                binary_strings_full_history, language_by_counting, language_by_recursion)

from tests.test_basis import ALL_SPECS


PELL = NumerationBasis(SequenceSpec.pell())

PELL_TABLES = [
    '',
    '0 1',
    '00 01 10 11 20',
    '000 001 010 011 020 100 101 110 111 120 200 201',
    '0000 0001 0010 0011 0020 0100 0101 0110 0111 0120 0200 0201 1000 1001 1010 1011 1020 1100 1101 1110 1111 1120 '
    '1200 1201 2000 2001 2010 2011 2020',
]


def texts(language):
    return [str(element) for element in language]


def binary(text):
    return DigitString.from_text(text)


@pytest.mark.parametrize('m', range(5))
def test_pell_tables(m):
    language = language_by_counting(PELL, m)
    assert texts(language) == (PELL_TABLES[m].split() if m else [''])
    assert len(language) == [1, 2, 5, 12, 29][m]
    assert language.provenance is Provenance.BY_COUNTING


def test_language_examples():
    assert texts(language_by_counting(NumerationBasis(SequenceSpec.kbonacci(2)), 3)) == \
        ['000', '001', '010', '100', '101']
    assert texts(language_by_recursion(2, 2)) == ['00', '01', '10']
    assert texts(language_by_recursion(3, 1)) == ['0', '1']
    assert texts(language_by_recursion(2, 3)) == ['000', '001', '010', '100', '101']
    assert texts(language_by_recursion(2, 0)) == ['']
    assert texts(binary_strings(0)) == ['']
    assert texts(binary_strings(2)) == ['00', '01', '10', '11']
    assert len(binary_strings(3)) == 8


@pytest.mark.parametrize('k', [2, 3, 4, 5])
def test_three_constructions_agree(k):
    basis = NumerationBasis(SequenceSpec.kbonacci(k))
    for m in range(16):
        counted = language_by_counting(basis, m)
        recursive = language_by_recursion(k, m)
        filtered = {string.digits for string in binary_strings(m) if avoids_ones_run(string, k)}
        assert counted.as_set() == recursive.as_set() == filtered
        assert len(counted) == len(recursive) == basis.term(m)
        assert all(digit in (0, 1) for string in counted for digit in string)


@pytest.mark.parametrize('spec', ALL_SPECS, ids=lambda spec: spec.tag)
def test_cardinality_is_a_m(spec):
    basis = NumerationBasis(spec)
    for m in range(16):
        if basis.term(m) > 500000:
            break
        assert len(language_by_counting(basis, m)) == basis.term(m)


def test_binary_constructions_agree():
    for m in range(16):
        assert binary_strings(m).as_set() == binary_strings_full_history(m).as_set()
        assert len(binary_strings_full_history(m)) == 2 ** m


def test_pell_alphabet_is_attained():
    for m in range(11):
        largest = max((max(string, default=0) for string in language_by_counting(PELL, m)), default=0)
        assert largest == PELL.alphabet_for_length(m)


def test_avoids_ones_run():
    assert not avoids_ones_run(binary('0110'), 2)
    assert avoids_ones_run(binary('0110'), 3)
    assert not avoids_ones_run(binary('11111'), 5)
    assert avoids_ones_run(binary(''), 1)
    with pytest.raises(NonBinaryDigitError):
        avoids_ones_run(binary('1120'), 2)


def test_size_guard():
    with pytest.raises(SizeGuardError) as err:
        language_by_counting(PELL, 3, Settings(string_limit=10))
    assert err.value.count == 12
    assert len(language_by_counting(PELL, 3, Settings(string_limit=10, force=True))) == 12


def test_recursive_builders_are_guarded():
    settings = Settings(string_limit=1000)
    with pytest.raises(SizeGuardError) as err:
        binary_strings(30, settings)
    assert err.value.count == 2 ** 30
    with pytest.raises(SizeGuardError):
        binary_strings_full_history(11, settings)
    with pytest.raises(SizeGuardError) as err:
        language_by_recursion(2, 15, settings)
    assert err.value.count == 1597
    assert len(language_by_recursion(2, 15, Settings(string_limit=1000, force=True))) == 1597


def test_each_build_is_fresh():
    first, second = binary_strings(4), binary_strings(4)
    assert first.elements[-1].digits == second.elements[-1].digits == (1, 1, 1, 1)
    assert first.elements[-1].digits is not second.elements[-1].digits
    first, second = language_by_recursion(2, 5), language_by_recursion(2, 5)
    assert first.elements[0].digits is not second.elements[0].digits
