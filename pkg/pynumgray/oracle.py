""" Brute-force reference enumerations that certify the constructive modules at small sizes

The oracles never reuse the recursive constructions: strings come from `itertools.product`, permutations from
`itertools.permutations`, and validity from direct checks of the defining conditions.
"""
import enum
import math
import logging
import itertools
from collections import Counter
from dataclasses import dataclass, field

from pynumgray.basis import NumerationBasis, SequenceKind, SequenceSpec
from pynumgray.config import resolve
from pynumgray.graycode import brgc_cursor, gray_language, hamming
from pynumgray.language import avoids_ones_run, language_by_counting
from pynumgray.perm import (Permutation, avoidance_patterns, contains_pattern, gray_perms, in_class, perm_set,
                            class_size)


logger = logging.getLogger(__name__)

SUITES = ('uniqueness', 'strings', 'perms', 'gray')


class Status(enum.Enum):
    AGREE = 'agree'
    DISAGREE = 'disagree'


@dataclass(frozen=True)
class OracleReport:
    """ Outcome of comparing a construction with its oracle """
    check: str
    params: dict
    status: Status
    size: int = 0
    counterexample: object = None
    detail: str = field(default='', compare=False)

    def __post_init__(self):
        if self.status is Status.DISAGREE and self.counterexample is None:
            raise ValueError('A disagreeing report must carry a counterexample')

    @property
    def agrees(self):
        return self.status is Status.AGREE

    def __str__(self):
        params = ' '.join(f'{key}={value}' for key, value in self.params.items())
        text = f'{self.status.value:8} {self.check} {params} ({self.size} objects)'
        if not self.agrees:
            text += f': counterexample {self.counterexample}'
            if self.detail:
                text += f' ({self.detail})'
        return text


def _report(check, params, size, counterexample=None, detail=''):
    status = Status.AGREE if counterexample is None else Status.DISAGREE
    if status is Status.DISAGREE:
        logger.debug('%s %s disagrees on %s', check, params, counterexample)
    return OracleReport(check, params, status, size, counterexample, detail)


def _first_difference(expected, actual):
    """ A sorted witness of the symmetric difference of two sets, or `None` if they are equal """
    difference = sorted(set(expected) ^ set(actual))
    return difference[0] if difference else None


def oracle_unique_representation(basis, m, settings=None):
    """ Check that exactly one digit string of length m satisfying the prefix-sum condition represents each integer
    0 ... a_m - 1

    Digit strings are enumerated from the least significant digit within the bounds (a_{i+1} - 1) // a_i, and a
    partial string is dropped as soon as a prefix sum reaches a_{i+1}.
    """
    terms = basis.prefix(m + 1)
    resolve(settings).guard(terms[m], f'strings of {basis.tag} of length {m}')
    bounds = [(terms[i + 1] - 1) // terms[i] for i in range(m)]

    values = [0]
    for i in range(m):
        values = [total + digit * terms[i] for total in values
                  for digit in range(bounds[i] + 1) if total + digit * terms[i] < terms[i + 1]]
    values.sort()

    duplicate = next((a for a, b in zip(values, itertools.islice(values, 1, None)) if a == b), None)
    smallest_missing = 0
    for value in values:
        if value > smallest_missing:
            break
        if value == smallest_missing:
            smallest_missing += 1

    params = {'seq': basis.tag, 'm': m}
    if duplicate is not None:
        return _report('uniqueness', params, len(values), duplicate, 'represented more than once')
    if smallest_missing < terms[m]:
        return _report('uniqueness', params, len(values), smallest_missing, 'not represented')
    return _report('uniqueness', params, len(values))


def oracle_filter_strings(k, m, settings=None):
    """ The binary strings of length m without k consecutive 1s, by filtering all 2^m strings """
    resolve(settings).guard(2 ** m, f'binary strings of length {m}')
    return {digits for digits in itertools.product((0, 1), repeat=m) if avoids_ones_run(digits, k)}


def oracle_filter_perms(k, m, settings=None):
    """ The permutations of length m avoiding 321, 312 and 23...(k+1)1, by filtering all m! permutations """
    settings = resolve(settings)
    settings.guard(math.factorial(m), f'permutations of length {m}', 'perm_limit')
    patterns = avoidance_patterns(k)
    return {perm for perm in map(Permutation, itertools.permutations(range(1, m + 1)))
            if not any(contains_pattern(perm, pattern, settings) for pattern in patterns)}


def check_strings(k, m, settings=None):
    """ Compare the language of kbonacci(k) by counting with the filtered binary strings """
    expected = oracle_filter_strings(k, m, settings)
    language = language_by_counting(NumerationBasis(SequenceSpec.kbonacci(k)), m, settings)
    return _report('strings', {'k': k, 'm': m}, len(language), _first_difference(expected, language.as_set()))


def check_perms(k, m, settings=None):
    """ Compare the recursive class, the Gray list and the inversion-array test with the pattern filter """
    expected = oracle_filter_perms(k, m, settings)
    params = {'k': k, 'm': m}
    built = perm_set(k, m, settings)
    listed = gray_perms(k, m, settings)

    witness = _first_difference(expected, built)
    if witness is None:
        witness = _first_difference(expected, listed)
    if witness is None and len(listed) != len(expected):
        witness = next(perm for perm, count in Counter(listed).items() if count > 1)
    if witness is None and m > 0:
        witness = next((perm for perm in expected if not in_class(perm, k)), None)
    if witness is None and len(expected) != class_size(k, m):
        return _report('perms', params, len(expected), len(expected), f'expected {class_size(k, m)} permutations')
    return _report('perms', params, len(expected), witness)


def check_gray(spec, m, settings=None):
    """ Drain the Gray cursor for a kbonacci or pow2 spec and check it lists every string once at distance 1 """
    if spec.kind is SequenceKind.KBONACCI:
        cursor, expected = gray_language(spec.k, m), oracle_filter_strings(spec.k, m, settings)
    elif spec.kind is SequenceKind.POWERS_OF_TWO:
        resolve(settings).guard(2 ** m, f'binary strings of length {m}')
        cursor, expected = brgc_cursor(m), set(itertools.product((0, 1), repeat=m))
    else:
        raise ValueError(f'No Gray code for {spec.tag}')

    params = {'seq': spec.tag, 'm': m}
    seen = set()
    previous = None
    for string in cursor:
        if string.digits in seen:
            return _report('gray', params, len(seen), string, 'emitted twice')
        if previous is not None and hamming(previous, string) != 1:
            return _report('gray', params, len(seen), f'{previous} -> {string}', 'Hamming distance is not 1')
        seen.add(string.digits)
        previous = string

    return _report('gray', params, len(seen), _first_difference(expected, seen))


def run_suite(suite, spec, max_len, settings=None):
    """ Run one or all verification suites for lengths up to max_len

    Args:
        suite (`str`): one of uniqueness, strings, perms, gray, or all
        spec (:class:`~pynumgray.basis.SequenceSpec`): the sequence under test
        max_len (`int`): the largest length to check
        settings (:class:`~pynumgray.config.Settings`): size limits

    Returns:
        `list` of :class:`~OracleReport`: the reports, in deterministic order
    """
    if suite == 'all':
        suites = [name for name in SUITES if name == 'uniqueness' or spec.kind is SequenceKind.KBONACCI
                  or name == 'gray' and spec.kind is SequenceKind.POWERS_OF_TWO]
    elif suite in SUITES:
        suites = [suite]
    else:
        raise ValueError(f'Unknown suite {suite!r}, expected one of {", ".join(SUITES)} or all')

    if any(name in ('strings', 'perms') for name in suites) and spec.kind is not SequenceKind.KBONACCI:
        raise ValueError(f'The strings and perms suites need a kbonacci sequence, not {spec.tag}')

    basis = NumerationBasis(spec)
    reports = []
    for name in suites:
        for m in range(max_len + 1):
            if name == 'uniqueness':
                reports.append(oracle_unique_representation(basis, m, settings))
            elif name == 'strings':
                reports.append(check_strings(spec.k, m, settings))
            elif name == 'perms':
                reports.append(check_perms(spec.k, m, settings))
            else:
                reports.append(check_gray(spec, m, settings))
    return reports
