""" The finite languages of padded representations, built by counting or by recursion """
import enum
import logging
from dataclasses import dataclass

from pynumgray.basis import NumerationBasis, SequenceSpec
from pynumgray.codec import DigitString, encode, pad
from pynumgray.config import resolve


logger = logging.getLogger(__name__)


class NonBinaryDigitError(ValueError):
    """ A string expected to be binary contains a digit larger than 1 """
    pass


class Provenance(enum.Enum):
    BY_COUNTING = 'counting'
    BY_RECURSION = 'recursion'


@dataclass(frozen=True)
class LanguageSet:
    """ The strings of a language of fixed length m, in construction order """
    length: int
    elements: tuple
    provenance: Provenance

    def __post_init__(self):
        if any(len(element) != self.length for element in self.elements):
            raise ValueError(f'All elements of a language of length {self.length} must have that length')
        if len(set(self.elements)) != len(self.elements):
            raise ValueError('Duplicate elements in language')

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item):
        return item in self.elements

    def as_set(self):
        """ `frozenset` of the digit tuples, for order-insensitive comparisons """
        return frozenset(element.digits for element in self.elements)


def language_by_counting(basis, m, settings=None):
    """ The representations of 0 ... a_m - 1, each padded to m digits, in increasing order

    Args:
        basis (:class:`~pynumgray.basis.NumerationBasis`): the numeration system
        m (`int`): the length of the strings
        settings (:class:`~pynumgray.config.Settings`): size limits, defaults to the shared settings

    Raises:
        SizeGuardError: if a_m exceeds the string limit and force is not set
    """
    count = basis.term(m)
    resolve(settings).guard(count, f'strings of {basis.tag} of length {m}')
    elements = tuple(pad(encode(basis, ell), m) for ell in range(count))
    logger.debug('Counted %d strings of %s of length %d', count, basis.tag, m)
    return LanguageSet(m, elements, Provenance.BY_COUNTING)


def build_by_length(m, step):
    """ Build a list of digit tuples of length m bottom-up from the lists of every shorter length

    The intermediate lists live only for the duration of the call.

    Args:
        m (`int`): the target length
        step (callable): `step(n, levels)` returns the list for length n given `levels[0] ... levels[n - 1]`

    Returns:
        `tuple`: the list for length m, `((),)` for m = 0
    """
    levels = [((),)]
    for n in range(1, m + 1):
        levels.append(step(n, levels))
    return levels[m]


def _binary_step(n, levels):
    return tuple((bit, *tail) for bit in (0, 1) for tail in levels[n - 1])


def _binary_full_history_step(n, levels):
    # 0.B_{n-1} u 10.B_{n-2} u ... u 1^{n-1}0.B_0 u 1^n
    strings = [(1,) * (j - 1) + (0,) + tail for j in range(1, n + 1) for tail in levels[n - j]]
    strings.append((1,) * n)
    return tuple(strings)


def _avoiding_step(k):
    def step(n, levels):
        if n < k:
            return _binary_step(n, levels)
        return tuple((1,) * (j - 1) + (0,) + tail for j in range(1, k + 1) for tail in levels[n - j])
    return step


def _language(strings, m, tag=None):
    return LanguageSet(m, tuple(DigitString(digits, tag) for digits in strings), Provenance.BY_RECURSION)


def binary_strings(m, settings=None):
    """ All 2^m binary strings of length m, built as 0.B_{m-1} u 1.B_{m-1}

    Raises:
        SizeGuardError: if 2^m exceeds the string limit and force is not set
    """
    resolve(settings).guard(2 ** m, f'binary strings of length {m}')
    return _language(build_by_length(m, _binary_step), m)


def binary_strings_full_history(m, settings=None):
    """ All 2^m binary strings of length m, built as 0.B_{m-1} u 10.B_{m-2} u ... u 1^{m-1}0.B_0 u 1^m """
    resolve(settings).guard(2 ** m, f'binary strings of length {m}')
    return _language(build_by_length(m, _binary_full_history_step), m)


def language_by_recursion(k, m, settings=None):
    """ The binary strings of length m avoiding 1^k, built recursively

    For m < k this is every binary string, otherwise 0.L_{m-1} u 10.L_{m-2} u ... u 1^{k-1}0.L_{m-k}.

    Args:
        k (`int`): the forbidden run length, at least 2
        m (`int`): the length of the strings
        settings (:class:`~pynumgray.config.Settings`): size limits, defaults to the shared settings

    Raises:
        SizeGuardError: if the language is larger than the string limit and force is not set
    """
    if k < 2:
        raise ValueError(f'k must be at least 2, got {k}')
    count = NumerationBasis(SequenceSpec.kbonacci(k)).term(m)
    resolve(settings).guard(count, f'strings of length {m} avoiding 1^{k}')
    return _language(build_by_length(m, _avoiding_step(k)), m, f'kbonacci({k})')



def avoids_ones_run(s, k):
    """ Check that a binary string has no k consecutive 1s

    Raises:
        NonBinaryDigitError: if the string has a digit other than 0 or 1
    """
    if any(digit not in (0, 1) for digit in s):
        raise NonBinaryDigitError(f'{s} is not a binary string')

    run = 0
    for digit in s:
        run = run + 1 if digit else 0
        if run >= k:
            return False
    return True
