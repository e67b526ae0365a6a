""" Permutations avoiding 321, 312 and 23...(k+1)1, their inversion arrays, and their adjacent-transposition Gray code

A permutation is in the class exactly when its inversion array is a binary string avoiding 1^k, which gives an explicit
bijection with the strings of length m - 1. The Gray code on strings transfers to the permutations through it.
"""
import math
import itertools
from dataclasses import dataclass

from pynumgray.basis import NumerationBasis, SequenceSpec
from pynumgray.codec import DigitString
from pynumgray.config import resolve
from pynumgray.graycode import Block, GrayCursor, LengthMismatchError
from pynumgray.language import avoids_ones_run, build_by_length


class InvalidPermutationError(ValueError):
    """ The entries are not a bijection on 1 ... m """
    pass


class EmptyPermutationError(ValueError):
    """ The operation is undefined on the empty permutation """
    pass


class NonBinaryValueError(ValueError):
    """ An inversion array expected to be binary has a value larger than 1 """
    pass


def _render(values, separator):
    if len(values) > 9 or any(value > 9 for value in values):
        return separator.join(str(value) for value in values)
    return ''.join(str(value) for value in values)


@dataclass(frozen=True)
class Permutation:
    """ A permutation pi_1 ... pi_m of 1 ... m """
    entries: tuple = ()

    def __post_init__(self):
        if sorted(self.entries) != list(range(1, len(self.entries) + 1)):
            raise InvalidPermutationError(f'{self.entries} is not a permutation of 1...{len(self.entries)}')

    @classmethod
    def from_text(cls, text):
        """ Parse concatenated entries (for m <= 9) or whitespace-separated entries """
        text = text.strip()
        parts = text.split() if ' ' in text else list(text)
        return cls(tuple(int(part) for part in parts))

    def __str__(self):
        return _render(self.entries, ' ')

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, position):
        return self.entries[position]

    def __lt__(self, other):
        return (len(self.entries), self.entries) < (len(other.entries), other.entries)


@dataclass(frozen=True)
class InversionArray:
    """ The array v_1 ... v_{m-1} where v_i counts the entries smaller than pi_i to its right """
    values: tuple = ()

    def __str__(self):
        return _render(self.values, '.')

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_digits(self):
        """ The same values as a :class:`~pynumgray.codec.DigitString` """
        return DigitString(self.values)


def increasing_cycle_pattern(k):
    """ The pattern 23...(k+1)1 """
    return Permutation((*range(2, k + 2), 1))


def avoidance_patterns(k):
    """ The patterns 321, 312 and 23...(k+1)1 defining the class """
    return Permutation((3, 2, 1)), Permutation((3, 1, 2)), increasing_cycle_pattern(k)


def shift_up(p, q):
    """ The entries of p each increased by q """
    return tuple(entry + q for entry in p)


def block_of(p):
    """ The block j of the recursive construction containing p, i.e. the position of its entry 1 """
    return p.entries.index(1) + 1


def inversion_array(p):
    """ Compute v_i = |{j > i : pi_j < pi_i}| for i = 1 ... m-1

    Raises:
        EmptyPermutationError: for the empty permutation
    """
    if not p.entries:
        raise EmptyPermutationError('The empty permutation has no inversion array')
    entries = p.entries
    return InversionArray(tuple(sum(later < entry for later in entries[i + 1:])
                                for i, entry in enumerate(entries[:-1])))


def perm_from_string(v):
    """ Build the permutation of length len(v) + 1 whose inversion array is the binary string v

    With i_1 < ... < i_r the positions of the zeros of v.0, set pi_{i_1} = 1, pi_{i_{j+1}} = i_j + 1, and
    pi_i = i + 1 at every other position.

    Args:
        v (iterable of `int`): a binary string, e.g. a :class:`~pynumgray.codec.DigitString` or
                               :class:`~InversionArray`

    Raises:
        NonBinaryValueError: if some value is not 0 or 1
    """
    values = (*v, 0)
    if any(value not in (0, 1) for value in values):
        raise NonBinaryValueError(f'{v} is not binary')

    entries = [i + 1 for i in range(1, len(values) + 1)]
    zeros = [i for i, value in enumerate(values, 1) if value == 0]
    entries[zeros[0] - 1] = 1
    for previous, zero in zip(zeros, zeros[1:]):
        entries[zero - 1] = previous + 1
    return Permutation(tuple(entries))


def string_from_perm(p):
    """ The inversion array of a permutation of the class: v_i = 0 if pi_i <= i, 1 otherwise """
    return InversionArray(tuple(int(entry > i) for i, entry in enumerate(p.entries[:-1], 1)))


def _standardize(values):
    return tuple(sorted(range(len(values)), key=values.__getitem__))


def contains_pattern(p, pattern, settings=None):
    """ Check whether some subsequence of p is order-isomorphic to pattern, by trying all subsequences

    Raises:
        SizeGuardError: if the pattern is too long or too many subsequences would be examined
    """
    settings = resolve(settings)
    settings.guard(len(pattern), 'entries in a pattern', 'max_pattern_length')
    settings.guard(math.comb(len(p), len(pattern)), 'subsequences', 'pattern_limit')

    shape = _standardize(pattern.entries)
    return any(_standardize(sub) == shape for sub in itertools.combinations(p.entries, len(pattern)))


def in_class(p, k):
    """ Check p avoids 321, 312 and 23...(k+1)1, through its inversion array being binary and avoiding 1^k """
    values = inversion_array(p).values
    return all(value in (0, 1) for value in values) and avoids_ones_run(values, k)


def _block_prefix(j):
    # 23...j1, or just 1 for j = 1
    return (*range(2, j + 1), 1)


def _class_step(k, reverse):
    def step(n, levels):
        return tuple(_block_prefix(j) + shift_up(rest, j)
                     for j in range(1, min(k, n) + 1)
                     for rest in (reversed(levels[n - j]) if reverse else levels[n - j]))
    return step



def class_size(k, m):
    """ Number of permutations of length m in the class: f_{m-1} of the k-generalized Fibonacci sequence """
    return NumerationBasis(SequenceSpec.kbonacci(k)).term(m - 1) if m > 0 else 1


def perm_set(k, m, settings=None):
    """ The permutations of length m in the class, as 1.(S_{m-1}^1) u 21.(S_{m-2}^2) u ... u 23...k1.(S_{m-k}^k)

    Blocks with a negative length vanish.
    """
    if k < 2:
        raise ValueError(f'k must be at least 2, got {k}')
    resolve(settings).guard(class_size(k, m), f'permutations of length {m}')
    return frozenset(Permutation(entries) for entries in build_by_length(m, _class_step(k, reverse=False)))


def gray_perms(k, m, settings=None):
    """ The Gray code 1.(rev(S_{m-1})^1) o 21.(rev(S_{m-2})^2) o ... o 23...k1.(rev(S_{m-k})^k) as a list

    Consecutive permutations differ by swapping two adjacent entries.
    """
    if k < 2:
        raise ValueError(f'k must be at least 2, got {k}')
    resolve(settings).guard(class_size(k, m), f'permutations of length {m}')
    return [Permutation(entries) for entries in build_by_length(m, _class_step(k, reverse=True))]


def perm_blocks(k):
    """ Block rule of the permutation Gray code, prefixes given before shifting """
    def blocks(length):
        return [Block(_block_prefix(j), length - j, True) for j in range(1, min(k, length) + 1)]
    return blocks


def gray_perms_cursor(k, m):
    """ Cursor emitting the list of :func:`~gray_perms` one permutation at a time """
    if k < 2:
        raise ValueError(f'k must be at least 2, got {k}')
    return GrayCursor(perm_blocks(k), m, render=Permutation, shifted=True)


def adjacent_transposition_delta(a, b):
    """ Return the position i (1-based) such that b is a with entries i and i+1 swapped, or `None`

    Raises:
        LengthMismatchError: if the permutations have different lengths
    """
    if len(a) != len(b):
        raise LengthMismatchError(f'Cannot compare permutations of lengths {len(a)} and {len(b)}')
    diff = [i for i, (x, y) in enumerate(zip(a, b)) if x != y]
    if len(diff) == 2 and diff[1] == diff[0] + 1 and a[diff[0]] == b[diff[1]] and a[diff[1]] == b[diff[0]]:
        return diff[0] + 1
    return None
