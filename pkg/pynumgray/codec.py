""" Greedy representation of non-negative integers in a numeration basis, and the inverse decoding

Digit strings are stored most significant digit first, as they are written: the digit at index i (the weight of
a_i) sits at position `len(digits) - 1 - i` of the tuple.
"""
from dataclasses import dataclass, field


class DigitOutOfRangeError(ValueError):
    """ A digit exceeds the largest digit allowed at its position """
    def __init__(self, position, digit, bound):
        super().__init__(f'digit {digit} at position {position} exceeds the bound {bound}')
        self.position = position
        self.digit = digit
        self.bound = bound


class TooLongError(ValueError):
    """ A digit string is longer than the requested padded length """
    pass


@dataclass(frozen=True)
class DigitString:
    """ A finite sequence of digits d_{m-1} ... d_0, most significant first

    `basis_tag` records which basis produced the string; it is advisory and ignored by comparisons.
    """
    digits: tuple = ()
    basis_tag: str = field(default=None, compare=False)

    @classmethod
    def from_text(cls, text, basis_tag=None):
        """ Parse the text rendering: one character per digit, or '.'-separated digits for large alphabets """
        text = text.strip()
        parts = text.split('.') if '.' in text else list(text)
        if not all(part.isdigit() for part in parts):
            raise ValueError(f'Not a digit string: {text!r}')
        return cls(tuple(int(part) for part in parts), basis_tag)

    def __str__(self):
        if any(digit > 9 for digit in self.digits):
            return '.'.join(str(digit) for digit in self.digits)
        return ''.join(str(digit) for digit in self.digits)

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, position):
        return self.digits[position]

    def __lt__(self, other):
        return (len(self.digits), self.digits) < (len(other.digits), other.digits)

    def weighted(self):
        """ Yield (i, d_i) pairs from the least significant digit up """
        return enumerate(reversed(self.digits))


def canonical(s):
    """ Strip leading zeros; the canonical zero is the single digit 0 """
    digits = tuple(s.digits)
    start = next((n for n, digit in enumerate(digits) if digit), len(digits))
    return DigitString(digits[start:] or (0,), s.basis_tag)


def encode(basis, n):
    """ Compute the greedy representation of `n`

    Divide by the largest term a_j <= n, then divide each remainder by the next smaller term down to a_0 = 1.

    Args:
        basis (:class:`~pynumgray.basis.NumerationBasis`): the numeration system
        n (`int`): a non-negative integer

    Returns:
        :class:`~DigitString`: the canonical representation, `0` for zero
    """
    if n < 0:
        raise ValueError(f'Cannot represent negative integer {n}')
    if n == 0:
        return DigitString((0,), basis.tag)

    digits = []
    remainder = n
    for i in range(basis.index_of_largest_leq(n), -1, -1):
        digit, remainder = divmod(remainder, basis.term(i))
        digits.append(digit)

    assert remainder == 0
    return DigitString(tuple(digits), basis.tag)


def decode(basis, s):
    """ Compute the value of a digit string, which may have leading zeros

    Raises:
        DigitOutOfRangeError: if some digit exceeds its bound (a_{i+1} - 1) // a_i
    """
    value = 0
    for i, digit in s.weighted():
        bound = basis.digit_bound(i)
        if not 0 <= digit <= bound:
            raise DigitOutOfRangeError(i, digit, bound)
        value += digit * basis.term(i)
    return value


def is_valid(basis, s):
    """ Check that every prefix sum d_i a_i + ... + d_0 a_0 is smaller than a_{i+1}

    This holds exactly for the greedy representations, possibly left-padded with zeros.
    """
    total = 0
    for i, digit in s.weighted():
        if digit < 0:
            return False
        total += digit * basis.term(i)
        if total >= basis.term(i + 1):
            return False
    return True


def pad(s, m):
    """ Left-pad a digit string with zeros to length m; zero pads to m zeros

    Raises:
        TooLongError: if the canonical string is longer than m
    """
    digits = canonical(s).digits
    if digits == (0,):
        digits = ()
    if len(digits) > m:
        raise TooLongError(f'{s} has {len(digits)} significant digits, more than {m}')
    return DigitString((0,) * (m - len(digits)) + digits, s.basis_tag)
