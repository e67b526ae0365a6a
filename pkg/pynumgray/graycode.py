""" Gray codes defined by reversal-carrying recursions: the lrl-order binary reflected Gray code and the Gray code
of binary strings avoiding 1^k, both as eager lists and as lazy cursors

A list defined by such a recursion is a concatenation of blocks `prefix . L'`, where `L'` is a shorter list of the
same family, possibly reversed. The cursor walks these blocks with an explicit stack of frames. Reversing a list
reverses its block order and toggles the reversal of every block, so no list is ever materialized to be reversed.
"""
import logging
from dataclasses import dataclass

from pynumgray.basis import NumerationBasis, SequenceSpec
from pynumgray.codec import DigitString
from pynumgray.config import resolve
from pynumgray.language import build_by_length


logger = logging.getLogger(__name__)


class LengthMismatchError(ValueError):
    """ Two objects that must have the same length do not """
    pass


@dataclass(frozen=True)
class Block:
    """ One block `prefix . L` of a recursive list: `length` is the length of the strings of L """
    prefix: tuple
    length: int
    reversed: bool


def brgc_blocks(length):
    """ C_m = 0.rev(C_{m-1}) o 1.C_{m-1} """
    return [Block((0,), length - 1, True), Block((1,), length - 1, False)]


def avoiding_blocks(k):
    """ Block rule of the Gray code of binary strings avoiding 1^k

    L_m = C_m for m < k, and L_m = 0.rev(L_{m-1}) o 10.rev(L_{m-2}) o ... o 1^{k-1}0.rev(L_{m-k}) otherwise.
    """
    def blocks(length):
        if length < k:
            return brgc_blocks(length)
        return [Block((1,) * (j - 1) + (0,), length - j, True) for j in range(1, k + 1)]
    return blocks


def oriented(blocks, reverse):
    """ The blocks of a list read forward, or of the reversed list if `reverse` is set """
    if not reverse:
        return blocks
    return [Block(block.prefix, block.length, not block.reversed) for block in reversed(blocks)]


@dataclass
class _Frame:
    blocks: list
    index: int
    position: int


class GrayCursor:
    """ Iterator emitting a recursively defined Gray list one element at a time

    Memory holds one frame per recursion level, each with at most as many blocks as the rule produces, so it is
    O(m k) for lists of length-m objects however long the list. A cursor is single-consumer state.
    """
    def __init__(self, rule, length, render=DigitString, shifted=False):
        """ Prepare the traversal of the list of objects of the given length

        Args:
            rule (`callable`): maps a length n > 0 to the list of :class:`~Block` of the forward list
            length (`int`): the length m of the emitted objects
            render (`callable`): builds the emitted object from a tuple of entries
            shifted (`bool`): add to each prefix entry the number of entries placed before it, as in `rho.(pi^p)`
        """
        if length < 0:
            raise ValueError(f'negative length {length}')
        self.length = length
        self._rule = rule
        self._render = render
        self._shifted = shifted
        self._entries = [0] * length
        self._stack = [_Frame([Block((), length, False)], 0, 0)]
        self.current = None
        self.emitted = 0

    def __iter__(self):
        return self

    @property
    def exhausted(self):
        return not self._stack

    @property
    def depth(self):
        """ Number of frames currently held """
        return len(self._stack)

    def __next__(self):
        while self._stack:
            frame = self._stack[-1]
            if frame.index == len(frame.blocks):
                self._stack.pop()
                continue

            block = frame.blocks[frame.index]
            frame.index += 1

            offset = frame.position if self._shifted else 0
            for n, entry in enumerate(block.prefix, frame.position):
                self._entries[n] = entry + offset
            position = frame.position + len(block.prefix)

            if block.length == 0:
                self.current = self._render(tuple(self._entries))
                self.emitted += 1
                return self.current

            self._stack.append(_Frame(oriented(self._rule(block.length), block.reversed), 0, position))

        if self.current is not None:
            logger.debug('Gray cursor of length %d exhausted after %d elements', self.length, self.emitted)
        self.current = None
        raise StopIteration


def hamming(a, b):
    """ Number of positions where two equal-length digit strings differ

    Raises:
        LengthMismatchError: if the strings have different lengths
    """
    if len(a) != len(b):
        raise LengthMismatchError(f'Cannot compare strings of lengths {len(a)} and {len(b)}')
    return sum(x != y for x, y in zip(a, b))


def _brgc_step(n, levels):
    shorter = levels[n - 1]
    return tuple((0, *tail) for tail in reversed(shorter)) + tuple((1, *tail) for tail in shorter)


def _brgc_full_history_step(n, levels):
    # 0.rev(C_{n-1}) o 10.rev(C_{n-2}) o ... o 1^{n-1}0.rev(C_0) o 1^n
    strings = [(1,) * (j - 1) + (0,) + tail for j in range(1, n + 1) for tail in reversed(levels[n - j])]
    strings.append((1,) * n)
    return tuple(strings)


def _gray_avoiding_step(k):
    def step(n, levels):
        if n < k:
            return _brgc_step(n, levels)
        return tuple((1,) * (j - 1) + (0,) + tail for j in range(1, k + 1) for tail in reversed(levels[n - j]))
    return step


def _eager_guard(m, settings):
    settings = resolve(settings)
    if m > settings.eager_gray_length and not settings.force:
        raise ValueError(f'Gray code lists longer than {settings.eager_gray_length} are only available as cursors')
    settings.guard(2 ** m, f'binary strings of length {m}')


def brgc_list(m, settings=None):
    """ The lrl-order binary reflected Gray code C_m = 0.rev(C_{m-1}) o 1.C_{m-1}, as a list """
    _eager_guard(m, settings)
    return [DigitString(digits) for digits in build_by_length(m, _brgc_step)]


def brgc_full_history_list(m, settings=None):
    """ The same list as :func:`~brgc_list`, built as 0.rev(C_{m-1}) o 10.rev(C_{m-2}) o ... o 1^m """
    _eager_guard(m, settings)
    return [DigitString(digits) for digits in build_by_length(m, _brgc_full_history_step)]



def brgc_cursor(m):
    """ Cursor over the binary reflected Gray code of length m """
    return GrayCursor(brgc_blocks, m, render=lambda digits: DigitString(digits, 'pow2'))


def gray_language(k, m):
    """ Cursor over the Gray code of binary strings of length m avoiding 1^k, consecutive strings at Hamming
    distance 1

    Args:
        k (`int`): the forbidden run length, at least 2
        m (`int`): the length of the strings
    """
    if k < 2:
        raise ValueError(f'k must be at least 2, got {k}')
    tag = f'kbonacci({k})'
    return GrayCursor(avoiding_blocks(k), m, render=lambda digits: DigitString(digits, tag))


def gray_language_list(k, m, settings=None):
    """ The list emitted by :func:`~gray_language`, built eagerly from the recursion

    Raises:
        SizeGuardError: if the list is longer than the string limit
    """
    if k < 2:
        raise ValueError(f'k must be at least 2, got {k}')
    count = NumerationBasis(SequenceSpec.kbonacci(k)).term(m)
    resolve(settings).guard(count, f'strings of length {m} avoiding 1^{k}')
    return [DigitString(digits, f'kbonacci({k})') for digits in build_by_length(m, _gray_avoiding_step(k))]
