""" Integer sequences used as numeration systems: term access, digit bounds and alphabets """
import enum
import bisect
import logging
import threading
from dataclasses import dataclass


logger = logging.getLogger(__name__)


class InvalidSequenceError(ValueError):
    """ The parameters of a sequence family violate its constraints """
    pass


class NonMonotonicBasisError(ArithmeticError):
    """ A sequence failed to be strictly increasing, so it can not serve as a numeration system """
    pass


class SequenceKind(enum.Enum):
    KBONACCI = 'kbonacci'
    PELL = 'pell'
    POWERS_OF_TWO = 'pow2'
    LINEAR_PLUS = 'linplus'
    LINEAR_MINUS = 'linminus'


@dataclass(frozen=True)
class SequenceSpec:
    """ A family of integer sequences and its parameters

    Use the named constructors rather than building instances directly, e.g. `SequenceSpec.kbonacci(3)`.
    """
    kind: SequenceKind
    k: int = None
    h: int = None

    def __post_init__(self):
        kind, k, h = self.kind, self.k, self.h
        if kind is SequenceKind.KBONACCI:
            if k is None or k < 2 or h is not None:
                raise InvalidSequenceError(f'kbonacci requires k >= 2 and no h, got k={k}, h={h}')
        elif kind is SequenceKind.LINEAR_PLUS:
            if k is None or h is None or not k >= h > 0:
                raise InvalidSequenceError(f'linplus requires k >= h > 0, got k={k}, h={h}')
        elif kind is SequenceKind.LINEAR_MINUS:
            if k is None or h is None or not k > h > 0:
                raise InvalidSequenceError(f'linminus requires k > h > 0, got k={k}, h={h}')
        elif k is not None or h is not None:
            raise InvalidSequenceError(f'{kind.value} takes no parameters')

    @classmethod
    def kbonacci(cls, k):
        """ The k-bonacci numbers: powers of two up to 2^(k-1), then the sum of the k previous terms """
        return cls(SequenceKind.KBONACCI, k)

    @classmethod
    def pell(cls):
        """ The Pell numbers 1, 2, 5, 12, 29, ... """
        return cls(SequenceKind.PELL)

    @classmethod
    def powers_of_two(cls):
        """ The binary system """
        return cls(SequenceKind.POWERS_OF_TWO)

    @classmethod
    def linear_plus(cls, k, h):
        """ a_m = k a_{m-1} + h a_{m-2} from 1, k, for k >= h > 0

        Raises:
            InvalidSequenceError: if the parameters are out of range
        """
        return cls(SequenceKind.LINEAR_PLUS, k, h)

    @classmethod
    def linear_minus(cls, k, h):
        """ a_m = k a_{m-1} - h a_{m-2} from 1, k, for k > h > 0 """
        return cls(SequenceKind.LINEAR_MINUS, k, h)

    @classmethod
    def parse(cls, name, k=None, h=None):
        """ Build a spec from a selector name as used on the command line

        Args:
            name (`str`): One of kbonacci, pell, pow2, linplus, linminus
            k (`int`): first parameter, required by kbonacci, linplus and linminus
            h (`int`): second parameter, required by linplus and linminus

        Returns:
            :class:`~SequenceSpec`: the validated spec
        """
        try:
            kind = SequenceKind(name)
        except ValueError:
            raise InvalidSequenceError(f'Unknown sequence {name!r}, expected one of '
                                       f'{", ".join(kind.value for kind in SequenceKind)}') from None

        return cls(kind, k, h)

    @property
    def tag(self):
        """ `str`: a stable identifier, e.g. `kbonacci(3)` or `linminus(3,2)` """
        params = [str(p) for p in (self.k, self.h) if p is not None]
        return f'{self.kind.value}({",".join(params)})' if params else self.kind.value

    def initial_terms(self):
        """ The terms fixed by initial conditions rather than by the recurrence """
        if self.kind is SequenceKind.KBONACCI:
            return [2 ** ell for ell in range(self.k)]
        elif self.kind is SequenceKind.PELL:
            return [1, 2]
        elif self.kind is SequenceKind.POWERS_OF_TWO:
            return [1]
        return [1, self.k]

    def next_term(self, terms):
        """ Compute the term following `terms` by the recurrence

        Args:
            terms (`list` of `int`): all terms computed so far, at least the initial ones

        Returns:
            `int`: the next term
        """
        if self.kind is SequenceKind.KBONACCI:
            return sum(terms[-self.k:])
        elif self.kind is SequenceKind.PELL:
            return 2 * terms[-1] + terms[-2]
        elif self.kind is SequenceKind.POWERS_OF_TWO:
            return 2 * terms[-1]
        elif self.kind is SequenceKind.LINEAR_PLUS:
            return self.k * terms[-1] + self.h * terms[-2]
        return self.k * terms[-1] - self.h * terms[-2]


class NumerationBasis:
    """ A strictly increasing sequence 1 = a_0 < a_1 < ... materialized lazily

    Terms are cached in an append-only list; extension is serialized by a lock so concurrent readers always observe
    the same values.
    """
    def __init__(self, spec):
        """ Create the basis and check its first terms

        Args:
            spec (:class:`~SequenceSpec`): the sequence family

        Raises:
            NonMonotonicBasisError: if the first terms are not strictly increasing
        """
        self.spec = spec
        self._terms = []
        self._lock = threading.Lock()
        self._extend_to(max(2, len(spec.initial_terms())))

    def __repr__(self):
        return f'NumerationBasis({self.spec.tag})'

    @property
    def tag(self):
        return self.spec.tag

    def _extend_to(self, n):
        """ Ensure terms a_0 ... a_n are cached """
        if n < len(self._terms):
            return

        with self._lock:
            terms = self._terms
            initial = self.spec.initial_terms()
            while len(terms) <= n:
                value = initial[len(terms)] if len(terms) < len(initial) else self.spec.next_term(terms)
                if terms and not value > terms[-1]:
                    raise NonMonotonicBasisError(f'{self.tag} is not strictly increasing: '
                                                 f'a_{len(terms) - 1} = {terms[-1]}, a_{len(terms)} = {value}')
                terms.append(value)
            logger.debug('%s extended to %d terms', self.tag, len(terms))

    def term(self, i):
        """ Return a_i """
        if i < 0:
            raise IndexError(f'negative term index {i}')
        self._extend_to(i)
        return self._terms[i]

    def prefix(self, n):
        """ Return the tuple (a_0, ..., a_{n-1}) """
        if n > 0:
            self._extend_to(n - 1)
        return tuple(self._terms[:n])

    def index_of_largest_leq(self, n):
        """ Return the index of the largest term not exceeding `n`, i.e. i such that a_i <= n < a_{i+1}

        Args:
            n (`int`): a positive integer

        Raises:
            ValueError: for n < 1, as no term is smaller than a_0 = 1
        """
        if n < 1:
            raise ValueError(f'no term of {self.tag} is at most {n}')
        while self._terms[-1] <= n:
            self._extend_to(2 * len(self._terms))
        return bisect.bisect_right(self._terms, n) - 1

    def digit_bound(self, i):
        """ Return the largest digit allowed at position i: (a_{i+1} - 1) // a_i """
        return (self.term(i + 1) - 1) // self.term(i)

    def alphabet_for_length(self, m):
        """ Return the largest digit of any string of length m, 0 for the empty string """
        return max((self.digit_bound(i) for i in range(m)), default=0)


def full_history_terms(spec, m):
    """ Compute a_0 ... a_{m-1} with the non-negative full-history form of the recurrence

    This is an independent computation, used to cross-check the two-termed recurrences:
    linminus(k, h) satisfies a_m = (k-1)a_{m-1} + (k-h-1)(a_{m-2} + ... + a_0) + 1, pow2 satisfies
    a_m = a_{m-1} + ... + a_0 + 1, and kbonacci(k) sums the k previous terms after initial powers of two.

    Args:
        spec (:class:`~SequenceSpec`): a linminus, pow2 or kbonacci spec
        m (`int`): the number of terms

    Returns:
        `tuple` of `int`: the first m terms
    """
    terms = []
    for n in range(m):
        if spec.kind is SequenceKind.LINEAR_MINUS:
            value = 1 if n == 0 else spec.k if n == 1 else \
                (spec.k - 1) * terms[-1] + (spec.k - spec.h - 1) * sum(terms[:-1]) + 1
        elif spec.kind is SequenceKind.POWERS_OF_TWO:
            value = sum(terms) + 1
        elif spec.kind is SequenceKind.KBONACCI:
            value = 1 << n if n < spec.k else 0
            for back in range(1, spec.k + 1) if n >= spec.k else ():
                value += terms[n - back]
        else:
            raise InvalidSequenceError(f'no full-history form for {spec.tag}')
        terms.append(value)
    return tuple(terms)
