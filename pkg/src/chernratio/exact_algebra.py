"""Exact scalars, binomials and integer partitions.

Every coefficient in the package is a :class:`fractions.Fraction`; it is
exported here as ``Rational`` so the rest of the code has one name for it.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

Rational = Fraction


def as_rational(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Rational.

    Floats are refused: nothing in this package is allowed to be inexact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"not a rational: {value!r}") from None
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def rational_str(q):
    """Lowest-terms string: ``"p"`` for integers, ``"-p/q"`` otherwise."""
    return str(Fraction(q))


def binomial(n, k):
    """C(n, k) as a Rational; zero when k is out of range."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


class Partition(tuple):
    """A partition stored as a non-increasing tuple of positive parts.

    Construction sorts the parts, so ``Partition([1, 3]) == Partition([3, 1])``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def weight(self):
        return sum(self)

    @property
    def parts(self):
        return tuple(self)

    def __add__(self, other):
        # union of parts, i.e. the product of the indexed monomials
        return Partition(tuple(self) + tuple(other))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "[" + ",".join(str(p) for p in self) + "]"

    def to_json(self):
        return list(self)

    @classmethod
    def from_json(cls, data):
        return cls(data)

    @classmethod
    def parse(cls, text):
        """Parse ``"3,1"``, ``"[3,1]"`` or ``"[]"``."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        body = body.strip()
        if not body:
            return cls()
        try:
            parts = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition: {text!r}") from None
        return cls(parts)


def _partitions(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def iter_partitions(n):
    """Yield the partitions of n in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in _partitions(n, n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _partitions_cached(n):
    return tuple(iter_partitions(n))


def partitions_of(n):
    """All partitions of ``n``, e.g. ``[[4], [3,1], [2,2], [2,1,1], [1,1,1,1]]``."""
    return list(_partitions_cached(n))
