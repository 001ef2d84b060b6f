"""Truncated power series in one variable over the rationals."""

from fractions import Fraction

from .exact_algebra import as_rational, binomial


class TruncatedSeries:
    """Coefficients ``c[0..order]`` of a power series; higher terms are dropped.

    Instances are immutable and compare equal when order and coefficients agree.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients, order=None):
        coeffs = [as_rational(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self._coeffs = tuple(coeffs)

    @classmethod
    def from_polynomial(cls, coefficients, order):
        """Truncate an exact polynomial (low degree first) to ``order``."""
        return cls(list(coefficients)[: order + 1], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coefficients(self):
        return self._coeffs

    def __getitem__(self, k):
        return self._coeffs[k]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(map(str, self._coeffs))}])"

    def valuation(self):
        """Lowest degree with a nonzero coefficient, or None for the zero series."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return None

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1], order)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self, other)])

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self, other)])

    def __neg__(self):
        return TruncatedSeries([-a for a in self])

    def scale(self, factor):
        factor = as_rational(factor)
        return TruncatedSeries([factor * a for a in self])

    def __mul__(self, other):
        self._check(other)
        n = self.order
        a, b = self._coeffs, other._coeffs
        out = []
        for k in range(n + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1) if a[i]), Fraction(0)))
        return TruncatedSeries(out)

    def __truediv__(self, other):
        return series_div(self, other)

    def to_json(self):
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(data)


def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_div(num, den):
    """Quotient ``num / den`` at the common order.

    A common factor ``t**v`` (``v`` the valuation of ``den``) is cancelled
    first. Coefficients shifted in from beyond the truncation order are taken
    as zero, so the result is exact whenever both inputs are polynomials of
    degree at most the order; for genuinely truncated inputs, truncate the
    result to ``order - v``.
    """
    num._check(den)
    v = den.valuation()
    if v is None:
        raise ZeroDivisionError("division by the zero series")
    if any(num[k] for k in range(v)):
        raise ValueError(f"numerator is not divisible by t^{v}")
    order = num.order
    a = list(num.coefficients[v:]) + [Fraction(0)] * v
    b = list(den.coefficients[v:]) + [Fraction(0)] * v
    lead = b[0]
    q = []
    for k in range(order + 1):
        acc = a[k] - sum((q[i] * b[k - i] for i in range(k) if b[k - i]), Fraction(0))
        q.append(acc / lead)
    return TruncatedSeries(q, order)


def _binomial_poly(d, sign, order):
    # coefficients of (1 + sign*t)**d up to t**order
    return [binomial(d, k) * sign**k for k in range(order + 1)]


def sign_series(d, order):
    """Expansion of ``t * ((1+t)^d + (1-t)^d) / ((1+t)^d - (1-t)^d)``.

    >>> [str(c) for c in sign_series(3, 4)]
    ['1/3', '0', '8/9', '0', '-8/27']
    """
    if int(d) != d or d < 1:
        raise ValueError("sign_series needs an integer d >= 1")
    if order < 0:
        raise ValueError("order must be non-negative")
    d = int(d)
    # one spare degree because the denominator has valuation 1
    work = order + 1
    plus = _binomial_poly(d, 1, work)
    minus = _binomial_poly(d, -1, work)
    num = TruncatedSeries([0] + [p + m for p, m in zip(plus, minus)][:work], work)
    den = TruncatedSeries([p - m for p, m in zip(plus, minus)], work)
    return series_div(num, den).truncate(order)
