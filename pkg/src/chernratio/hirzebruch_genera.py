"""L-polynomials and the Hirzebruch signature of a set of Chern numbers.

Gradings: in an :class:`LPolynomial` the generator ``p_j`` has weight ``j``,
so ``L_k`` is homogeneous of weight ``k``. After substituting Chern
polynomials, ``p_j`` has Chern weight ``2j`` and ``L_k`` becomes a Chern
polynomial of weight ``2k``.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .chern_calculus import (
    ChernPoly,
    cpn_data,
    evaluate,
    pontrjagin_monomial,
    pontrjagin_number,
)
from .exact_algebra import Partition, as_rational
from .power_series import TruncatedSeries, series_div


def tanh_characteristic_series(order):
    """``x / tanh(x)`` up to ``x**order``, as ``x cosh(x) / sinh(x)``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    work = order + 1
    x_cosh = [Fraction(0)] * (work + 1)
    sinh = [Fraction(0)] * (work + 1)
    for k in range(work + 1):
        if k % 2 == 1:
            x_cosh[k] = Fraction(1, factorial(k - 1))
            sinh[k] = Fraction(1, factorial(k))
    q = series_div(TruncatedSeries(x_cosh, work), TruncatedSeries(sinh, work))
    return q.truncate(order)


# -- polynomials in k commuting variables, dict: exponent tuple -> Fraction --

def _mul(a, b, max_degree=None):
    out = {}
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            if max_degree is not None and da + sum(eb) > max_degree:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _elementary(j, nvars):
    # e_j: sum of all squarefree monomials of degree j
    out = {}

    def rec(start, left, expo):
        if left == 0:
            out[tuple(expo)] = Fraction(1)
            return
        for i in range(start, nvars):
            expo[i] = 1
            rec(i + 1, left - 1, expo)
            expo[i] = 0

    rec(0, j, [0] * nvars)
    return out


def to_elementary_basis(poly, nvars):
    """Rewrite a symmetric polynomial in the elementary symmetric polynomials.

    Greedy elimination of the lex-leading monomial. Returns a dict from
    :class:`Partition` (``e_{i_1} ... e_{i_r}``) to coefficient. Raises
    ``ValueError`` when ``poly`` is not symmetric.
    """
    elem = [None] + [_elementary(j, nvars) for j in range(1, nvars + 1)]
    one = {(0,) * nvars: Fraction(1)}
    rest = {e: Fraction(c) for e, c in poly.items() if c}
    out = {}
    while rest:
        lead = max(rest)
        coeff = rest[lead]
        if any(lead[i] < lead[i + 1] for i in range(nvars - 1)):
            raise ValueError("polynomial is not symmetric")
        parts = []
        for j in range(1, nvars + 1):
            nxt = lead[j] if j < nvars else 0
            parts.extend([j] * (lead[j - 1] - nxt))
        prod = one
        for j in parts:
            prod = _mul(prod, elem[j])
        for e, c in prod.items():
            rest[e] = rest.get(e, 0) - coeff * c
            if not rest[e]:
                del rest[e]
        key = Partition(parts)
        out[key] = out.get(key, 0) + coeff
    return {p: c for p, c in out.items() if c}


def multiplicative_expansion(series, nvars, max_degree):
    """``prod_i Q(x_i)`` truncated at total degree ``max_degree``.

    ``series[j]`` is the coefficient of ``x**j`` in ``Q``.
    """
    zero = (0,) * nvars
    prod = {zero: Fraction(1)}
    for i in range(nvars):
        factor = {}
        for j in range(max_degree + 1):
            if series[j]:
                e = list(zero)
                e[i] = j
                factor[tuple(e)] = series[j]
        prod = _mul(prod, factor, max_degree)
    return prod


class LPolynomial:
    """``L_k`` as a polynomial in Pontrjagin classes ``p_1..p_k``."""

    __slots__ = ("k", "_terms")

    def __init__(self, k, terms):
        clean = {}
        for key, coeff in terms.items():
            part = key if isinstance(key, Partition) else Partition(key)
            if part.weight != k:
                raise ValueError(f"monomial p{list(part)} does not have weight {k}")
            coeff = as_rational(coeff)
            if coeff:
                clean[part] = coeff
        self.k = k
        self._terms = clean

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, parts):
        return self._terms.get(Partition(parts), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, LPolynomial):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    def __repr__(self):
        return f"LPolynomial(k={self.k}, {self})"

    def __str__(self):
        pieces = []
        for part in sorted(self._terms, reverse=True):
            mono = "*".join(f"p{i}" for i in part)
            pieces.append(f"{self._terms[part]}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ") or "0"

    def to_chern(self, n):
        """Substitute ``p_j`` by its Chern polynomial on a complex n-manifold."""
        out = ChernPoly.zero(2 * self.k)
        for part, coeff in self._terms.items():
            out = out + pontrjagin_monomial(part, n).scale(coeff)
        return out

    def to_json(self):
        return [
            {"pontrjagin_partition": part.to_json(), "coefficient": str(self._terms[part])}
            for part in sorted(self._terms, reverse=True)
        ]

    @classmethod
    def from_json(cls, k, data):
        return cls(k, {Partition(r["pontrjagin_partition"]): r["coefficient"] for r in data})


def _l_polynomials_from(nvars, max_degree):
    q = tanh_characteristic_series(2 * max_degree)
    # x_i = beta_i**2, so Q(x) keeps only the even coefficients
    even = [q[2 * j] for j in range(max_degree + 1)]
    expansion = multiplicative_expansion(even, nvars, max_degree)
    graded = {j: {} for j in range(1, max_degree + 1)}
    for e, c in expansion.items():
        deg = sum(e)
        if deg:
            graded[deg][e] = c
    return {
        j: LPolynomial(j, to_elementary_basis(graded[j], nvars))
        for j in range(1, max_degree + 1)
    }


@lru_cache(maxsize=None)
def l_polynomial(k):
    """The k-th Hirzebruch L-polynomial.

    >>> str(l_polynomial(2))
    '7/45*p2 - 1/45*p1*p1'
    """
    if k < 1:
        raise ValueError("k must be positive")
    return _l_polynomials_from(k, k)[k]


def l_polynomials_upto(k):
    """L_1..L_k from a single k-variable expansion."""
    return _l_polynomials_from(k, k)


def alpha_expansion(n):
    """Weight-n Chern polynomial whose value on any Chern data is the signature."""
    if n % 2:
        raise ValueError(f"signature formula needs even complex dimension, got {n}")
    if n == 0:
        return ChernPoly.constant(1)
    return l_polynomial(n // 2).to_chern(n)


def signature(data):
    """Hirzebruch signature ``<L_{n/2}, [M]>`` from the Chern numbers of M."""
    n = data.n
    if n % 2:
        raise ValueError(f"signature formula needs even complex dimension, got {n}")
    total = Fraction(0)
    for part, coeff in l_polynomial(n // 2).terms.items():
        total += coeff * pontrjagin_number(part, data)
    return total


def proportionality_constant(n):
    """f(n) with ``signature(M) = f(n) * chi(M)`` whenever M has CP^n's Chern ratios."""
    data = cpn_data(n)
    return signature(data) / data.euler_characteristic


def signature_via_alpha(data):
    return evaluate(alpha_expansion(data.n), data)

