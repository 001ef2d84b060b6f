"""Chern polynomials, Chern numbers of CP^n and Pontrjagin classes.

A :class:`ChernPoly` is a homogeneous polynomial in abstract generators
``c_1, c_2, ...``; a monomial ``c_{i_1} ... c_{i_r}`` is keyed by the
partition ``(i_1, ..., i_r)``. A :class:`ChernData` holds the Chern numbers
of a closed complex n-manifold and is the thing polynomials get evaluated on.
"""

from fractions import Fraction

from .exact_algebra import Partition, as_rational, binomial, partitions_of


class ChernPoly:
    """Homogeneous Chern polynomial of a fixed weight.

    ``terms`` maps :class:`Partition` to a nonzero Rational. The zero
    polynomial still carries a weight so products stay graded.
    """

    __slots__ = ("_terms", "_weight")

    def __init__(self, terms=None, weight=None):
        clean = {}
        for key, coeff in (terms or {}).items():
            part = key if isinstance(key, Partition) else Partition(key)
            coeff = as_rational(coeff)
            if coeff:
                clean[part] = clean.get(part, Fraction(0)) + coeff
                if not clean[part]:
                    del clean[part]
        weights = {p.weight for p in clean}
        if len(weights) > 1:
            raise ValueError(f"inhomogeneous Chern polynomial, weights {sorted(weights)}")
        if weights:
            (w,) = weights
            if weight is not None and weight != w:
                raise ValueError(f"declared weight {weight} but monomials have weight {w}")
            weight = w
        elif weight is None:
            raise ValueError("the zero polynomial needs an explicit weight")
        self._terms = clean
        self._weight = weight

    @classmethod
    def generator(cls, i):
        """The class ``c_i``; ``c_0`` is the constant 1."""
        if i == 0:
            return cls.constant(1)
        return cls({Partition([i]): 1})

    @classmethod
    def monomial(cls, parts, coeff=1):
        part = Partition(parts)
        return cls({part: coeff}, part.weight)

    @classmethod
    def constant(cls, value):
        return cls({Partition(): value}, 0)

    @classmethod
    def zero(cls, weight):
        return cls({}, weight)

    @property
    def weight(self):
        return self._weight

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, parts):
        return self._terms.get(Partition(parts), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, ChernPoly):
            return NotImplemented
        return self._weight == other._weight and self._terms == other._terms

    def __hash__(self):
        return hash((self._weight, frozenset(self._terms.items())))

    def __add__(self, other):
        if self._weight != other._weight:
            raise ValueError(f"cannot add weights {self._weight} and {other._weight}")
        out = dict(self._terms)
        for part, coeff in other._terms.items():
            out[part] = out.get(part, Fraction(0)) + coeff
        return ChernPoly(out, self._weight)

    def __neg__(self):
        return ChernPoly({p: -c for p, c in self._terms.items()}, self._weight)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = as_rational(factor)
        return ChernPoly({p: factor * c for p, c in self._terms.items()}, self._weight)

    def __mul__(self, other):
        if not isinstance(other, ChernPoly):
            return self.scale(other)
        return chern_poly_mul(self, other)

    __rmul__ = scale

    def __pow__(self, k):
        out = ChernPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        if not self._terms:
            return f"ChernPoly(0, weight={self._weight})"
        return f"ChernPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for part in sorted(self._terms, reverse=True):
            coeff = self._terms[part]
            mono = "*".join(f"c{i}" for i in part) or "1"
            pieces.append(f"{coeff}*{mono}" if coeff != 1 else mono)
        return " + ".join(pieces).replace("+ -", "- ")

    def to_json(self):
        return [
            {"partition": part.to_json(), "coefficient": str(self._terms[part])}
            for part in sorted(self._terms, reverse=True)
        ]

    @classmethod
    def from_json(cls, data, weight=None):
        terms = {Partition(rec["partition"]): rec["coefficient"] for rec in data}
        return cls(terms, weight)


def chern_poly_mul(a, b):
    out = {}
    for pa, ca in a._terms.items():
        for pb, cb in b._terms.items():
            key = pa + pb
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return ChernPoly(out, a.weight + b.weight)


class ChernData:
    """The full table of Chern numbers ``c_I(M)`` of a complex n-manifold."""

    __slots__ = ("n", "_numbers")

    def __init__(self, n, numbers):
        if n < 1:
            raise ValueError("complex dimension must be positive")
        table = {}
        for key, value in numbers.items():
            part = key if isinstance(key, Partition) else Partition(key)
            table[part] = as_rational(value)
        expected = set(partitions_of(n))
        if set(table) != expected:
            missing = sorted(expected - set(table), reverse=True)
            extra = sorted(set(table) - expected, reverse=True)
            raise ValueError(
                f"Chern numbers must be indexed by the partitions of {n}"
                f" (missing {[list(p) for p in missing]}, unexpected {[list(p) for p in extra]})"
            )
        self.n = n
        self._numbers = table

    @property
    def numbers(self):
        return dict(self._numbers)

    @property
    def euler_characteristic(self):
        return self._numbers[Partition([self.n])]

    chi = euler_characteristic

    def __getitem__(self, parts):
        return self._numbers[Partition(parts)]

    def __eq__(self, other):
        if not isinstance(other, ChernData):
            return NotImplemented
        return self.n == other.n and self._numbers == other._numbers

    def __repr__(self):
        body = ", ".join(f"{p}: {v}" for p, v in self.items())
        return f"ChernData(n={self.n}, {{{body}}})"

    def items(self):
        """(partition, number) pairs in canonical partition order."""
        return [(p, self._numbers[p]) for p in partitions_of(self.n)]

    def scaled(self, factor):
        factor = as_rational(factor)
        return ChernData(self.n, {p: factor * v for p, v in self._numbers.items()})

    def to_json(self):
        return {
            "n": self.n,
            "numbers": {str(p): str(v) for p, v in self.items()},
        }

    @classmethod
    def from_json(cls, data):
        numbers = {Partition.parse(k): v for k, v in data["numbers"].items()}
        return cls(int(data["n"]), numbers)


def _check_partition_of(n, parts):
    part = Partition(parts)
    if part.weight != n:
        raise ValueError(f"{part} is not a partition of {n}")
    return part


def chern_number_cpn(n, parts):
    """``c_I(CP^n) = prod_j C(n+1, i_j)``."""
    part = _check_partition_of(n, parts)
    out = Fraction(1)
    for i in part:
        out *= binomial(n + 1, i)
    return out


def cpn_data(n):
    """Chern-number table of CP^n."""
    return ChernData(n, {p: chern_number_cpn(n, p) for p in partitions_of(n)})


def ratio_cpn(n, num, den):
    """``c_I(CP^n) / c_J(CP^n)``; every closed complex hyperbolic n-manifold has the same ratio."""
    return chern_number_cpn(n, num) / chern_number_cpn(n, den)


def total_chern_product(n, max_weight):
    """Graded pieces of ``(sum_i c_i)(sum_j (-1)^j c_j)`` up to ``max_weight``.

    Generators are limited to ``c_0..c_n``. Returns a list indexed by weight.
    """
    pieces = [ChernPoly.zero(w) for w in range(max_weight + 1)]
    top = min(n, max_weight)
    for i in range(top + 1):
        for j in range(top + 1):
            if i + j > max_weight:
                continue
            term = ChernPoly.generator(i) * ChernPoly.generator(j)
            pieces[i + j] = pieces[i + j] + (term if j % 2 == 0 else -term)
    return pieces


def pontrjagin_class(k, n):
    """``p_k`` of a complex n-manifold as a weight-2k Chern polynomial.

    ``p_k = c_k^2 - 2 c_{k-1} c_{k+1} + 2 c_{k-2} c_{k+2} - ... +- 2 c_{2k}``.
    """
    if k < 1:
        raise ValueError("Pontrjagin index must be positive")
    if 2 * k > n:
        raise ValueError(f"p_{k} has weight {2 * k}, above the complex dimension {n}")
    out = ChernPoly.generator(k) * ChernPoly.generator(k)
    for j in range(1, k + 1):
        term = ChernPoly.generator(k - j) * ChernPoly.generator(k + j)
        out = out + term.scale(2 * (-1) ** j)
    return out


def evaluate(poly, data):
    """Pair a weight-n Chern polynomial with the Chern numbers in ``data``."""
    if poly.weight != data.n:
        raise ValueError(f"polynomial has weight {poly.weight}, manifold has dimension {data.n}")
    total = Fraction(0)
    for part, coeff in poly.terms.items():
        # c_i vanishes for i above the dimension
        if part and part[0] > data.n:
            continue
        total += coeff * data[part]
    return total


def pontrjagin_monomial(parts, n):
    """``p_{i_1} ... p_{i_r}`` written in Chern classes of a complex n-manifold."""
    out = ChernPoly.constant(1)
    for i in Partition(parts):
        out = out * pontrjagin_class(i, n)
    return out


def pontrjagin_number(parts, data):
    """Pontrjagin number ``p_I`` for a partition ``I`` of ``n/2``."""
    n = data.n
    if n % 2:
        raise ValueError(f"Pontrjagin numbers need even complex dimension, got {n}")
    _check_partition_of(n // 2, parts)
    return evaluate(pontrjagin_monomial(parts, n), data)
