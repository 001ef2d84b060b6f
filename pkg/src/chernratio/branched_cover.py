"""Invariants of a d-fold cyclic branched cover X -> M' branched along N'.

The tower is ``(X, Y) -> (M', N') -> (M, N)``, where the second map is a
degree-m regular cover of a complex hyperbolic pair. Euler characteristics
and the signature of M are multiplied by m on the way up. The top Chern
numbers ``c_k((N'_k)^perp)`` of the self-intersection normal bundles are
free inputs (``normal_chern``); they already live on N', not on N.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Optional

from .exact_algebra import as_rational
from .power_series import sign_series


def _as_int(value, name):
    q = as_rational(value)
    if q.denominator != 1:
        raise ValueError(f"{name} must be an integer, got {q}")
    return int(q)


@dataclass(frozen=True)
class CoverInput:
    """Numeric data of one branched-cover instance.

    ``chi_M``, ``chi_N`` and ``sigma_M`` describe the base pair (M, N).
    ``sigma_M`` defaults to ``chi_M / (n+1)``, the value forced on a complex
    hyperbolic M. ``normal_chern[k-1]`` is ``c_k((N'_k)^perp)``; for n = 2 it
    may be omitted and is then ``chi(N') / 2``.
    """

    n: int
    d: int
    m: int
    chi_M: Fraction
    chi_N: Fraction
    normal_chern: Optional[tuple] = None
    sigma_M: Optional[Fraction] = None

    def __post_init__(self):
        n = _as_int(self.n, "n")
        d = _as_int(self.d, "d")
        m = _as_int(self.m, "m")
        if n < 2 or n % 2:
            raise ValueError(f"n must be even and >= 2, got {n}")
        if d < 1:
            raise ValueError(f"ramification degree d must be >= 1, got {d}")
        if m < 1:
            raise ValueError(f"covering degree m must be >= 1, got {m}")
        chi_M = as_rational(self.chi_M)
        chi_N = as_rational(self.chi_N)
        if n == 2 and chi_N == 0:
            raise ValueError("chi(N) must be nonzero when n = 2")
        normal = self.normal_chern
        if normal is not None:
            normal = tuple(as_rational(c) for c in normal)
            if len(normal) != n // 2:
                raise ValueError(f"normal_chern needs {n // 2} entries for n = {n}, got {len(normal)}")
        elif n > 2:
            raise ValueError(f"normal_chern is required when n > 2 ({n // 2} entries)")
        sigma = None if self.sigma_M is None else as_rational(self.sigma_M)
        for name, value in (("n", n), ("d", d), ("m", m), ("chi_M", chi_M),
                            ("chi_N", chi_N), ("normal_chern", normal), ("sigma_M", sigma)):
            object.__setattr__(self, name, value)

    @property
    def chi_Mp(self):
        return self.m * self.chi_M

    @property
    def chi_Np(self):
        return self.m * self.chi_N

    @property
    def sigma_Mp(self):
        if self.sigma_M is None:
            return self.chi_Mp / (self.n + 1)
        return self.m * self.sigma_M

    @property
    def normal_chern_values(self):
        """``normal_chern`` with the n = 2 default filled in."""
        if self.normal_chern is None:
            return (self.chi_Np / 2,)
        return self.normal_chern

    def with_d(self, d):
        return CoverInput(self.n, d, self.m, self.chi_M, self.chi_N, self.normal_chern, self.sigma_M)

    def with_m(self, m):
        return CoverInput(self.n, self.d, m, self.chi_M, self.chi_N, self.normal_chern, self.sigma_M)

    def to_json(self):
        out = {
            "n": self.n,
            "d": self.d,
            "m": self.m,
            "chi_M": str(self.chi_M),
            "chi_N": str(self.chi_N),
        }
        if self.normal_chern is not None:
            out["normal_chern"] = [str(c) for c in self.normal_chern]
        if self.sigma_M is not None:
            out["sigma_M"] = str(self.sigma_M)
        return out

    @classmethod
    def from_json(cls, data):
        unknown = set(data) - {"n", "d", "m", "chi_M", "chi_N", "normal_chern", "sigma_M"}
        if unknown:
            raise ValueError(f"unknown CoverInput fields: {sorted(unknown)}")
        normal = data.get("normal_chern")
        return cls(
            n=data["n"],
            d=data["d"],
            m=data.get("m", 1),
            chi_M=data["chi_M"],
            chi_N=data["chi_N"],
            normal_chern=None if normal is None else tuple(normal),
            sigma_M=data.get("sigma_M"),
        )


def chi_branched(d, chi_Mp, chi_Np):
    """Euler characteristic of the d-fold cover branched along N'."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return d * as_rational(chi_Mp) - (d - 1) * as_rational(chi_Np)


def sigma_tower_coefficients(d, n):
    """``a_1..a_{n/2}`` in ``sigma(X) = d sigma(M') + sum_k a_k sigma(Y_2k)``.

    ``a_k = -d * s_{2k}`` where ``s`` is :func:`sign_series`.
    """
    if n % 2:
        raise ValueError("n must be even")
    s = sign_series(d, n)
    return [-d * s[2 * k] for k in range(1, n // 2 + 1)]


def sigma_Y2k_from_normal_chern(k, d, normal_chern):
    """``sigma(Y_2k) = c_k((N'_k)^perp) / d`` for ``k`` counted from 1."""
    if not 1 <= k <= len(normal_chern):
        raise IndexError(f"k={k} outside 1..{len(normal_chern)}")
    return as_rational(normal_chern[k - 1]) / d


def tower_signatures(inp, d=None):
    """``[sigma(Y_2), sigma(Y_4), ...]`` for the instance at degree ``d``."""
    d = inp.d if d is None else d
    normal = inp.normal_chern_values
    return [sigma_Y2k_from_normal_chern(k, d, normal) for k in range(1, len(normal) + 1)]


def sigma_branched(inp):
    """Signature of the branched cover X."""
    coeffs = sigma_tower_coefficients(inp.d, inp.n)
    tower = tower_signatures(inp)
    return inp.d * inp.sigma_Mp + sum((a * s for a, s in zip(coeffs, tower)), Fraction(0))


def sigma_base_from_branched(d, sigma_X, tower, n):
    """Recover sigma(M') from sigma(X) and the tower signatures.

    This is the un-solved form ``sigma(M') = s_0 sigma(X) + sum_k s_{2k} sigma(Y_2k)``.
    """
    s = sign_series(d, n)
    total = s[0] * as_rational(sigma_X)
    for k, sig in enumerate(tower, start=1):
        total += s[2 * k] * as_rational(sig)
    return total


def chi_of_cover(inp):
    return chi_branched(inp.d, inp.chi_Mp, inp.chi_Np)


def defect_n2(inp):
    """``c_1^2(X) - 3 c_2(X) = 3 sigma(X) - chi(X)`` for a complex surface X."""
    if inp.n != 2:
        raise ValueError(f"the c1^2 - 3c2 defect is for n = 2, got n = {inp.n}")
    return 3 * sigma_branched(inp) - chi_of_cover(inp)


def defect_n2_closed_form(m, d, chi_N):
    """``m (d-1)^2 / (2d) * chi(N)``."""
    return m * Fraction((d - 1) ** 2, 2 * d) * as_rational(chi_N)


def obstruction_terms(inp, d=None):
    """Summands of ``sigma(X) - chi(X)/(n+1)`` under ``sigma(M') = chi(M')/(n+1)``.

    First the Euler term ``(d-1)/(n+1) chi(N')``, then ``-s_{2k}(d) c_k`` for
    each normal-bundle Chern number. Their sum vanishes whenever X has the
    Chern-number ratios of CP^n.
    """
    d = inp.d if d is None else d
    if d < 1:
        raise ValueError("d must be >= 1")
    s = sign_series(d, inp.n)
    terms = [Fraction(d - 1, inp.n + 1) * inp.chi_Np]
    for k, c in enumerate(inp.normal_chern_values, start=1):
        terms.append(-s[2 * k] * c)
    return terms


def obstruction_value(inp, d=None):
    return sum(obstruction_terms(inp, d), Fraction(0))


# -- exact univariate polynomials, coefficient lists low degree first --

def poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def poly_eval(coeffs, x):
    acc = Fraction(0) if any(isinstance(c, Fraction) for c in coeffs) else 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def interpolate(xs, ys):
    """Lagrange interpolation through ``(xs[i], ys[i])``; exact coefficients."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # basis *= (x - xj)
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        scale = as_rational(yi) / denom
        for t, b in enumerate(basis):
            result[t] += scale * b
    return poly_trim(result)


def integer_clear(coeffs):
    """Multiply by the lcm of the denominators; returns integer coefficients."""
    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    return [int(Fraction(c) * den) for c in coeffs]


def integer_roots(coeffs, lo, hi):
    """Integer roots of a nonzero polynomial in ``[lo, hi]``, with ``lo >= 1``.

    After clearing denominators and dividing out powers of x, any positive
    integer root divides the constant term and is at most the Cauchy bound,
    so only those candidates are evaluated.
    """
    ints = poly_trim(integer_clear(coeffs))
    if not ints:
        raise ValueError("the zero polynomial has every integer as a root")
    if lo < 1:
        raise ValueError("scan range must start at 1 or above")
    while not ints[0]:
        ints.pop(0)
    const, lead = abs(ints[0]), abs(ints[-1])
    cauchy = 1 + -(-max((abs(c) for c in ints[:-1]), default=0) // lead)
    top = min(hi, cauchy)
    return [r for r in range(lo, top + 1) if const % r == 0 and poly_eval(ints, r) == 0]


class ObstructionPolynomial(NamedTuple):
    """``T(d) = d * obstruction_value(d)`` and its integer roots in the scan range."""

    coefficients: list
    roots: list
    identically_zero: bool
    scan_bound: int

    def __call__(self, d):
        return poly_eval(self.coefficients, as_rational(d))

    @property
    def degree(self):
        return len(self.coefficients) - 1


def obstruction_polynomial(inp, scan_bound):
    """Interpolate ``T(d)`` through d = 1..n+3 and scan [2, scan_bound] for roots.

    Each ``d * s_{2k}(d)`` is an even polynomial of degree 2k <= n in d, and the
    Euler term contributes degree 2, so n+3 nodes over-determine ``T``; the
    degree is checked against the bound n+1.
    """
    if scan_bound < 2:
        raise ValueError("scan_bound must be >= 2")
    n = inp.n
    xs = list(range(1, n + 4))
    ys = [d * obstruction_value(inp, d) for d in xs]
    coeffs = interpolate(xs, ys)
    if len(coeffs) - 1 > n + 1:
        raise ArithmeticError(f"interpolated degree {len(coeffs) - 1} exceeds the bound {n + 1}")
    if not coeffs:
        return ObstructionPolynomial([], [], True, scan_bound)
    return ObstructionPolynomial(coeffs, integer_roots(coeffs, 2, scan_bound), False, scan_bound)


@dataclass(frozen=True)
class CoverReport:
    """Derived invariants of a :class:`CoverInput`.

    ``defect_n2`` and ``defect_m_slope`` are only set for n = 2.
    ``chi_term_m_slope`` is the per-unit-m growth of the Euler term of the
    obstruction, ``(d-1)/(n+1) chi(N)``.
    """

    input: CoverInput
    sigma_X: Fraction
    chi_X: Fraction
    sigma_tower: tuple
    tower_coefficients: tuple
    obstruction_at_d: Fraction
    obstruction: tuple
    obstruction_roots: tuple
    obstruction_identically_zero: bool
    scan_bound: int
    chi_term_m_slope: Fraction
    defect_n2: Optional[Fraction] = None
    defect_closed_form: Optional[Fraction] = None
    defect_m_slope: Optional[Fraction] = None

    def to_json(self):
        def q(x):
            return None if x is None else str(x)

        return {
            "input": self.input.to_json(),
            "sigma_X": q(self.sigma_X),
            "chi_X": q(self.chi_X),
            "sigma_tower": [q(x) for x in self.sigma_tower],
            "tower_coefficients": [q(x) for x in self.tower_coefficients],
            "obstruction_at_d": q(self.obstruction_at_d),
            "obstruction": [q(x) for x in self.obstruction],
            "obstruction_roots": list(self.obstruction_roots),
            "obstruction_identically_zero": self.obstruction_identically_zero,
            "scan_bound": self.scan_bound,
            "chi_term_m_slope": q(self.chi_term_m_slope),
            "defect_n2": q(self.defect_n2),
            "defect_closed_form": q(self.defect_closed_form),
            "defect_m_slope": q(self.defect_m_slope),
        }

    @classmethod
    def from_json(cls, data):
        def q(x):
            return None if x is None else as_rational(x)

        return cls(
            input=CoverInput.from_json(data["input"]),
            sigma_X=q(data["sigma_X"]),
            chi_X=q(data["chi_X"]),
            sigma_tower=tuple(q(x) for x in data["sigma_tower"]),
            tower_coefficients=tuple(q(x) for x in data["tower_coefficients"]),
            obstruction_at_d=q(data["obstruction_at_d"]),
            obstruction=tuple(q(x) for x in data["obstruction"]),
            obstruction_roots=tuple(int(r) for r in data["obstruction_roots"]),
            obstruction_identically_zero=bool(data["obstruction_identically_zero"]),
            scan_bound=int(data["scan_bound"]),
            chi_term_m_slope=q(data["chi_term_m_slope"]),
            defect_n2=q(data.get("defect_n2")),
            defect_closed_form=q(data.get("defect_closed_form")),
            defect_m_slope=q(data.get("defect_m_slope")),
        )


def cover_report(inp, scan_bound=1000):
    poly = obstruction_polynomial(inp, scan_bound)
    defect = closed = slope = None
    if inp.n == 2:
        defect = defect_n2(inp)
        closed = defect_n2_closed_form(inp.m, inp.d, inp.chi_N)
        slope = defect_n2_closed_form(1, inp.d, inp.chi_N)
    return CoverReport(
        input=inp,
        sigma_X=sigma_branched(inp),
        chi_X=chi_of_cover(inp),
        sigma_tower=tuple(tower_signatures(inp)),
        tower_coefficients=tuple(sigma_tower_coefficients(inp.d, inp.n)),
        obstruction_at_d=obstruction_value(inp),
        obstruction=tuple(poly.coefficients),
        obstruction_roots=tuple(poly.roots),
        obstruction_identically_zero=poly.identically_zero,
        scan_bound=scan_bound,
        chi_term_m_slope=Fraction(inp.d - 1, inp.n + 1) * inp.chi_N,
        defect_n2=defect,
        defect_closed_form=closed,
        defect_m_slope=slope,
    )


def defect_sweep(inp, ms):
    """``defect_n2`` of the same instance lifted to each covering degree in ``ms``."""
    return [defect_n2(inp.with_m(m)) for m in ms]
