from fractions import Fraction as F

import pytest

from chernratio.chern_calculus import ChernPoly, cpn_data, evaluate
from chernratio.hirzebruch_genera import (
    LPolynomial,
    alpha_expansion,
    l_polynomial,
    l_polynomials_upto,
    multiplicative_expansion,
    proportionality_constant,
    signature,
    tanh_characteristic_series,
    to_elementary_basis,
)

from oracles import l_polynomial_sympy

c = ChernPoly.generator


def as_dict(lpoly):
    return {tuple(p): v for p, v in lpoly.terms.items()}


def test_tanh_series():
    q = tanh_characteristic_series(8)
    assert list(q) == [1, 0, F(1, 3), 0, F(-1, 45), 0, F(2, 945), 0, F(-1, 4725)]


def test_l_polynomial_known_values():
    assert as_dict(l_polynomial(1)) == {(1,): F(1, 3)}
    assert as_dict(l_polynomial(2)) == {(2,): F(7, 45), (1, 1): F(-1, 45)}
    assert as_dict(l_polynomial(3)) == {
        (3,): F(62, 945), (2, 1): F(-13, 945), (1, 1, 1): F(2, 945)
    }
    # frozen from the sympy oracle
    assert as_dict(l_polynomial(4)) == {
        (4,): F(381, 14175),
        (3, 1): F(-71, 14175),
        (2, 2): F(-19, 14175),
        (2, 1, 1): F(22, 14175),
        (1, 1, 1, 1): F(-3, 14175),
    }


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_l_polynomial_matches_sympy(k):
    assert as_dict(l_polynomial(k)) == l_polynomial_sympy(k)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_multiplicative_sequence_stability(k):
    lower = l_polynomials_upto(k)
    for j in range(1, k):
        assert lower[j] == l_polynomial(j)


@pytest.mark.parametrize("k", range(1, 6))
def test_top_coefficient_nonzero(k):
    assert l_polynomial(k).coefficient([k]) != 0


def test_elementary_basis_simple():
    # x1^2 + x2^2 = e1^2 - 2 e2
    poly = {(2, 0): 1, (0, 2): 1}
    assert to_elementary_basis(poly, 2) == {(1, 1): 1, (2,): -2}
    with pytest.raises(ValueError):
        to_elementary_basis({(1, 0): 1}, 2)


def test_multiplicative_expansion_truncates():
    exp = multiplicative_expansion([1, 1, 1], 2, 2)
    assert all(sum(e) <= 2 for e in exp)
    assert exp[(1, 1)] == 1


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_signature_of_cpn(n):
    assert signature(cpn_data(n)) == 1
    assert evaluate(alpha_expansion(n), cpn_data(n)) == 1
    assert proportionality_constant(n) == F(1, n + 1)


def test_alpha_expansion_n2():
    assert alpha_expansion(2) == (c(1) * c(1) - 2 * c(2)).scale(F(1, 3))
    data = cpn_data(2)
    assert evaluate(alpha_expansion(2), data) == 1


def test_alpha_expansion_n4_classical():
    expected = ChernPoly({
        (4,): 14, (3, 1): -14, (2, 2): 3, (2, 1, 1): 4, (1, 1, 1, 1): -1,
    }).scale(F(1, 45))
    assert alpha_expansion(4) == expected


@pytest.mark.parametrize("n", [2, 4, 6, 8])
@pytest.mark.parametrize("s", [F(5), F(-2, 3), F(7, 11)])
def test_proportional_data(n, s):
    data = cpn_data(n).scaled(s)
    sig = signature(data)
    assert sig == s
    assert data.euler_characteristic == s * (n + 1)
    assert sig * (n + 1) == data.euler_characteristic


def test_signature_rejects_odd_dimension():
    with pytest.raises(ValueError):
        signature(cpn_data(3))
    with pytest.raises(ValueError):
        alpha_expansion(3)


def test_lpolynomial_json_round_trip():
    lp = l_polynomial(3)
    raw = lp.to_json()
    assert raw[0] == {"pontrjagin_partition": [3], "coefficient": "62/945"}
    assert LPolynomial.from_json(3, raw) == lp
