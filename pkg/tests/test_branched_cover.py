from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chernratio.branched_cover import (
    CoverInput,
    CoverReport,
    chi_branched,
    cover_report,
    defect_n2,
    defect_n2_closed_form,
    defect_sweep,
    integer_roots,
    interpolate,
    obstruction_polynomial,
    obstruction_terms,
    obstruction_value,
    poly_eval,
    sigma_base_from_branched,
    sigma_branched,
    sigma_tower_coefficients,
    sigma_Y2k_from_normal_chern,
    tower_signatures,
)


def surface(d, chi_M, chi_N, m=1, sigma_M=None, normal=None):
    return CoverInput(n=2, d=d, m=m, chi_M=chi_M, chi_N=chi_N, normal_chern=normal, sigma_M=sigma_M)


# n = 4 instances whose T(d) factors as (d-1)(d-2)(d-3)(d+6)/15 and
# (d-1)(d-3)(d^2+4d-2)/5 respectively (factorizations checked with sympy)
ROOTS_23 = CoverInput(n=4, d=2, m=1, chi_M=10, chi_N=-20, normal_chern=(-8, 3))
ROOT_3 = CoverInput(n=4, d=2, m=1, chi_M=10, chi_N=-20, normal_chern=(-6, 9))


def test_chi_branched():
    assert chi_branched(1, 7, -3) == 7
    assert chi_branched(2, 3, -4) == 10
    assert chi_branched(3, 6, -2) == 22


@pytest.mark.parametrize("d", range(1, 13))
def test_tower_coefficients(d):
    a = sigma_tower_coefficients(d, 6)
    assert a[0] == -F(d * d - 1, 3)
    assert a[1] == F((d * d - 1) * (d * d - 4), 45)
    assert len(a) == 3


def test_tower_coefficient_vanishes_at_d2():
    assert sigma_tower_coefficients(2, 4)[1] == 0


def test_sigma_Y2k():
    chi_Np = F(-8)
    assert sigma_Y2k_from_normal_chern(1, 5, [chi_Np / 2]) == chi_Np / 10
    assert sigma_Y2k_from_normal_chern(2, 1, [4, 7]) == 7
    assert sigma_Y2k_from_normal_chern(1, 3, [-6]) == -2
    with pytest.raises(IndexError):
        sigma_Y2k_from_normal_chern(2, 3, [-6])


def test_sigma_branched_examples():
    assert sigma_branched(surface(2, 3, -4, sigma_M=1)) == 3
    assert sigma_branched(surface(3, 6, -6, sigma_M=1)) == F(17, 3)
    inp = surface(1, 9, -4, sigma_M=2)
    assert sigma_branched(inp) == 2
    inp4 = CoverInput(n=4, d=1, m=1, chi_M=10, chi_N=-4, normal_chern=(3, 5))
    assert sigma_branched(inp4) == 2


def test_sigma_default_is_proportional():
    assert surface(2, 3, -4).sigma_Mp == 1
    assert surface(2, 3, -4, m=4).sigma_Mp == 4
    assert surface(2, 3, -4, m=4, sigma_M=2).sigma_Mp == 8


def test_defect_examples():
    inp = surface(2, 3, -4)
    assert defect_n2(inp) == -1
    assert defect_n2_closed_form(1, 2, -4) == -1
    assert defect_n2(surface(1, 3, -4)) == 0
    assert defect_n2_closed_form(2, 3, -2) == F(-8, 3)
    assert defect_n2(surface(3, 9, -2, m=2)) == F(-8, 3)
    with pytest.raises(ValueError):
        defect_n2(ROOT_3)


@pytest.mark.parametrize("d", range(1, 13))
@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("chi_N", [-2, -4, -6, -8])
def test_defect_two_routes(d, m, chi_N):
    for chi_M in (3, 6, 9):
        inp = surface(d, chi_M, chi_N, m=m)
        assert defect_n2(inp) == defect_n2_closed_form(m, d, chi_N)
        assert 3 * obstruction_value(inp) == defect_n2(inp)


def test_defect_sweep_is_arithmetic_progression():
    inp = surface(4, 6, -2)
    defects = defect_sweep(inp, range(1, 11))
    step = F(9, 8) * -2
    assert defects == [m * step for m in range(1, 11)]


def test_obstruction_examples():
    assert obstruction_value(surface(5, 3, -6)) == F(16, 30) * -6
    for d in (2, 3, 7):
        assert obstruction_value(surface(d, 3, -6)) == F((d - 1) ** 2, 6 * d) * -6
    assert obstruction_value(surface(1, 3, -6)) == 0
    zero_tower = CoverInput(n=4, d=2, m=1, chi_M=5, chi_N=-10, normal_chern=(0, 0))
    assert obstruction_value(zero_tower) == -2
    with pytest.raises(ValueError):
        obstruction_value(zero_tower, 0)


def test_obstruction_term_count():
    for inp in (surface(3, 3, -4), ROOT_3, CoverInput(6, 2, 1, 7, -2, (1, 2, 3))):
        assert len(obstruction_terms(inp)) <= 1 + inp.n // 2


def test_obstruction_polynomial_n2():
    inp = surface(2, 3, -6, normal=(-3,))
    poly = obstruction_polynomial(inp, 1000)
    assert poly.coefficients == [-1, 2, -1]
    assert poly.roots == []
    assert not poly.identically_zero


def test_obstruction_polynomial_roots_n4():
    assert obstruction_polynomial(ROOTS_23, 10**6).roots == [2, 3]
    assert obstruction_polynomial(ROOT_3, 10**6).roots == [3]
    assert obstruction_polynomial(ROOTS_23, 2).roots == [2]
    p = obstruction_polynomial(ROOTS_23, 10)
    assert p.coefficients == [F(-12, 5), 4, F(-5, 3), 0, F(1, 15)]


def test_obstruction_polynomial_identically_zero():
    inp = CoverInput(n=4, d=3, m=1, chi_M=5, chi_N=0, normal_chern=(0, 0))
    poly = obstruction_polynomial(inp, 100)
    assert poly.identically_zero
    assert poly.roots == []


@pytest.mark.parametrize("inp", [surface(2, 3, -4), ROOTS_23, ROOT_3,
                                 CoverInput(6, 2, 3, 7, -2, (1, F(-2, 3), 3))])
def test_interpolation_fresh_points(inp):
    poly = obstruction_polynomial(inp, 50)
    assert poly.degree <= inp.n + 1
    for d in range(inp.n + 5, inp.n + 10):
        assert poly(d) == d * obstruction_value(inp, d)


def test_interpolate_and_roots_helpers():
    coeffs = interpolate([0, 1, 2, 3], [2, -1, 0, 5])
    assert [poly_eval(coeffs, x) for x in range(4)] == [2, -1, 0, 5]
    assert integer_roots([-6, 11, -6, 1], 1, 100) == [1, 2, 3]
    assert integer_roots([0, 0, -6, 11, -6, 1], 2, 100) == [2, 3]
    assert integer_roots([F(1, 2), F(-1, 3)], 1, 10) == []
    with pytest.raises(ValueError):
        integer_roots([0, 0], 1, 5)
    with pytest.raises(ValueError):
        interpolate([1, 1], [2, 3])


def test_input_validation():
    with pytest.raises(ValueError):
        CoverInput(n=3, d=2, m=1, chi_M=1, chi_N=1, normal_chern=(1,))
    with pytest.raises(ValueError):
        CoverInput(n=2, d=0, m=1, chi_M=1, chi_N=1)
    with pytest.raises(ValueError):
        CoverInput(n=2, d=2, m=0, chi_M=1, chi_N=1)
    with pytest.raises(ValueError):
        CoverInput(n=2, d=2, m=1, chi_M=3, chi_N=0)
    with pytest.raises(ValueError):
        CoverInput(n=4, d=2, m=1, chi_M=3, chi_N=-2)
    with pytest.raises(ValueError):
        CoverInput(n=4, d=2, m=1, chi_M=3, chi_N=-2, normal_chern=(1,))
    with pytest.raises(TypeError):
        CoverInput(n=2, d=2, m=1, chi_M=0.5, chi_N=-2)


def test_report_worked_example():
    rep = cover_report(surface(2, 3, -4), 1000)
    assert rep.sigma_X == 3
    assert rep.chi_X == 10
    assert rep.defect_n2 == rep.defect_closed_form == -1
    assert rep.defect_n2 == 3 * rep.sigma_X - rep.chi_X
    assert rep.defect_m_slope == -1
    assert rep.obstruction_roots == ()


def test_report_trivial_cover():
    inp = surface(1, 3, -4)
    rep = cover_report(inp, 100)
    assert rep.sigma_X == inp.sigma_Mp
    assert rep.chi_X == inp.chi_Mp
    assert rep.defect_n2 == 0
    assert rep.obstruction_at_d == 0
    assert not rep.obstruction_identically_zero


def test_report_json_round_trip():
    for inp in (surface(3, 6, -2, m=4, sigma_M=F(5, 2)), ROOTS_23):
        rep = cover_report(inp, 500)
        assert CoverReport.from_json(rep.to_json()) == rep
        assert CoverInput.from_json(inp.to_json()) == inp


def test_report_n4_has_no_defect():
    rep = cover_report(ROOT_3, 100)
    assert rep.defect_n2 is None
    assert rep.obstruction_roots == (3,)


# recovering sigma(M') from sigma(X) and the tower inverts sigma_branched
@settings(max_examples=150, deadline=None)
@given(
    n=st.sampled_from([2, 4, 6, 8]),
    d=st.integers(1, 12),
    m=st.integers(1, 6),
    chi_M=st.integers(-50, 50),
    chi_N=st.integers(-50, 50).filter(bool),
    data=st.data(),
)
def test_round_trip_base_signature(n, d, m, chi_M, chi_N, data):
    normal = None
    if n > 2:
        normal = tuple(data.draw(st.lists(st.fractions(max_denominator=9), min_size=n // 2, max_size=n // 2)))
    sigma_M = data.draw(st.none() | st.fractions(max_denominator=9))
    inp = CoverInput(n, d, m, chi_M, chi_N, normal, sigma_M)
    sigma_X = sigma_branched(inp)
    assert sigma_base_from_branched(d, sigma_X, tower_signatures(inp), n) == inp.sigma_Mp
