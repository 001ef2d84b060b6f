"""Exact characteristic numbers of CP^n and of cyclic branched covers of
complex hyperbolic manifolds."""

from .branched_cover import (
    CoverInput,
    CoverReport,
    chi_branched,
    cover_report,
    defect_n2,
    obstruction_polynomial,
    obstruction_value,
    sigma_branched,
    sigma_tower_coefficients,
    sigma_Y2k_from_normal_chern,
)
from .chern_calculus import (
    ChernData,
    ChernPoly,
    chern_number_cpn,
    chern_poly_mul,
    cpn_data,
    evaluate,
    pontrjagin_class,
    pontrjagin_number,
    ratio_cpn,
)
from .exact_algebra import Partition, Rational, binomial, partitions_of
from .hirzebruch_genera import (
    LPolynomial,
    alpha_expansion,
    l_polynomial,
    proportionality_constant,
    signature,
    tanh_characteristic_series,
)
from .power_series import TruncatedSeries, series_add, series_div, series_mul, sign_series

__version__ = "0.1.0"
