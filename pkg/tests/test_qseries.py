import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import euler_product, pentagonal_series
from thetadft.qseries import (
    ExponentLattice,
    IncompatibleLatticeError,
    LaurentSeries,
    Mismatch,
    Monomial,
    OffLatticeError,
    poch,
    series_eq,
    subst_scale_q,
    subst_scale_z,
    subst_shift_z_by_q,
    theta_product_series,
    theta_sum_series,
    triple_product_check,
)
from thetadft.theta import theta_value

H = Fraction(1, 2)


# -- construction ------------------------------------------------------------


def test_no_zero_coefficients_and_window():
    lat = ExponentLattice(1, 5, -2, 2)
    s = LaurentSeries(lat, {(0, 0): 0, (1, 3): 4, (6, 0): 1, (2, -1): 7})
    assert dict(s.items()) == {(2, -1): 7}


def test_pentagonal_to_order_100():
    e = poch(Monomial(1, 1), 1, ExponentLattice(1, 100))
    coeffs = e.q_coefficients()
    assert coeffs == euler_product(100)
    assert coeffs == pentagonal_series(100)
    assert coeffs[:6] == [1, -1, -1, 0, 0, 1]


def test_poch_with_z_has_nonnegative_z():
    s = poch(Monomial(1, 1, 1), 1, ExponentLattice(1, 20))
    assert all(k >= 0 for (_, k), _ in s)


def test_poch_beyond_order_is_one():
    lat = ExponentLattice(1, 10)
    assert poch(Monomial(1, 11), 1, lat) == LaurentSeries.one(lat)


def test_poch_rejects_nonpositive_step():
    with pytest.raises(ValueError):
        poch(Monomial(1, 1), 0, ExponentLattice(1, 10))


def test_theta_line_at_z_one():
    s = theta_product_series("theta", ExponentLattice(1, 9)).at_z_one()
    assert s.q_coefficients() == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]


def test_theta_0h_is_theta_with_z_negated():
    lat = ExponentLattice(1, 40)
    assert theta_product_series("theta_0h", lat) == theta_product_series("theta", lat).negate_z()


def test_theta_h0_shift():
    s = theta_product_series("theta_h0", ExponentLattice(8, 10), doubled=True)
    assert s.min_q() == Fraction(1, 4)
    assert min(e for (e, _), _ in s) == 8 // 4


def test_half_lines_need_doubled_and_d():
    with pytest.raises(IncompatibleLatticeError):
        theta_product_series("theta_h0", ExponentLattice(8, 10))
    with pytest.raises(IncompatibleLatticeError):
        theta_product_series("theta_mhh", ExponentLattice(2, 10), doubled=True)
    with pytest.raises(ValueError):
        theta_product_series("theta_xx", ExponentLattice(8, 10))


def _evaluate(s, tau, zv):
    D = s.lattice.D
    return sum(v * cmath.exp(1j * cmath.pi * tau * e / D) * zv**k for (e, k), v in s)


@pytest.mark.parametrize(
    "which,a,b,factor",
    [
        ("theta", 0, 0, 1),
        ("theta_0h", 0, H, 1),
        ("theta_h0", H, 0, 1),
        # the series is q^{1/4} (y - 1/y) prod(...), equal to i * theta_{-1/2,1/2}
        ("theta_mhh", -H, H, 1j),
    ],
)
def test_product_lines_match_theta_numerically(which, a, b, factor):
    tau, x = 0.1 + 1.1j, 0.23 + 0.1j
    s = theta_product_series(which, ExponentLattice(8, 60), doubled=True)
    value = factor * _evaluate(s, tau, cmath.exp(1j * cmath.pi * x))
    assert abs(value - theta_value(x, tau, a, b)) <= 1e-12


def test_triple_product_examples():
    assert triple_product_check(ExponentLattice(1, 50, -7, 7))
    s = theta_sum_series(ExponentLattice(1, 50))
    assert s.coeff(1, 1) == 1 and s.coeff(2, 0) == 0


def test_triple_product_detects_a_broken_side():
    lat = ExponentLattice(1, 30)
    lhs = theta_sum_series(lat) + LaurentSeries.monomial(lat, 7, 2)
    rhs = theta_product_series("theta", lat)
    cmp = series_eq(lhs, rhs)
    assert not cmp and cmp.witness == Mismatch(Fraction(7), 2, 1, 0)


# -- substitutions -------------------------------------------------------------


def test_scale_q():
    lat = ExponentLattice(1, 40)
    big = theta_sum_series(lat, scale=4)
    assert series_eq(subst_scale_q(big, Fraction(1, 4)), theta_sum_series(ExponentLattice(1, 10)))
    assert subst_scale_q(big, 1) == big
    with pytest.raises(OffLatticeError):
        subst_scale_q(LaurentSeries.from_q_terms(lat, [(1, 0, 1), (2, 0, 1)]), H)
    s = subst_scale_q(LaurentSeries.from_q_terms(ExponentLattice(2, 4), [(1, 0, 1), (2, 0, 1)]), H)
    assert s.coeff(H) == 1 and s.coeff(1) == 1


def test_shift_z_by_q():
    lat = ExponentLattice(2, 10)
    s = subst_shift_z_by_q(LaurentSeries.monomial(lat, 1, 2), H)
    assert dict(s.items()) == {(0, 2): 1}
    assert subst_shift_z_by_q(theta_sum_series(lat), 0) == theta_sum_series(lat)
    with pytest.raises(OffLatticeError):
        subst_shift_z_by_q(LaurentSeries.monomial(ExponentLattice(1, 10), 1, 1), H)


def test_shift_shrinks_order_on_bounded_window():
    lat = ExponentLattice(2, 10, -4, 4)
    assert subst_shift_z_by_q(LaurentSeries.one(lat), H).lattice.q_order == 8


def test_negative_exponents_representable():
    s = subst_shift_z_by_q(LaurentSeries.monomial(ExponentLattice(2, 10), 0, 3), H)
    assert s.min_q() == Fraction(-3, 2)


def test_scale_z():
    lat = ExponentLattice(1, 10)
    s = subst_scale_z(theta_sum_series(lat), 2)
    assert s.coeff(1, 2) == 1 and s.coeff(1, 1) == 0
    with pytest.raises(OffLatticeError):
        subst_scale_z(theta_sum_series(lat), H)


def test_series_eq_examples():
    lat = ExponentLattice(1, 5)
    a = LaurentSeries.from_q_terms(lat, [(0, 0, 1), (1, 0, 1)])
    assert series_eq(a, a)
    assert series_eq(a, a + LaurentSeries(lat, {(6, 0): 1}))
    b = LaurentSeries.from_q_terms(lat, [(0, 0, 1), (1, 0, -1)])
    assert series_eq(a, b).witness == Mismatch(Fraction(1), 0, 1, -1)
    with pytest.raises(IncompatibleLatticeError):
        series_eq(a, LaurentSeries.one(ExponentLattice(2, 5)))


# -- ring laws -------------------------------------------------------------------

LAT = ExponentLattice(2, 12)
terms = st.dictionaries(
    st.tuples(st.integers(0, 2 * 12), st.integers(-4, 4)), st.integers(-9, 9), max_size=20
)
series = terms.map(lambda c: LaurentSeries(LAT, c))


@settings(max_examples=60, deadline=None)
@given(series, series, series)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentSeries(LAT)
    assert a * LaurentSeries.one(LAT) == a


@settings(max_examples=60, deadline=None)
@given(series, series, st.integers(0, 12))
def test_window_coherence_in_q(a, b, order):
    lhs = (a * b).truncate(order)
    rhs = (a.truncate(order) * b.truncate(order)).truncate(order)
    assert lhs == rhs


nonneg = st.dictionaries(
    st.tuples(st.integers(0, 24), st.integers(0, 6)), st.integers(-9, 9), max_size=20
).map(lambda c: LaurentSeries(LAT, c))


@settings(max_examples=60, deadline=None)
@given(nonneg, nonneg, st.integers(0, 6))
def test_window_coherence_in_z(a, b, w):
    # exact for z-polynomials with nonnegative degrees and a window starting at 0
    lhs = (a * b).truncate(z_min=0, z_max=w)
    rhs = (a.truncate(z_min=0, z_max=w) * b.truncate(z_min=0, z_max=w)).truncate(z_min=0, z_max=w)
    assert lhs == rhs


def test_power():
    lat = ExponentLattice(1, 20)
    e = poch(Monomial(1, 1), 1, lat)
    assert e**3 == e * e * e
    with pytest.raises(ValueError):
        e ** -1
