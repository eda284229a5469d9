from fractions import Fraction

import pytest

from thetadft.qidentities import (
    WindowTooNarrowError,
    check_odd_square_identity,
    check_rogers_ramanujan,
    check_square_identity,
    check_triangular_identity,
    check_triple_product,
    rr_substitution_trace,
)
from thetadft.qseries import ExponentLattice, LaurentSeries, series_eq


def test_rogers_ramanujan_pass():
    r = check_rogers_ramanujan(50, (-10, 10))
    assert r.verdict == "PASS" and r.first_mismatch is None
    # lowest-order coefficients
    assert r.lhs.coeff(0, 0) == r.rhs.coeff(0, 0) == 1
    assert r.lhs.coeff(0, 1) == r.rhs.coeff(0, 1) == 1


def test_rogers_ramanujan_window_reporting():
    r = check_rogers_ramanujan(30, (-3, 3))
    assert r.verdict == "PASS"
    assert not r.window_complete
    lo, hi = r.z_support
    assert lo < -3 and hi > 3
    assert check_rogers_ramanujan(30, (-40, 40)).window_complete


@pytest.mark.parametrize("window", [(-2, 3), (0, 0)])
def test_invalid_window(window):
    with pytest.raises(WindowTooNarrowError):
        check_rogers_ramanujan(10, window)


def test_trace_steps_and_agreement():
    trace = rr_substitution_trace(50, (-10, 10))
    assert [name for name, _ in trace] == ["A-raw", "A", "B", "C", "B'", "C'", "A'"]
    assert trace.verdict == "PASS"
    assert all(cmp.equal for _, cmp in trace.checks)
    direct = check_rogers_ramanujan(50, (-10, 10))
    assert (trace.verdict, trace.first_mismatch) == (direct.verdict, direct.first_mismatch)
    diff = trace.step("B'") + trace.step("C'") - trace.step("A'")
    assert diff.truncate(z_min=-10, z_max=10).is_zero()


def test_trace_a_raw_is_even_part():
    a_raw = rr_substitution_trace(20).step("A-raw")
    assert all(k % 2 == 0 for (_, k), _ in a_raw)
    assert all(v == 2 for _, v in a_raw)


def test_square_identity_and_indicator():
    r = check_square_identity(100)
    assert r.verdict == "PASS"
    coeffs = r.lhs.q_coefficients()
    squares = {k * k for k in range(11)}
    expected = [1 if e == 0 else (2 if e in squares else 0) for e in range(101)]
    assert coeffs == expected
    assert r.rhs.coeff(1) == 2 and r.rhs.coeff(2) == 0


def test_odd_square_identity():
    r = check_odd_square_identity(200)
    assert r.verdict == "PASS"
    nonzero = {int(e): v for (e, _), v in r.lhs}
    assert nonzero == {(2 * k + 1) ** 2: 2 for k in range(7)}
    assert r.rhs.coeff(1) == 2


def test_triangular_identity_small():
    r = check_triangular_identity(50)
    assert r.verdict == "PASS" and r.D == 8
    assert r.lhs.min_q() == Fraction(1, 8)


def test_order_preconditions():
    with pytest.raises(ValueError):
        check_square_identity(7)
    with pytest.raises(ValueError):
        check_odd_square_identity(31)
    with pytest.raises(ValueError):
        check_triangular_identity(50, D=4)


def test_triple_product_record():
    r = check_triple_product(60, (-8, 8))
    assert r.verdict == "PASS" and r.z_window == (-8, 8)


def test_mismatch_is_reported():
    lat = ExponentLattice(1, 20)
    good = check_square_identity(20)
    broken = good.lhs + LaurentSeries.monomial(lat, 13)
    cmp = series_eq(broken, good.rhs)
    assert not cmp.equal and cmp.witness.e_q == 13 and cmp.witness.lhs == 1
