"""Coefficient-exact checks of four q-series identities.

Every check expands both sides independently as exact integer series and
compares them coefficient by coefficient.  Quotients are cross-multiplied.
There is no tolerance anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .numerics import ThetaDftError
from .qseries import (
    Comparison,
    ExponentLattice,
    LaurentSeries,
    Mismatch,
    Monomial,
    poch,
    series_eq,
    subst_scale_q,
    subst_scale_z,
    subst_shift_z_by_q,
    theta_product_series,
    theta_sum_series,
    triple_product_check,
)

__all__ = [
    "QIdentityResult",
    "SubstitutionTrace",
    "WindowTooNarrowError",
    "NegativeExponentError",
    "check_rogers_ramanujan",
    "check_square_identity",
    "check_odd_square_identity",
    "check_triangular_identity",
    "check_triple_product",
    "rr_substitution_trace",
    "Q_IDENTITY_NAMES",
]

PASS = "PASS"
FAIL = "FAIL"

Q_IDENTITY_NAMES = ("ROGERS-RAMANUJAN", "SQUARE", "ODD-SQUARE", "TRIANGULAR")


class WindowTooNarrowError(ThetaDftError, ValueError):
    """The requested z window cannot support a meaningful comparison."""


class NegativeExponentError(ThetaDftError, ArithmeticError):
    """A side of a final identity still carries a negative q-exponent."""


@dataclass(frozen=True)
class QIdentityResult:
    name: str
    q_order: int
    z_window: tuple[int, int] | None
    verdict: str
    first_mismatch: Mismatch | None = None
    D: int = 1
    z_support: tuple[int, int] | None = None
    window_complete: bool = True
    lhs: LaurentSeries | None = field(default=None, repr=False, compare=False)
    rhs: LaurentSeries | None = field(default=None, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS


def _require_power_series(name: str, *sides: LaurentSeries) -> None:
    for s in sides:
        lo = s.min_q()
        if lo is not None and lo < 0:
            raise NegativeExponentError(f"{name}: side has q^{lo}")


def _support(*sides: LaurentSeries) -> tuple[int, int] | None:
    spans = [s.z_support() for s in sides if not s.is_zero()]
    if not spans:
        return None
    return min(a for a, _ in spans), max(b for _, b in spans)


def _result(name, q_order, window, cmp: Comparison, lhs, rhs, D) -> QIdentityResult:
    _require_power_series(name, lhs, rhs)
    support = _support(lhs, rhs)
    complete = window is None or support is None or (window[0] <= support[0] and support[1] <= window[1])
    return QIdentityResult(
        name=name,
        q_order=q_order,
        z_window=window,
        verdict=PASS if cmp.equal else FAIL,
        first_mismatch=cmp.witness,
        D=D,
        z_support=support,
        window_complete=complete,
        lhs=lhs,
        rhs=rhs,
    )


def _check_window(z_window) -> tuple[int, int]:
    lo, hi = (int(v) for v in z_window)
    if lo != -hi:
        raise WindowTooNarrowError(f"z window must be symmetric, got [{lo}, {hi}]")
    if hi < 1:
        # a window of just z^0 cannot see the z-odd half of the identity
        raise WindowTooNarrowError(f"z window [{lo}, {hi}] is too narrow; need half-width >= 1")
    return lo, hi


def _check_order(q_order: int, minimum: int) -> int:
    if int(q_order) != q_order or q_order < minimum:
        raise ValueError(f"q_order must be an integer >= {minimum}, got {q_order!r}")
    return int(q_order)


def _p(lat, sign, e_q, step, e_z=0) -> LaurentSeries:
    """``(sign q^e_q z^e_z ; q^step)_inf``."""
    return poch(Monomial(sign, Fraction(e_q), e_z), Fraction(step), lat)


# --- Rogers-Ramanujan type ------------------------------------------------


def _rr_sides(lat: ExponentLattice) -> tuple[LaurentSeries, LaurentSeries, LaurentSeries]:
    """Directly built ``B', C', A'``."""
    q4 = _p(lat, 1, 4, 4)
    b = q4 * _p(lat, -1, 1, 4, 2) * _p(lat, -1, 3, 4, -2)
    c = LaurentSeries.monomial(lat, 0, 1) * q4 * _p(lat, -1, 3, 4, 2) * _p(lat, -1, 1, 4, -2)
    a = _p(lat, 1, 1, 1) * _p(lat, -1, 0, 1, 1) * _p(lat, -1, 1, 1, -1)
    return b, c, a


def check_rogers_ramanujan(q_order: int = 50, z_window=(-10, 10)) -> QIdentityResult:
    """``(q^4;q^4)(-q z^2;q^4)(-q^3/z^2;q^4) + z (q^4;q^4)(-q^3 z^2;q^4)(-q/z^2;q^4)
    == (q;q)(-z;q)(-q/z;q)``.

    Both sides are expanded with no z truncation, so the window only limits
    which coefficients are compared; ``window_complete`` records whether it
    covers the full z support.
    """
    q_order = _check_order(q_order, 1)
    window = _check_window(z_window)
    lat = ExponentLattice(1, q_order)
    b, c, a = _rr_sides(lat)
    lhs = b + c
    return _result("ROGERS-RAMANUJAN", q_order, window, series_eq(lhs, a, window), lhs, a, 1)


@dataclass
class SubstitutionTrace:
    """Intermediates of the substitution derivation, in order.

    ``checks`` pairs each step with its comparison against an independent
    construction; ``verdict`` is PASS iff every check holds.  ``first_mismatch``
    comes from the final ``B' + C' = A'`` comparison.
    """

    q_order: int
    z_window: tuple[int, int]
    steps: list[tuple[str, LaurentSeries]]
    checks: list[tuple[str, Comparison]]
    verdict: str
    first_mismatch: Mismatch | None

    def __iter__(self):
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def step(self, name: str) -> LaurentSeries:
        for n, s in self.steps:
            if n == name:
                return s
        raise KeyError(name)


def _headroom(q_order: int) -> int:
    """Order needed before ``z -> z/q^{1/2}`` so the result is exact to ``q_order``.

    Every series shifted here is a sub-series of ``sum q^{m^2/2} z^m``, whose
    terms land at ``m(m-1)/2``.  A term dropped above order ``M`` has
    ``m^2/2 > M``; taking ``M`` at least ``m^2/2`` for every ``m`` with
    ``m(m-1)/2 <= q_order`` guarantees no dropped term lands in range.
    """
    M, m = q_order, 1
    while m * (m - 1) // 2 <= q_order:
        M = max(M, -(-m * m // 2))
        m += 1
    return M


def rr_substitution_trace(q_order: int = 50, z_window=(-10, 10)) -> SubstitutionTrace:
    """Re-derive the Rogers-Ramanujan type identity from theta product expansions.

    Steps, with ``q = e^{pi i tau}``:

    * ``A-raw``: ``theta + theta_{0,1/2} = 2 sum q^{4m^2} e^{4 pi i m x}``.
    * ``A``, ``B``, ``C``: ``theta(x,tau)``, ``theta(4x,16tau)`` and
      ``theta_{1/2,0}(4x,16tau)`` after ``q^4 -> q`` and ``e^{4 pi i x} -> z``;
      ``B + C = A`` is the two-way splitting of theta.
    * ``A'``, ``B'``, ``C'``: the same after ``q^2 -> q`` and ``z -> z/q^{1/2}``,
      each compared with its direct product form.
    """
    q_order = _check_order(q_order, 1)
    window = _check_window(z_window)
    N = q_order
    M = _headroom(N)
    D = 8
    steps: list[tuple[str, LaurentSeries]] = []
    checks: list[tuple[str, Comparison]] = []

    # A-raw at the order the A step actually consumes
    raw = ExponentLattice(D, 2 * M)
    a_raw = theta_product_series("theta", raw) + theta_product_series("theta_0h", raw)
    # sum q^{4m^2} Z^m, built directly to the order needed after q^4 -> q
    even = theta_sum_series(ExponentLattice(D, 8 * M), scale=4)
    two_sum = subst_scale_z(even, 2) * 2
    steps.append(("A-raw", a_raw))
    checks.append(("A-raw", series_eq(a_raw, two_sum)))

    # A: q^4 -> q, e^{4 pi i x} -> z applied to half of A-raw, equal to theta in (q, z)
    a = subst_scale_q(even, Fraction(1, 4))
    lat_a = ExponentLattice(D, 2 * M)
    steps.append(("A", a))
    checks.append(("A=product", series_eq(a, theta_product_series("theta", lat_a))))

    # B, C: theta(4x, 16tau) and theta_{1/2,0}(4x, 16tau) in the new variables
    pre = ExponentLattice(D, -(-2 * M // 4))
    b = subst_scale_z(subst_scale_q(theta_product_series("theta", pre), 4), 2).truncate(2 * M)
    c = subst_scale_q(theta_product_series("theta_h0", pre, doubled=True), 4).truncate(2 * M)
    steps.append(("B", b))
    steps.append(("C", c))
    checks.append(("B+C=A", series_eq(b + c, a)))

    def prime(s: LaurentSeries) -> LaurentSeries:
        return subst_shift_z_by_q(subst_scale_q(s, Fraction(1, 2)), Fraction(1, 2)).truncate(N)

    bp, cp, ap = prime(b), prime(c), prime(a)
    steps += [("B'", bp), ("C'", cp), ("A'", ap)]
    direct_b, direct_c, direct_a = _rr_sides(ExponentLattice(D, N))
    checks.append(("B'=product", series_eq(bp, direct_b)))
    checks.append(("C'=product", series_eq(cp, direct_c)))
    checks.append(("A'=product", series_eq(ap, direct_a)))
    _require_power_series("rr_substitution_trace", bp, cp, ap)
    final = series_eq(bp + cp, ap, window)
    checks.append(("B'+C'=A'", final))

    verdict = PASS if all(cmp.equal for _, cmp in checks) else FAIL
    return SubstitutionTrace(N, window, steps, checks, verdict, final.witness)


# --- square / odd-square / triangular --------------------------------------


def square_lhs(q_order: int) -> LaurentSeries:
    """``sum_m q^{m^2}`` by direct enumeration."""
    return theta_sum_series(ExponentLattice(1, q_order)).at_z_one()


def check_square_identity(q_order: int = 100) -> QIdentityResult:
    """``sum q^{m^2} == (q^8;q^8) [ (-q^4;q^8)^2 + 2q (-q^8;q^8)^2 ]``."""
    q_order = _check_order(q_order, 8)
    lat = ExponentLattice(1, q_order)
    lhs = square_lhs(q_order)
    bracket = _p(lat, -1, 4, 8) ** 2 + LaurentSeries.monomial(lat, 1, 0, 2) * _p(lat, -1, 8, 8) ** 2
    rhs = _p(lat, 1, 8, 8) * bracket
    return _result("SQUARE", q_order, None, series_eq(lhs, rhs), lhs, rhs, 1)


def check_odd_square_identity(q_order: int = 200) -> QIdentityResult:
    """``sum_k q^{(2k+1)^2} ==
    q (q^32;q^32)(-q^24;q^32) [ (-q^8;q^32) + (1+q^8)(-q^40;q^32) ]``, as printed.

    The sum runs over all integers ``k``; ``k`` and ``-1-k`` give the same
    square, so each odd square has coefficient 2.
    """
    q_order = _check_order(q_order, 32)
    lat = ExponentLattice(1, q_order)
    K = isqrt(q_order) // 2 + 1
    terms = [((2 * k + 1) ** 2, 0, 1) for k in range(-K - 1, K + 1)]
    lhs = LaurentSeries.from_q_terms(lat, terms)
    one_plus_q8 = LaurentSeries.from_q_terms(lat, [(0, 0, 1), (8, 0, 1)])
    bracket = _p(lat, -1, 8, 32) + one_plus_q8 * _p(lat, -1, 40, 32)
    rhs = LaurentSeries.monomial(lat, 1) * _p(lat, 1, 32, 32) * _p(lat, -1, 24, 32) * bracket
    return _result("ODD-SQUARE", q_order, None, series_eq(lhs, rhs), lhs, rhs, 1)


def check_triangular_identity(q_order: int = 200, D: int = 8) -> QIdentityResult:
    """Cross-multiplied form of the triangular-number quotient identity::

        sum_m q^{m(2m+1)} * 4 q^{1/8} (q^4;q^4) [ (-q^2;q^4)^2 + 2 q^{1/2} (-q^4;q^4)^2 ]
          == (q^2;q^2)^2 [ (-q;q^2)^2 + 2 q^{1/4} (-q^2;q^2)^2 ]^2
             - (q^{1/4};q^{1/4})^2 (q^{1/8};q^{1/4})^4

    with the sum over all integers ``m``.
    """
    q_order = _check_order(q_order, 8)
    if D % 8:
        raise ValueError(f"the triangular identity needs D divisible by 8, got {D}")
    lat = ExponentLattice(D, q_order)
    terms = []
    m = 0
    while m * (2 * m - 1) <= q_order:
        for mm in {m, -m}:
            if mm * (2 * mm + 1) <= q_order:
                terms.append((mm * (2 * mm + 1), 0, 1))
        m += 1
    tri = LaurentSeries.from_q_terms(lat, terms)
    h, e = Fraction(1, 2), Fraction(1, 8)
    left_bracket = _p(lat, -1, 2, 4) ** 2 + LaurentSeries.monomial(lat, h, 0, 2) * _p(lat, -1, 4, 4) ** 2
    lhs = tri * LaurentSeries.monomial(lat, e, 0, 4) * _p(lat, 1, 4, 4) * left_bracket
    quarter = Fraction(1, 4)
    right_bracket = _p(lat, -1, 1, 2) ** 2 + LaurentSeries.monomial(lat, quarter, 0, 2) * _p(lat, -1, 2, 2) ** 2
    rhs = _p(lat, 1, 2, 2) ** 2 * right_bracket**2 - _p(lat, 1, quarter, quarter) ** 2 * _p(lat, 1, e, quarter) ** 4
    return _result("TRIANGULAR", q_order, None, series_eq(lhs, rhs), lhs, rhs, D)


def check_triple_product(q_order: int = 200, z_window=(-14, 14)) -> QIdentityResult:
    """:func:`triple_product_check` wrapped as a result record."""
    q_order = _check_order(q_order, 1)
    window = _check_window(z_window)
    lat = ExponentLattice(1, q_order, *window)
    cmp = triple_product_check(lat)
    return QIdentityResult(
        name="TRIPLE-PRODUCT",
        q_order=q_order,
        z_window=window,
        verdict=PASS if cmp.equal else FAIL,
        first_mismatch=cmp.witness,
        D=1,
    )
