"""Certified evaluation of generalized theta functions with characteristics.

    theta_{a,b}(x, tau, nu) = sum_m exp(pi i tau (m+a)^(2 nu) + 2 pi i (m+a)(x+b))

The series is truncated to ``|m| <= m_max`` with ``m_max`` grown through
8, 16, 32, ... until a geometric tail bound is below half the budget.  The
emitted certificate also carries a bound on floating-point rounding, so that
``|returned value - exact value| <= cert.tail_bound`` holds for the total error,
not just the truncated tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import NonFiniteError, Rational, ThetaDftError, ThetaPoint, as_rational

__all__ = [
    "Characteristics",
    "TruncationCertificate",
    "TruncationError",
    "CertificationError",
    "M_MAX_START",
    "M_MAX_CAP",
    "theta",
    "theta_char",
    "tail_bound",
    "theta_value",
]

M_MAX_START = 8
M_MAX_CAP = 4096

_U = 2.0**-53
_TWO_PI = 2.0 * math.pi


class TruncationError(ThetaDftError):
    """The tail bound could not be brought under eps before the m_max cap."""


class CertificationError(ThetaDftError):
    """Rounding error alone exceeds the requested eps."""


@dataclass(frozen=True)
class Characteristics:
    a: Rational = Rational(0)
    b: Rational = Rational(0)

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    @classmethod
    def of(cls, a=0, b=0) -> "Characteristics":
        return cls(as_rational(a), as_rational(b))


ZERO = Characteristics()


@dataclass(frozen=True)
class TruncationCertificate:
    """Summation ran over ``m in [-m_max, m_max]``.

    ``tail_bound`` is the total certified error: ``truncation + rounding``.
    """

    m_max: int
    tail_bound: float
    truncation: float = 0.0
    rounding: float = 0.0


def tail_bound(point: ThetaPoint, ch: Characteristics, m_max: int) -> float:
    """Upper bound on ``sum_{|m| > m_max} |term_m|``.

    Uses ``|term_m| <= f(|m|)`` with
    ``f(k) = exp(-pi Im(tau) max(k-|a|, 0)^(2nu) + 2 pi (k+|a|) |Im x|)``.
    The ratio ``f(k+1)/f(k)`` is non-increasing for ``k >= |a|``, so once it
    drops below one the tail on each side is dominated by a geometric series.
    Returns ``inf`` when that has not happened yet at ``m_max``.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    T = point.tau.imag
    Y = abs(point.x.imag)
    alpha = abs(float(ch.a))
    p = 2 * point.nu
    k0 = m_max + 1
    if k0 <= alpha:
        return math.inf
    d0 = k0 - alpha
    log_f = -math.pi * T * d0**p + _TWO_PI * (k0 + alpha) * Y
    log_r = -math.pi * T * ((d0 + 1.0) ** p - d0**p) + _TWO_PI * Y
    if not log_r < 0.0:
        return math.inf
    # 1 - r computed without cancellation
    one_minus_r = -math.expm1(log_r)
    log_bound = math.log(2.0) + log_f - math.log(one_minus_r)
    if log_bound > 700.0:
        return math.inf
    return math.exp(log_bound)


def _choose_m_max(point: ThetaPoint, ch: Characteristics, budget: float) -> tuple[int, float]:
    m_max = M_MAX_START
    while True:
        bound = tail_bound(point, ch, m_max)
        if bound <= budget:
            return m_max, bound
        if m_max >= M_MAX_CAP:
            raise TruncationError(
                f"tail bound {bound:.3g} > {budget:.3g} at m_max cap {M_MAX_CAP} "
                f"(Im tau={point.tau.imag:.3g}, Im x={point.x.imag:.3g}, nu={point.nu})"
            )
        m_max = min(2 * m_max, M_MAX_CAP)


def _partial_sum(point: ThetaPoint, ch: Characteristics, m_max: int) -> tuple[complex, float]:
    """Sum the truncated series; return (value, rounding-error bound)."""
    num, den = ch.a.numerator, ch.a.denominator
    m = np.arange(-m_max, m_max + 1, dtype=np.int64)
    # (m*den + num)/den is a single correctly rounded division
    shifted = (m * den + num) / float(den)
    tau = point.tau.value
    xb = point.x + float(ch.b)
    quad = (math.pi * tau) * shifted ** (2 * point.nu)
    lin = (_TWO_PI * xb) * shifted
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        terms = np.exp(1j * quad + 1j * lin)
    if not np.all(np.isfinite(terms)):
        raise NonFiniteError("theta series term overflowed")
    re = math.fsum(terms.real)
    im = math.fsum(terms.imag)
    value = complex(re, im)
    mags = np.abs(terms)
    # per-term error from forming the exponent and evaluating exp/cos/sin,
    # plus one correctly-rounded fsum per component
    per_term = mags * ((2 * point.nu + 8) * (np.abs(quad) + np.abs(lin)) + 8.0)
    rounding = _U * (math.fsum(per_term) * 1.0001 + 2.0 * (abs(re) + abs(im)))
    return value, rounding


def theta_char(ch: Characteristics, point: ThetaPoint) -> tuple[complex, TruncationCertificate]:
    """Evaluate ``theta_{a,b}(x, tau, nu)`` to absolute accuracy ``point.eps``.

    Raises :class:`TruncationError` if the tail bound cannot be met below the
    ``m_max`` cap and :class:`CertificationError` if rounding error alone
    exceeds ``eps``.
    """
    if not isinstance(ch, Characteristics):
        ch = Characteristics.of(*ch)
    m_max, trunc = _choose_m_max(point, ch, 0.5 * point.eps)
    value, rounding = _partial_sum(point, ch, m_max)
    total = trunc + rounding
    if total > point.eps:
        raise CertificationError(
            f"certified error {total:.3g} exceeds eps={point.eps:.3g} "
            f"(rounding {rounding:.3g}, truncation {trunc:.3g})"
        )
    return value, TruncationCertificate(m_max=m_max, tail_bound=total, truncation=trunc, rounding=rounding)


def theta(point: ThetaPoint) -> tuple[complex, TruncationCertificate]:
    """Evaluate ``theta(x, tau, nu) = sum_m exp(pi i tau m^(2nu) + 2 pi i m x)``."""
    return theta_char(ZERO, point)


def theta_value(x, tau, a=0, b=0, nu: int = 1, eps: float = 1e-14) -> complex:
    """Convenience wrapper returning only the value of ``theta_{a,b}(x, tau, nu)``."""
    return theta_char(Characteristics.of(a, b), ThetaPoint(x, tau, nu, eps))[0]
