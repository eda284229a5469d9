"""Shared numeric plumbing: exact rationals, complex values, evaluation points
and seeded sampling.

Characteristics and exponent lattices use :class:`fractions.Fraction`, which is
always stored reduced with a positive denominator.  Analytic values are plain
Python ``complex`` (IEEE double components); anything that could produce a
non-finite value is funnelled through :func:`as_complex`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "as_complex",
    "Tau",
    "ThetaPoint",
    "SampleRegion",
    "DEFAULT_REGION",
    "sample_points",
    "ThetaDftError",
    "NonFiniteError",
    "EmptyRequestError",
]


class ThetaDftError(Exception):
    """Base class for errors raised by this package."""


class NonFiniteError(ThetaDftError, ArithmeticError):
    """A computation produced an infinite or NaN component."""


class EmptyRequestError(ThetaDftError, ValueError):
    """A request asked for zero items."""


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact Fraction.

    Floats are refused: a characteristic such as 1/3 has no exact binary form.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r} for a Rational")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a Rational")


def as_complex(value) -> complex:
    z = complex(value)
    if not cmath.isfinite(z):
        raise NonFiniteError(f"non-finite complex value {z!r}")
    return z


@dataclass(frozen=True)
class Tau:
    """A point of the upper half-plane."""

    value: complex

    def __post_init__(self):
        z = as_complex(self.value)
        if not z.imag > 0:
            raise ValueError(f"tau must satisfy Im(tau) > 0, got {z!r}")
        object.__setattr__(self, "value", z)

    def __complex__(self) -> complex:
        return self.value

    @property
    def imag(self) -> float:
        return self.value.imag

    @property
    def real(self) -> float:
        return self.value.real


@dataclass(frozen=True)
class ThetaPoint:
    """Evaluation point ``(x, tau, nu)`` with an absolute error budget ``eps``."""

    x: complex
    tau: Tau
    nu: int = 1
    eps: float = 1e-14

    def __post_init__(self):
        object.__setattr__(self, "x", as_complex(self.x))
        if not isinstance(self.tau, Tau):
            object.__setattr__(self, "tau", Tau(self.tau))
        if int(self.nu) != self.nu or self.nu < 1:
            raise ValueError(f"nu must be a positive integer, got {self.nu!r}")
        object.__setattr__(self, "nu", int(self.nu))
        if not (math.isfinite(self.eps) and self.eps > 0):
            raise ValueError(f"eps must be a positive finite real, got {self.eps!r}")


@dataclass(frozen=True)
class SampleRegion:
    """Box of evaluation points.

    ``Im tau`` is drawn from ``[im_tau_min, im_tau_max]``, ``Re tau`` from
    ``[-re_tau_halfwidth, re_tau_halfwidth]`` and both components of ``x`` from
    ``[-x_box_halfwidth, x_box_halfwidth]``.  The defaults keep
    ``|q| = exp(-pi Im tau) <= 0.081``.
    """

    im_tau_min: float = 0.8
    im_tau_max: float = 2.0
    re_tau_halfwidth: float = 0.5
    x_box_halfwidth: float = 0.5
    seed: int = 42

    def __post_init__(self):
        if not (0 < self.im_tau_min <= self.im_tau_max):
            raise ValueError("need 0 < im_tau_min <= im_tau_max")
        if self.re_tau_halfwidth < 0 or self.x_box_halfwidth < 0:
            raise ValueError("half-widths must be non-negative")
        if not (0 <= int(self.seed) < 2**64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        for v in (self.im_tau_min, self.im_tau_max, self.re_tau_halfwidth, self.x_box_halfwidth):
            if not math.isfinite(v):
                raise ValueError("region bounds must be finite")


DEFAULT_REGION = SampleRegion()


def sample_points(region: SampleRegion, count: int) -> list[tuple[complex, Tau]]:
    """Draw ``count`` points ``(x, tau)`` from ``region``.

    Uses PCG64, whose output stream is fixed across platforms for a given
    seed.  Coordinates are drawn as whole arrays in a fixed order, so the
    point set depends on ``(seed, count)`` jointly; slice one larger draw if
    nested sample sets are needed.
    """
    if count <= 0:
        raise EmptyRequestError("sample_points needs count >= 1")
    rng = np.random.Generator(np.random.PCG64(int(region.seed)))
    im_tau = rng.uniform(region.im_tau_min, region.im_tau_max, count)
    re_tau = rng.uniform(-region.re_tau_halfwidth, region.re_tau_halfwidth, count)
    re_x = rng.uniform(-region.x_box_halfwidth, region.x_box_halfwidth, count)
    im_x = rng.uniform(-region.x_box_halfwidth, region.x_box_halfwidth, count)
    # uniform(a, a) is exactly a, but clamp anyway so the box contract is literal
    im_tau = np.clip(im_tau, region.im_tau_min, region.im_tau_max)
    return [
        (complex(float(re_x[i]), float(im_x[i])), Tau(complex(float(re_tau[i]), float(im_tau[i]))))
        for i in range(count)
    ]
