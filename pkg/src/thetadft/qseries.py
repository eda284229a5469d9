"""Exact truncated Laurent series in ``t = q**(1/D)`` and ``z``.

Coefficients are Python ints; exponents of ``q`` are stored as integers in
units of ``1/D``.  A series is kept modulo ``q**(q_order + 1/D)``, i.e. every
stored ``q``-exponent satisfies ``e <= D * q_order``.  The ``z`` window is
optional: with ``z_min = z_max = None`` nothing is dropped in ``z``, which is
what the identity checks use, since truncating in ``z`` during multiplication
is not a ring homomorphism when factors carry ``z**-1``.

All public exponent arguments are in ``q`` units (ints or Fractions); the
lattice converts them, raising :class:`OffLatticeError` when a value is not a
multiple of ``1/D``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import floor, isqrt
from typing import Iterator, NamedTuple

from .numerics import ThetaDftError

__all__ = [
    "ExponentLattice",
    "LaurentSeries",
    "Monomial",
    "Mismatch",
    "Comparison",
    "OffLatticeError",
    "IncompatibleLatticeError",
    "poch",
    "theta_sum_series",
    "THETA_LINES",
    "theta_product_series",
    "triple_product_check",
    "subst_scale_q",
    "subst_scale_z",
    "subst_shift_z_by_q",
    "series_eq",
]


class OffLatticeError(ThetaDftError, ValueError):
    """An exponent is not a multiple of ``1/D`` (or ``z`` exponent not integral)."""


class IncompatibleLatticeError(ThetaDftError, ValueError):
    """Operands live on lattices with different denominators."""


@dataclass(frozen=True)
class ExponentLattice:
    D: int = 8
    q_order: int = 100
    z_min: int | None = None
    z_max: int | None = None

    def __post_init__(self):
        if int(self.D) != self.D or self.D < 1:
            raise ValueError("D must be a positive integer")
        if int(self.q_order) != self.q_order:
            raise ValueError("q_order must be an integer")
        if (self.z_min is None) != (self.z_max is None):
            raise ValueError("z_min and z_max must both be set or both be None")
        if self.z_min is not None and self.z_min > self.z_max:
            raise ValueError("empty z window")

    @property
    def max_e(self) -> int:
        """Largest stored exponent, in ``1/D`` units."""
        return self.D * self.q_order

    @property
    def bounded(self) -> bool:
        return self.z_min is not None

    def units(self, e_q) -> int:
        """Convert a ``q``-exponent to lattice units."""
        v = Fraction(e_q) * self.D
        if v.denominator != 1:
            raise OffLatticeError(f"q^{e_q} is not on the 1/{self.D} lattice")
        return v.numerator

    def in_window(self, e_z: int) -> bool:
        return self.z_min is None or self.z_min <= e_z <= self.z_max

    def with_order(self, q_order: int) -> "ExponentLattice":
        return replace(self, q_order=q_order)

    def with_window(self, z_min: int | None, z_max: int | None) -> "ExponentLattice":
        return replace(self, z_min=z_min, z_max=z_max)


def _meet(a: ExponentLattice, b: ExponentLattice) -> ExponentLattice:
    if a.D != b.D:
        raise IncompatibleLatticeError(f"lattice denominators differ: {a.D} vs {b.D}")
    if a.bounded and b.bounded:
        lo, hi = max(a.z_min, b.z_min), min(a.z_max, b.z_max)
        if lo > hi:
            raise IncompatibleLatticeError("z windows do not intersect")
    elif a.bounded:
        lo, hi = a.z_min, a.z_max
    elif b.bounded:
        lo, hi = b.z_min, b.z_max
    else:
        lo = hi = None
    return ExponentLattice(a.D, min(a.q_order, b.q_order), lo, hi)


class LaurentSeries:
    """Immutable sparse map ``(e_q in 1/D units, e_z) -> int``."""

    __slots__ = ("lattice", "_c")

    def __init__(self, lattice: ExponentLattice, coeffs=None):
        self.lattice = lattice
        maxe = lattice.max_e
        c = {}
        for (e, k), v in (coeffs or {}).items():
            if v and e <= maxe and lattice.in_window(k):
                c[(int(e), int(k))] = int(v)
        self._c = c

    @classmethod
    def _raw(cls, lattice: ExponentLattice, c: dict) -> "LaurentSeries":
        s = object.__new__(cls)
        s.lattice = lattice
        s._c = c
        return s

    # -- constructors ---------------------------------------------------------
    @classmethod
    def one(cls, lattice: ExponentLattice) -> "LaurentSeries":
        return cls(lattice, {(0, 0): 1})

    @classmethod
    def monomial(cls, lattice: ExponentLattice, e_q=0, e_z: int = 0, coeff: int = 1) -> "LaurentSeries":
        """``coeff * q**e_q * z**e_z`` with ``e_q`` in ``q`` units."""
        return cls(lattice, {(lattice.units(e_q), e_z): coeff})

    @classmethod
    def from_q_terms(cls, lattice: ExponentLattice, terms) -> "LaurentSeries":
        """Build from ``(e_q, e_z, coeff)`` triples, ``e_q`` in ``q`` units; repeats add up."""
        c: dict = {}
        for e_q, e_z, v in terms:
            key = (lattice.units(e_q), e_z)
            c[key] = c.get(key, 0) + v
        return cls(lattice, c)

    # -- inspection -----------------------------------------------------------
    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._c.items()))

    def items(self):
        return self._c.items()

    def coeff(self, e_q, e_z: int = 0) -> int:
        """Coefficient of ``q**e_q z**e_z`` (``e_q`` in ``q`` units)."""
        return self._c.get((self.lattice.units(e_q), e_z), 0)

    def is_zero(self) -> bool:
        return not self._c

    def min_q(self) -> Fraction | None:
        if not self._c:
            return None
        return Fraction(min(e for e, _ in self._c), self.lattice.D)

    def z_support(self) -> tuple[int, int] | None:
        if not self._c:
            return None
        ks = [k for _, k in self._c]
        return min(ks), max(ks)

    def q_coefficients(self) -> list[int]:
        """Dense coefficient list for a ``z``-free power series, index in ``1/D`` units."""
        if any(k != 0 for _, k in self._c):
            raise ValueError("series depends on z")
        if any(e < 0 for e, _ in self._c):
            raise ValueError("series has negative q-exponents")
        out = [0] * (self.lattice.max_e + 1)
        for (e, _), v in self._c.items():
            out[e] = v
        return out

    def at_z_one(self) -> "LaurentSeries":
        """Set ``z = 1``: sum coefficients over ``e_z``."""
        c: dict = {}
        for (e, _), v in self._c.items():
            c[(e, 0)] = c.get((e, 0), 0) + v
        return LaurentSeries(self.lattice.with_window(None, None), c)

    def negate_z(self) -> "LaurentSeries":
        """Substitute ``z -> -z``."""
        return LaurentSeries._raw(self.lattice, {(e, k): (-v if k & 1 else v) for (e, k), v in self._c.items()})

    def truncate(self, q_order: int | None = None, z_min: int | None = None, z_max: int | None = None) -> "LaurentSeries":
        """Re-window to a smaller order and/or a ``z`` window."""
        lat = self.lattice
        if q_order is not None:
            if q_order > lat.q_order:
                raise ValueError("cannot raise q_order by truncation")
            lat = lat.with_order(q_order)
        if z_min is not None or z_max is not None:
            lat = lat.with_window(z_min, z_max)
        return LaurentSeries(lat, self._c)

    def __repr__(self) -> str:
        D = self.lattice.D
        parts = []
        for (e, k), v in list(self)[:8]:
            parts.append(f"{v}*q^{Fraction(e, D)}*z^{k}")
        more = " + ..." if len(self._c) > 8 else ""
        return f"LaurentSeries({' + '.join(parts) or '0'}{more}; {self.lattice})"

    # -- ring operations ------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentSeries):
            return self.lattice == other.lattice and self._c == other._c
        return NotImplemented

    __hash__ = None

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries._raw(self.lattice, {key: -v for key, v in self._c.items()})

    def __add__(self, other) -> "LaurentSeries":
        if isinstance(other, int):
            other = LaurentSeries.monomial(self.lattice, 0, 0, other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        lat = _meet(self.lattice, other.lattice)
        c = dict(LaurentSeries(lat, self._c)._c)
        maxe = lat.max_e
        for key, v in other._c.items():
            if key[0] > maxe or not lat.in_window(key[1]):
                continue
            nv = c.get(key, 0) + v
            if nv:
                c[key] = nv
            else:
                c.pop(key, None)
        return LaurentSeries._raw(lat, c)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentSeries":
        if isinstance(other, int):
            return self + (-other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentSeries":
        return (-self) + other

    def __mul__(self, other) -> "LaurentSeries":
        if isinstance(other, int):
            if other == 0:
                return LaurentSeries._raw(self.lattice, {})
            return LaurentSeries._raw(self.lattice, {key: other * v for key, v in self._c.items()})
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        lat = _meet(self.lattice, other.lattice)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        if len(b) <= 3:
            out = _times_sparse(a, b, lat)
        else:
            out = _times_general(a, b, lat)
        return LaurentSeries._raw(lat, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            raise ValueError("series inversion is not supported")
        result = LaurentSeries.one(self.lattice)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


def _times_sparse(a: dict, b: dict, lat: ExponentLattice) -> dict:
    # b has at most a few terms: a*b = sum_j c_j * shift_j(a)
    maxe = lat.max_e
    out: dict = {}
    for (de, dk), cb in b.items():
        for (e, k), ca in a.items():
            ne = e + de
            if ne > maxe:
                continue
            nk = k + dk
            if not lat.in_window(nk):
                continue
            key = (ne, nk)
            out[key] = out.get(key, 0) + ca * cb
    return {key: v for key, v in out.items() if v}


def _times_general(a: dict, b: dict, lat: ExponentLattice) -> dict:
    maxe = lat.max_e
    bounded = lat.bounded
    zlo, zhi = lat.z_min, lat.z_max
    b_sorted = sorted(b.items())
    out: dict = {}
    get = out.get
    for (e1, k1), c1 in a.items():
        lim = maxe - e1
        for (e2, k2), c2 in b_sorted:
            if e2 > lim:
                break
            k = k1 + k2
            if bounded and not (zlo <= k <= zhi):
                continue
            key = (e1 + e2, k)
            out[key] = get(key, 0) + c1 * c2
    return {key: v for key, v in out.items() if v}


# ---------------------------------------------------------------------------


class Monomial(NamedTuple):
    """``sign * q**e_q * z**e_z`` with ``e_q`` in ``q`` units."""

    sign: int
    e_q: Fraction
    e_z: int = 0


def poch(alpha: Monomial, beta, lattice: ExponentLattice) -> LaurentSeries:
    """``(alpha; beta)_inf = prod_{k>=0} (1 - alpha * beta**k)`` truncated to ``lattice``.

    ``beta`` is a pure power ``q**beta`` with ``beta > 0``; factors whose
    ``q``-exponent exceeds ``q_order`` are 1 inside the window and skipped.
    """
    alpha = Monomial(*alpha) if not isinstance(alpha, Monomial) else alpha
    if alpha.sign not in (1, -1):
        raise ValueError("alpha must have unit coefficient")
    step = lattice.units(beta)
    if step <= 0:
        raise ValueError(f"beta exponent must be positive, got {beta}")
    start = lattice.units(alpha.e_q)
    if start < 0:
        raise ValueError("alpha must have a non-negative q-exponent")
    maxe = lattice.max_e
    c = {(0, 0): 1}
    e = start
    coeff = -alpha.sign
    while e <= maxe:
        c = _times_sparse(c, {(0, 0): 1, (e, alpha.e_z): coeff}, lattice)
        e += step
    return LaurentSeries._raw(lattice, c)


def theta_sum_series(lattice: ExponentLattice, a=0, b_sign: int = 1, scale: int = 1) -> LaurentSeries:
    """``sum_m b_sign**m q**(scale*(m+a)**2) z**m`` by direct enumeration.

    ``a`` is a rational shift; the ``z`` exponent is ``m`` itself, so only
    ``a = 0`` gives a series in integral powers of ``e^{2 pi i x}``.
    """
    a = Fraction(a)
    maxe = lattice.max_e
    terms = {}
    bound = isqrt(max(lattice.q_order, 0) // max(scale, 1)) + 2
    for m in range(-bound - 1, bound + 2):
        e = lattice.units(scale * (m + a) ** 2)
        if e <= maxe and lattice.in_window(m):
            terms[(e, m)] = terms.get((e, m), 0) + (b_sign**m if m >= 0 else b_sign ** (-m))
    return LaurentSeries(lattice, terms)


THETA_LINES = ("theta", "theta_mhh", "theta_h0", "theta_0h")


def theta_product_series(which: str, lattice: ExponentLattice, doubled: bool = False) -> LaurentSeries:
    """Product expansion of one classical theta function with ``q = e^{pi i tau}``.

    ``z`` stands for ``e^{2 pi i x}``; with ``doubled=True`` it stands for
    ``y = e^{pi i x}`` and every ``z`` exponent is doubled.  The two lines with
    a ``2 q^{1/4} cos/sin(pi x)`` prefactor need ``doubled=True`` and
    ``D % 4 == 0``:

    * ``theta``:     ``(q^2, -q z, -q/z ; q^2)``
    * ``theta_0h``:  ``(q^2,  q z,  q/z ; q^2)``
    * ``theta_h0``:  ``q^{1/4} (y + 1/y) (q^2, -q^2 y^2, -q^2 / y^2 ; q^2)``
    * ``theta_mhh``: ``q^{1/4} (y - 1/y) (q^2,  q^2 y^2,  q^2 / y^2 ; q^2)``, which
      equals ``i * theta_{-1/2,1/2}(x, tau)``; the series has integer
      coefficients only after removing the unit ``i``.
    """
    if which not in THETA_LINES:
        raise ValueError(f"unknown theta line {which!r}; expected one of {THETA_LINES}")
    half = which in ("theta_h0", "theta_mhh")
    if half and not doubled:
        raise IncompatibleLatticeError(f"{which} has half-integer z powers; use doubled=True")
    if half and lattice.D % 4:
        raise IncompatibleLatticeError(f"{which} needs D divisible by 4, got D={lattice.D}")
    zs = 2 if doubled else 1
    lat = lattice
    if which == "theta":
        s = poch(Monomial(1, 2), 2, lat) * poch(Monomial(-1, 1, zs), 2, lat) * poch(Monomial(-1, 1, -zs), 2, lat)
    elif which == "theta_0h":
        s = poch(Monomial(1, 2), 2, lat) * poch(Monomial(1, 1, zs), 2, lat) * poch(Monomial(1, 1, -zs), 2, lat)
    else:
        sgn = -1 if which == "theta_h0" else 1
        pref = LaurentSeries.from_q_terms(lat, [(Fraction(1, 4), 1, 1), (Fraction(1, 4), -1, 1 if sgn < 0 else -1)])
        body = poch(Monomial(1, 2), 2, lat) * poch(Monomial(sgn, 2, 2), 2, lat) * poch(Monomial(sgn, 2, -2), 2, lat)
        s = pref * body
    return s


class Mismatch(NamedTuple):
    e_q: Fraction
    e_z: int
    lhs: int
    rhs: int


class Comparison(NamedTuple):
    equal: bool
    witness: Mismatch | None = None

    def __bool__(self) -> bool:
        return self.equal


def series_eq(a: LaurentSeries, b: LaurentSeries, z_window: tuple[int, int] | None = None) -> Comparison:
    """Exact comparison on the common window; the witness is the first
    differing coefficient in ``(e_q, e_z)`` order."""
    lat = _meet(a.lattice, b.lattice)
    if z_window is not None:
        lo, hi = z_window
        if lat.bounded:
            lo, hi = max(lo, lat.z_min), min(hi, lat.z_max)
        lat = lat.with_window(lo, hi)
    maxe = lat.max_e
    keys = {key for key in a._c if key[0] <= maxe and lat.in_window(key[1])}
    keys.update(key for key in b._c if key[0] <= maxe and lat.in_window(key[1]))
    for key in sorted(keys):
        va, vb = a._c.get(key, 0), b._c.get(key, 0)
        if va != vb:
            return Comparison(False, Mismatch(Fraction(key[0], lat.D), key[1], va, vb))
    return Comparison(True, None)


def triple_product_check(lattice: ExponentLattice) -> Comparison:
    """``sum_m q^{m^2} z^m == prod_{n>=1} (1-q^{2n})(1+q^{2n-1} z)(1+q^{2n-1}/z)``.

    Both sides are expanded exactly with no ``z`` truncation; the comparison is
    restricted to the lattice's ``z`` window when it has one.
    """
    free = lattice.with_window(None, None)
    lhs = theta_sum_series(free)
    rhs = poch(Monomial(1, 2), 2, free) * poch(Monomial(-1, 1, 1), 2, free) * poch(Monomial(-1, 1, -1), 2, free)
    window = (lattice.z_min, lattice.z_max) if lattice.bounded else None
    return series_eq(lhs, rhs, window)


# ---------------------------------------------------------------------------
# substitutions


def subst_scale_q(s: LaurentSeries, factor) -> LaurentSeries:
    """``q -> q**factor``: exponent map ``e_q -> e_q * factor``.

    The valid order becomes ``floor(q_order * factor)``.
    """
    factor = Fraction(factor)
    if factor <= 0:
        raise ValueError("factor must be positive")
    lat = s.lattice
    c = {}
    for (e, k), v in s._c.items():
        ne = e * factor
        if ne.denominator != 1:
            raise OffLatticeError(f"q^{Fraction(e, lat.D)} -> q^{ne / lat.D} leaves the 1/{lat.D} lattice")
        c[(ne.numerator, k)] = v
    return LaurentSeries(lat.with_order(floor(lat.q_order * factor)), c)


def subst_scale_z(s: LaurentSeries, factor) -> LaurentSeries:
    """``z -> z**factor``; every resulting ``z`` exponent must be integral."""
    factor = Fraction(factor)
    if factor <= 0:
        raise ValueError("factor must be positive")
    lat = s.lattice
    c = {}
    for (e, k), v in s._c.items():
        nk = k * factor
        if nk.denominator != 1:
            raise OffLatticeError(f"z^{k} -> z^{nk} is not an integral power")
        c[(e, nk.numerator)] = v
    if lat.bounded:
        lo, hi = lat.z_min * factor, lat.z_max * factor
        lat = lat.with_window(int(-((-lo) // 1)), int(hi // 1))
    return LaurentSeries(lat, c)


def subst_shift_z_by_q(s: LaurentSeries, half_power) -> LaurentSeries:
    """``z -> z / q**half_power``: ``q^e z^k -> q^(e - k*half_power) z^k``.

    Negative ``q``-exponents may appear and are kept.  On a bounded ``z``
    window the valid order drops by ``max(k * half_power)`` over the window,
    since terms that were above the old order can land below it.  On an
    unbounded window the order is kept and the caller must supply headroom.
    """
    h = Fraction(half_power)
    lat = s.lattice
    shift = h * lat.D
    c = {}
    for (e, k), v in s._c.items():
        ne = e - k * shift
        if ne.denominator != 1:
            raise OffLatticeError(f"z^{k} -> q^{-k * h} z^{k} leaves the 1/{lat.D} lattice")
        c[(ne.numerator, k)] = v
    new_order = lat.q_order
    if lat.bounded and h:
        worst = max(lat.z_min * h, lat.z_max * h, Fraction(0))
        new_order = lat.q_order - int(-((-worst) // 1))
    return LaurentSeries(lat.with_order(new_order), c)
