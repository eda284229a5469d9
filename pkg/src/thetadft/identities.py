"""Registry of analytic theta identities and their sampled verification.

Each identity is a pair of evaluators ``f(x, tau, nu, eps) -> complex`` (or a
tuple of complex values for identities that bundle several equalities).  The
relative residual of a sample is::

    max_i |lhs_i - rhs_i| / max(|lhs_i|, |rhs_i|, 1e-30)

Components where both sides are below ``DEGENERACY_FLOOR`` are exact zeros
and are left out of the relative residual.  Identities that divide by a theta
value are stored cross-multiplied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction as Fr
from typing import Callable, Sequence

from .numerics import DEFAULT_REGION, SampleRegion, ThetaDftError, ThetaPoint, sample_points
from .theta import Characteristics, theta_char

__all__ = [
    "IdentityDef",
    "SampleRecord",
    "IdentityReport",
    "PASS",
    "FAIL",
    "DEGENERATE",
    "SKIPPED",
    "RESIDUAL_FLOOR",
    "DEGENERACY_FLOOR",
    "registry",
    "printed_variants",
    "lookup",
    "verify",
    "verify_all",
]

PASS, FAIL, DEGENERATE, SKIPPED = "PASS", "FAIL", "DEGENERATE", "SKIPPED"

RESIDUAL_FLOOR = 1e-30
DEGENERACY_FLOOR = 1e-12

Evaluator = Callable[[complex, complex, int, float], "complex | tuple[complex, ...]"]

SQRT2 = math.sqrt(2.0)
H = Fr(1, 2)


@dataclass(frozen=True)
class IdentityDef:
    name: str
    anchor: str
    arity: str  # "point" or "point-free"
    lhs: Evaluator = field(repr=False)
    rhs: Evaluator = field(repr=False)
    nu_applicable: bool = False
    notes: str = ""
    classical: bool = False

    def scaled(self, c: complex) -> "IdentityDef":
        """Same identity with both sides multiplied by ``c``."""
        lhs, rhs = self.lhs, self.rhs

        def sl(x, tau, nu, eps):
            return _scale(lhs(x, tau, nu, eps), c)

        def sr(x, tau, nu, eps):
            return _scale(rhs(x, tau, nu, eps), c)

        return IdentityDef(self.name, self.anchor, self.arity, sl, sr, self.nu_applicable, self.notes, self.classical)


def _scale(v, c):
    if isinstance(v, tuple):
        return tuple(c * t for t in v)
    return c * v


@dataclass(frozen=True)
class SampleRecord:
    x: complex
    tau: complex
    lhs: tuple
    rhs: tuple
    abs_residual: float
    residual: float
    error: str | None = None


@dataclass(frozen=True)
class IdentityReport:
    name: str
    sample_count: int
    max_abs_residual: float
    max_rel_residual: float
    verdict: str
    tolerance: float
    nu: int
    per_sample: tuple[SampleRecord, ...] = ()
    notes: str = ""


class _Th:
    """Theta evaluator bound to one ``(nu, eps)``: ``T(a, b, x, tau)``."""

    __slots__ = ("nu", "eps")

    def __init__(self, nu: int, eps: float):
        self.nu = nu
        self.eps = eps

    def __call__(self, a, b, x, tau) -> complex:
        ch = Characteristics(Fr(a), Fr(b))
        return theta_char(ch, ThetaPoint(x, tau, self.nu, self.eps))[0]


def _ident(name, anchor, lhs_body, rhs_body, *, point_free=False, nu_ok=False, notes="", classical=False):
    """Build an IdentityDef from bodies taking ``(T, x, tau, s)``.

    ``T`` is the bound theta evaluator and ``s(n) = n**(2 nu)`` is the
    quasi-period scale that replaces ``n**2`` when ``nu > 1``.
    """

    def wrap(body):
        def ev(x, tau, nu, eps):
            return body(_Th(nu, eps), complex(x), complex(tau), lambda n: n ** (2 * nu))

        ev.__name__ = f"{name}_side"
        return ev

    return IdentityDef(
        name=name,
        anchor=anchor,
        arity="point-free" if point_free else "point",
        lhs=wrap(lhs_body),
        rhs=wrap(rhs_body),
        nu_applicable=nu_ok,
        notes=notes,
        classical=classical,
    )


# ---------------------------------------------------------------------------
# eigenvector-proportionality identities (valid for every nu)


def _n_family(n: int) -> IdentityDef:
    f1, f2 = Fr(1, n), Fr(2, n)
    rn = math.sqrt(n)
    factor_num = math.sin(2 * math.pi / n) - rn / 2
    factor_den = math.sin(4 * math.pi / n)

    def bracket(T, x, tau, s, f):
        big = T(f, 0, n * x, s(n) * tau) - T(-f, 0, n * x, s(n) * tau)
        small = 1j * T(0, f, x, tau) - 1j * T(0, -f, x, tau)
        return big + small / rn

    return _ident(
        f"N{n}",
        f"DFT n={n}, non-degenerate eigenvalue -i",
        lambda T, x, tau, s: bracket(T, x, tau, s, f1) * factor_den,
        lambda T, x, tau, s: bracket(T, x, tau, s, f2) * factor_num,
        nu_ok=True,
        notes=(
            f"Transcribed as [th_(1/n,0)(nx,n^2 tau) - th_(-1/n,0)(nx,n^2 tau) + n^(-1/2)(i th_(0,1/n)(x,tau) "
            f"- i th_(0,-1/n)(x,tau))] = [same with 2/n] * (sin(2pi/n) - sqrt(n)/2)/sin(4pi/n), n={n}; "
            "the outer bracket groups each whole combination. Cross-multiplied by sin(4pi/n). "
            "For nu > 1, n^2 tau becomes n^(2nu) tau."
        ),
    )


def _section3() -> list[IdentityDef]:
    out = [
        _ident(
            "L1.1",
            "DFT n=2, eigenvalue +1 proportionality",
            lambda T, x, tau, s: SQRT2 * T(0, 0, 2 * x, s(2) * tau) + T(0, 0, x, tau),
            lambda T, x, tau, s: (1 + SQRT2) * (SQRT2 * T(H, 0, 2 * x, s(2) * tau) + T(0, H, x, tau)),
            nu_ok=True,
            notes="sqrt2 th(2x,4tau) + th(x,tau) = (1+sqrt2)(sqrt2 th_(1/2,0)(2x,4tau) + th_(0,1/2)(x,tau)); 4tau -> 2^(2nu) tau",
        ),
        _ident(
            "L1.2",
            "DFT n=2, eigenvalue -1 proportionality",
            lambda T, x, tau, s: SQRT2 * T(0, 0, 2 * x, s(2) * tau) - T(0, 0, x, tau),
            lambda T, x, tau, s: (1 - SQRT2) * (SQRT2 * T(H, 0, 2 * x, s(2) * tau) - T(0, H, x, tau)),
            nu_ok=True,
            notes="sqrt2 th(2x,4tau) - th(x,tau) = (1-sqrt2)(sqrt2 th_(1/2,0)(2x,4tau) - th_(0,1/2)(x,tau)); 4tau -> 2^(2nu) tau",
        ),
        _ident(
            "S3.1",
            "DFT n=4, first relation",
            lambda T, x, tau, s: 2 * (T(0, 0, 4 * x, s(4) * tau) + T(H, 0, 4 * x, s(4) * tau)),
            lambda T, x, tau, s: T(0, 0, x, tau) + T(0, H, x, tau),
            nu_ok=True,
            notes="2[th(4x,16tau) + th_(1/2,0)(4x,16tau)] = th(x,tau) + th_(0,1/2)(x,tau); 16tau -> 4^(2nu) tau",
        ),
        _ident(
            "S3.2",
            "DFT n=4, second relation",
            lambda T, x, tau, s: 2 * T(0, 0, 4 * x, s(4) * tau)
            + (T(Fr(1, 4), 0, 4 * x, s(4) * tau) + T(Fr(3, 4), 0, 4 * x, s(4) * tau)),
            lambda T, x, tau, s: T(0, 0, x, tau) + 0.5 * (T(0, Fr(1, 4), x, tau) + T(0, Fr(3, 4), x, tau)),
            nu_ok=True,
            notes=(
                "2 th(4x,16tau) + [th_(1/4,0)(4x,16tau) + th_(3/4,0)(4x,16tau)] = "
                "th(x,tau) + 1/2[th_(0,1/4)(x,tau) + th_(0,3/4)(x,tau)]; 16tau -> 4^(2nu) tau"
            ),
        ),
    ]
    out.extend(_n_family(n) for n in (5, 6, 7, 8))
    return out


# ---------------------------------------------------------------------------
# product identities, classical fourth-order identities, Landen transformations

T3, T6 = Fr(1, 3), Fr(1, 6)


def _section4() -> list[IdentityDef]:
    out = [
        _ident(
            "P1",
            "product identity 1",
            lambda T, x, tau, s: T(0, 0, x, tau) * T(0, H, x, tau),
            lambda T, x, tau, s: T(0, H, 2 * x, 2 * tau) * T(0, H, 0, 2 * tau),
            classical=True,
            notes="th(x,tau) th_(0,1/2)(x,tau) = th_(0,1/2)(2x,2tau) th_(0,1/2)(0,2tau)",
        ),
        _ident(
            "P2",
            "product identity 2",
            lambda T, x, tau, s: T(0, H, 0, tau) * T(0, 0, x, tau),
            lambda T, x, tau, s: T(0, H, x, 2 * tau) ** 2 - T(H, H, x, 2 * tau) ** 2,
            classical=True,
            notes="th_(0,1/2)(0,tau) th(x,tau) = th_(0,1/2)(x,2tau)^2 - th_(1/2,1/2)(x,2tau)^2",
        ),
        _ident(
            "P3",
            "product identity 3",
            lambda T, x, tau, s: T(0, 0, x, tau) * T(0, T3, x, tau),
            lambda T, x, tau, s: T(0, T3, 2 * x, 2 * tau) * T(0, -T3, 0, 2 * tau)
            + T(H, T3, 2 * x, 2 * tau) * T(H, -T3, 0, 2 * tau),
            notes="th th_(0,1/3) = th_(0,1/3)(2x,2tau) th_(0,-1/3)(0,2tau) + th_(1/2,1/3)(2x,2tau) th_(1/2,-1/3)(0,2tau)",
        ),
        _ident(
            "P4",
            "product identity 4",
            lambda T, x, tau, s: T(0, 0, x, tau) * T(0, -T3, x, tau),
            lambda T, x, tau, s: T(0, -T3, 2 * x, 2 * tau) * T(0, T3, 0, 2 * tau)
            + T(H, -T3, 2 * x, 2 * tau) * T(H, T3, 0, 2 * tau),
            notes="th th_(0,-1/3) = th_(0,-1/3)(2x,2tau) th_(0,1/3)(0,2tau) + th_(1/2,-1/3)(2x,2tau) th_(1/2,1/3)(0,2tau)",
        ),
        _ident(
            "P5",
            "product identity 5",
            lambda T, x, tau, s: T(0, 0, x, tau) * T(T3, 0, x, tau),
            lambda T, x, tau, s: T(T6, 0, 2 * x, 2 * tau) * T(-T6, 0, 0, 2 * tau)
            + T(2 * T3, 0, 2 * x, 2 * tau) * T(T3, 0, 0, 2 * tau),
            notes="th th_(1/3,0) = th_(1/6,0)(2x,2tau) th_(-1/6,0)(0,2tau) + th_(2/3,0)(2x,2tau) th_(1/3,0)(0,2tau)",
        ),
        _ident(
            "NULL",
            "classical null identity",
            lambda T, x, tau, s: T(H, 0, 0, tau) ** 4 + T(0, H, 0, tau) ** 4,
            lambda T, x, tau, s: T(0, 0, 0, tau) ** 4,
            point_free=True,
            classical=True,
            notes="th_(1/2,0)(0,tau)^4 + th_(0,1/2)(0,tau)^4 = th(0,tau)^4",
        ),
        _ident(
            "C2",
            "second-order functional equation",
            lambda T, x, tau, s: T(0, 0, x, 2 * tau) ** 2 - T(H, 0, x, 2 * tau) ** 2,
            lambda T, x, tau, s: T(0, H, x, tau) * T(0, H, 0, tau),
            classical=True,
            notes="th(x,2tau)^2 - th_(1/2,0)(x,2tau)^2 = th_(0,1/2)(x,tau) th_(0,1/2)(0,tau)",
        ),
        _ident(
            "C4a",
            "fourth-order identity (first)",
            lambda T, x, tau, s: T(0, 0, x, tau) ** 2 * T(0, 0, 0, tau) ** 2,
            lambda T, x, tau, s: T(H, 0, x, tau) ** 2 * T(H, 0, 0, tau) ** 2 + T(0, H, x, tau) ** 2 * T(0, H, 0, tau) ** 2,
            classical=True,
            notes="th(x)^2 th(0)^2 = th_(1/2,0)(x)^2 th_(1/2,0)(0)^2 + th_(0,1/2)(x)^2 th_(0,1/2)(0)^2",
        ),
        _ident(
            "C4b",
            "fourth-order identity (second)",
            lambda T, x, tau, s: T(0, 0, x, tau) ** 2 * T(H, 0, 0, tau) ** 2,
            lambda T, x, tau, s: T(H, H, x, tau) ** 2 * T(0, H, 0, tau) ** 2 + T(H, 0, x, tau) ** 2 * T(0, 0, 0, tau) ** 2,
            classical=True,
            notes=(
                "Classical form th(x)^2 th_(1/2,0)(0)^2 = th_(1/2,1/2)(x)^2 th_(0,1/2)(0)^2 + th_(1/2,0)(x)^2 th(0)^2. "
                "The printed version has th_(0,1/2)(0)^2 in the last product, which fails already at x=0; "
                "it is kept as C4b-PRINTED."
            ),
        ),
    ]
    # tau -> tau + 1 facts applied to the second-order equation
    out += [
        _ident(
            "T1a",
            "tau -> tau+1, fact 1",
            lambda T, x, tau, s: T(0, 0, x, 2 * (tau + 1)),
            lambda T, x, tau, s: T(0, 0, x, 2 * tau),
            classical=True,
            notes="th(x,2(tau+1)) = th(x,2tau)",
        ),
        _ident(
            "T1b",
            "tau -> tau+1, fact 2",
            lambda T, x, tau, s: T(H, 0, x, 2 * (tau + 1)),
            lambda T, x, tau, s: 1j * T(H, 0, x, 2 * tau),
            classical=True,
            notes="th_(1/2,0)(x,2(tau+1)) = i th_(1/2,0)(x,2tau)",
        ),
        _ident(
            "T1c",
            "tau -> tau+1, fact 3",
            lambda T, x, tau, s: T(0, H, x, tau + 1),
            lambda T, x, tau, s: T(0, 0, x, tau),
            classical=True,
            notes="th_(0,1/2)(x,tau+1) = th(x,tau)",
        ),
    ]

    def shift2(a, b, factor, label, tag):
        return _ident(
            tag,
            f"tau -> tau+2, {label}",
            lambda T, x, tau, s: (T(a, b, x, tau + 2), T(a, b, 0, tau + 2)),
            lambda T, x, tau, s: (factor * T(a, b, x, tau), factor * T(a, b, 0, tau)),
            classical=True,
            notes=f"th_({a},{b})(x,tau+2) = {'i ' if factor == 1j else ''}th_({a},{b})(x,tau), and likewise at x=0",
        )

    out += [
        shift2(0, 0, 1, "fact 1", "T2a"),
        shift2(H, 0, 1j, "fact 2", "T2b"),
        shift2(0, H, 1, "fact 3", "T2c"),
        shift2(H, H, 1j, "fact 4", "T2d"),
    ]
    out += [
        _ident(
            "INTER1",
            "first and second eigenvector entries multiplied (n=2)",
            lambda T, x, tau, s: T(0, 0, x, tau) ** 2 - T(H, 0, x, tau) ** 2,
            lambda T, x, tau, s: T(0, 0, x / 2, tau / 4) * T(0, H, x / 2, tau / 4),
            classical=True,
            notes="th(x,tau)^2 - th_(1/2,0)(x,tau)^2 = th(x/2,tau/4) th_(0,1/2)(x/2,tau/4)",
        ),
        _ident(
            "INTER3",
            "second-order equation after tau -> tau+1",
            lambda T, x, tau, s: T(0, 0, x, 2 * tau) ** 2 + T(H, 0, x, 2 * tau) ** 2,
            lambda T, x, tau, s: T(0, 0, x, tau) * T(0, 0, 0, tau),
            classical=True,
            notes="th(x,2tau)^2 + th_(1/2,0)(x,2tau)^2 = th(x,tau) th(0,tau)",
        ),
        _ident(
            "LAND10a",
            "classical Landen transformation (odd function)",
            lambda T, x, tau, s: T(H, H, 2 * x, 2 * tau) * T(0, H, 0, 2 * tau),
            lambda T, x, tau, s: T(H, H, x, tau) * T(H, 0, x, tau),
            classical=True,
            notes=(
                "Classical form th_(1/2,1/2)(2x,2tau) th_(0,1/2)(0,2tau) = th_(1/2,1/2)(x,tau) th_(1/2,0)(x,tau), "
                "cross-multiplied. The printed numerator uses th_(1/2,1/2)(0,tau), which vanishes identically; "
                "that version is kept as LAND10a-PRINTED."
            ),
        ),
        _ident(
            "LAND10b",
            "classical Landen transformation (null values)",
            lambda T, x, tau, s: T(0, 0, 0, 2 * tau) ** 2,
            lambda T, x, tau, s: 0.5 * (T(0, 0, 0, tau) ** 2 + T(0, H, 0, tau) ** 2),
            point_free=True,
            classical=True,
            notes="th(0,2tau)^2 = 1/2[th(0,tau)^2 + th_(0,1/2)(0,tau)^2]",
        ),
    ]

    def ldn3_rhs(T, x, tau, s):
        return (
            T(0, T3, 2 * x, 2 * tau) * T(0, -T3, 0, 2 * tau)
            + T(H, T3, 2 * x, 2 * tau) * T(H, -T3, 0, 2 * tau)
            + T(0, -T3, 2 * x, 2 * tau) * T(0, T3, 0, 2 * tau)
            + T(H, -T3, 2 * x, 2 * tau) * T(H, T3, 0, 2 * tau)
            - (T(T6, 0, 6 * x, 18 * tau) * T(-T6, 0, 0, 18 * tau) + T(2 * T3, 0, 6 * x, 18 * tau) * T(T3, 0, 0, 18 * tau))
            - (T(-T6, 0, 6 * x, 18 * tau) * T(T6, 0, 0, 18 * tau) + T(T3, 0, 6 * x, 18 * tau) * T(2 * T3, 0, 0, 18 * tau))
        )

    def alpha(T, x, tau):
        return T(T3, 0, x, tau) + T(-T3, 0, x, tau)

    out += [
        _ident(
            "LDN3",
            "Landen transformation, n=3",
            lambda T, x, tau, s: 2 * T(0, 0, 3 * x, 9 * tau) ** 2 - (T(T3, 0, 3 * x, 9 * tau) + T(-T3, 0, 3 * x, 9 * tau)) ** 2,
            ldn3_rhs,
            notes=(
                "2 th(3x,9tau)^2 - [th_(1/3,0)(3x,9tau) + th_(-1/3,0)(3x,9tau)]^2 = four (2x,2tau)-products "
                "minus two bracketed (6x,18tau)-pairs, transcribed line by line as printed"
            ),
        ),
        _ident(
            "LDN3-PRE",
            "Landen n=3 precursor",
            lambda T, x, tau, s: 2 * T(0, 0, x, tau) ** 2 - alpha(T, x, tau) ** 2 + T(0, 0, x, tau) * alpha(T, x, tau),
            lambda T, x, tau, s: T(0, 0, x / 3, tau / 9) * (T(0, T3, x / 3, tau / 9) + T(0, -T3, x / 3, tau / 9)),
            notes="2th^2 - alpha^2 + th alpha = th(x/3,tau/9)[th_(0,1/3)(x/3,tau/9) + th_(0,-1/3)(x/3,tau/9)], alpha = th_(1/3,0)+th_(-1/3,0)",
        ),
        _ident(
            "LDN3-ALPHA",
            "Landen n=3, equality of characteristic sums",
            lambda T, x, tau, s: alpha(T, x, tau),
            lambda T, x, tau, s: T(2 * T3, 0, x, tau) + T(-2 * T3, 0, x, tau),
            notes="th_(1/3,0)(x,tau) + th_(-1/3,0)(x,tau) = th_(2/3,0)(x,tau) + th_(-2/3,0)(x,tau)",
        ),
        _ident(
            "LDN4",
            "Landen transformation, n=4",
            lambda T, x, tau, s: (T(0, 0, 2 * x, 8 * tau) + T(H, 0, 2 * x, 8 * tau)) ** 2
            - (T(Fr(1, 4), 0, 2 * x, 8 * tau) + T(Fr(3, 4), 0, 2 * x, 8 * tau)) ** 2,
            lambda T, x, tau, s: T(0, H, x, tau) * T(0, H, 0, tau),
            notes="[th(2x,8tau) + th_(1/2,0)(2x,8tau)]^2 - [th_(1/4,0)(2x,8tau) + th_(3/4,0)(2x,8tau)]^2 = th_(0,1/2)(x,tau) th_(0,1/2)(0,tau)",
        ),
    ]

    def even_landen(n):
        def lhs(T, x, tau, s):
            arg_x, arg_tau = n * x / 2, n * n * tau / 2
            ev = sum(T(Fr(2 * k, n), 0, arg_x, arg_tau) for k in range(n // 2))
            od = sum(T(Fr(2 * k + 1, n), 0, arg_x, arg_tau) for k in range(n // 2))
            return ev**2 - od**2

        return _ident(
            f"LDNEVEN{n}",
            f"even-n Landen transformation, n={n}",
            lhs,
            lambda T, x, tau, s: T(H, 0, x, tau) * T(H, 0, 0, tau),
            notes=(
                f"(sum_k th_(2k/n,0)(nx/2, n^2 tau/2))^2 - (sum_k th_((2k+1)/n,0)(nx/2, n^2 tau/2))^2 "
                f"= th_(1/2,0)(x,tau) th_(1/2,0)(0,tau), n={n}, as printed"
            ),
        )

    out += [even_landen(6), even_landen(8)]
    return out


def _printed() -> list[IdentityDef]:
    return [
        _ident(
            "C4b-PRINTED",
            "fourth-order identity (second), as printed",
            lambda T, x, tau, s: T(0, 0, x, tau) ** 2 * T(H, 0, 0, tau) ** 2,
            lambda T, x, tau, s: T(H, H, x, tau) ** 2 * T(0, H, 0, tau) ** 2 + T(H, 0, x, tau) ** 2 * T(0, H, 0, tau) ** 2,
            notes="th(x)^2 th_(1/2,0)(0)^2 = th_(1/2,1/2)(x)^2 th_(0,1/2)(0)^2 + th_(1/2,0)(x)^2 th_(0,1/2)(0)^2",
        ),
        _ident(
            "LAND10a-PRINTED",
            "classical Landen transformation (odd function), as printed",
            lambda T, x, tau, s: T(H, H, 2 * x, 2 * tau) * T(0, H, 0, 2 * tau),
            lambda T, x, tau, s: T(H, H, 0, tau) * T(H, 0, x, tau),
            notes="th_(1/2,1/2)(2x,2tau) th_(0,1/2)(0,2tau) = th_(1/2,1/2)(0,tau) th_(1/2,0)(x,tau), cross-multiplied",
        ),
    ]


_REGISTRY: tuple[IdentityDef, ...] = tuple(_section3() + _section4())
_PRINTED: tuple[IdentityDef, ...] = tuple(_printed())
_BY_NAME = {d.name: d for d in _REGISTRY + _PRINTED}
assert len(_BY_NAME) == len(_REGISTRY) + len(_PRINTED)


def registry() -> list[IdentityDef]:
    """All registered identities in their fixed order."""
    return list(_REGISTRY)


def printed_variants() -> list[IdentityDef]:
    """Verbatim transcriptions of printed forms that differ from the classical identity."""
    return list(_PRINTED)


def lookup(name: str) -> IdentityDef:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}") from None


def _residuals(lhs: tuple, rhs: tuple) -> tuple[float, float]:
    # a component with both sides under DEGENERACY_FLOOR (an exact zero such
    # as th_(1/2,1/2)(0, tau)) only contributes to the absolute residual
    abs_r = rel_r = 0.0
    for a, b in zip(lhs, rhs):
        d = abs(a - b)
        abs_r = max(abs_r, d)
        if max(abs(a), abs(b)) >= DEGENERACY_FLOOR:
            rel_r = max(rel_r, d / max(abs(a), abs(b), RESIDUAL_FLOOR))
    return abs_r, rel_r


def _as_tuple(v) -> tuple:
    return tuple(complex(t) for t in v) if isinstance(v, tuple) else (complex(v),)


def verify(
    d: IdentityDef,
    region: SampleRegion = DEFAULT_REGION,
    samples: int = 50,
    tol: float = 1e-9,
    nu: int = 1,
) -> IdentityReport:
    """Evaluate both sides of ``d`` at ``samples`` seeded points.

    Theta calls use ``eps = tol/100``.  A sample whose evaluation raises is
    recorded with its error message and forces a FAIL verdict; it does not
    abort the run.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if nu > 1 and not d.nu_applicable:
        raise ValueError(f"identity {d.name} is only stated for nu = 1")
    eps = tol / 100.0
    records = []
    max_abs = max_rel = 0.0
    errored = False
    scale = 0.0
    for x, tau in sample_points(region, samples):
        xv = 0j if d.arity == "point-free" else x
        try:
            lhs = _as_tuple(d.lhs(xv, tau.value, nu, eps))
            rhs = _as_tuple(d.rhs(xv, tau.value, nu, eps))
        except (ThetaDftError, ArithmeticError, ValueError) as exc:
            errored = True
            records.append(SampleRecord(xv, tau.value, (), (), math.nan, math.nan, f"{type(exc).__name__}: {exc}"))
            continue
        a, r = _residuals(lhs, rhs)
        max_abs, max_rel = max(max_abs, a), max(max_rel, r)
        scale = max(scale, max(abs(v) for v in lhs + rhs))
        records.append(SampleRecord(xv, tau.value, lhs, rhs, a, r))
    if errored:
        verdict = FAIL
    elif scale < DEGENERACY_FLOOR:
        verdict = DEGENERATE
    elif max_rel <= tol:
        verdict = PASS
    else:
        verdict = FAIL
    return IdentityReport(
        name=d.name,
        sample_count=samples,
        max_abs_residual=max_abs,
        max_rel_residual=max_rel,
        verdict=verdict,
        tolerance=tol,
        nu=nu,
        per_sample=tuple(records),
        notes=d.notes,
    )


def _skipped(d: IdentityDef, tol: float, nu: int) -> IdentityReport:
    return IdentityReport(d.name, 0, 0.0, 0.0, SKIPPED, tol, nu, (), d.notes)


def verify_all(
    region: SampleRegion = DEFAULT_REGION,
    samples: int = 50,
    tol: float = 1e-9,
    nu: int = 1,
    names: Sequence[str] | None = None,
) -> list[IdentityReport]:
    """One report per identity, in registry order (or in ``names`` order).

    With ``nu > 1``, identities not stated for general ``nu`` are reported as
    SKIPPED.
    """
    defs = registry() if names is None else [lookup(n) for n in names]
    return [verify(d, region, samples, tol, nu) if (nu == 1 or d.nu_applicable) else _skipped(d, tol, nu) for d in defs]
