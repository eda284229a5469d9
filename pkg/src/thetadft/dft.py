"""DFT matrix, its eigenvalue multiplicities, and theta-built eigenvectors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numerics import Tau, ThetaPoint, as_complex
from .theta import Characteristics, theta_char

__all__ = [
    "DftMatrix",
    "Multiplicities",
    "EigenvectorG",
    "I_POWERS",
    "dft_matrix",
    "multiplicities",
    "numerical_multiplicities",
    "matveev_vector",
    "eigen_residual",
]

# i**k for k mod 4, exact
I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)
EIGENVALUES = I_POWERS


def _i_pow(k: int) -> complex:
    return I_POWERS[k % 4]


@dataclass(frozen=True, eq=False)
class DftMatrix:
    n: int
    entries: np.ndarray

    def __matmul__(self, other):
        return self.entries @ np.asarray(other)


@dataclass(frozen=True)
class Multiplicities:
    """Multiplicities of the eigenvalues ``1, -1, i, -i``."""

    m_plus1: int
    m_minus1: int
    m_plusI: int
    m_minusI: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.m_plus1, self.m_minus1, self.m_plusI, self.m_minusI)

    def for_k(self, k: int) -> int:
        """Multiplicity of ``i**k``."""
        return (self.m_plus1, self.m_plusI, self.m_minus1, self.m_minusI)[k % 4]

    @property
    def total(self) -> int:
        return sum(self.as_tuple())


@dataclass(frozen=True, eq=False)
class EigenvectorG:
    n: int
    k: int
    x: complex
    tau: Tau
    nu: int
    components: np.ndarray

    @property
    def eigenvalue(self) -> complex:
        return _i_pow(self.k)


def dft_matrix(n: int) -> DftMatrix:
    """Unitary DFT matrix with ``A[j, k] = exp(2 pi i j k / n) / sqrt(n)``.

    Phases are reduced with ``(j*k) mod n`` before the exponential so every
    entry is one of the ``n`` exactly-indexed roots of unity.
    """
    if int(n) != n or n < 2:
        raise ValueError(f"DFT size must be an integer >= 2, got {n!r}")
    n = int(n)
    j = np.arange(n)
    phase = np.outer(j, j) % n
    roots = np.exp(2j * np.pi * np.arange(n) / n)
    # pin the quarter-turn roots so A**2 is an exact permutation where possible
    for r, val in ((0, 1.0), (n / 4, 1j), (n / 2, -1.0), (3 * n / 4, -1j)):
        if float(r).is_integer():
            roots[int(r)] = val
    entries = roots[phase] / math.sqrt(n)
    entries.setflags(write=False)
    return DftMatrix(n=n, entries=entries)


def multiplicities(n: int) -> Multiplicities:
    """Floor formulas ``[(n+4)/4], [(n+2)/4], [(n+1)/4], [(n-1)/4]``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return Multiplicities((n + 4) // 4, (n + 2) // 4, (n + 1) // 4, (n - 1) // 4)


def numerical_multiplicities(n: int, radius: float = 1e-6) -> Multiplicities:
    """Count eigenvalues of ``dft_matrix(n)`` within ``radius`` of each fourth root of unity."""
    ev = np.linalg.eigvals(dft_matrix(n).entries)
    counts = [int(np.sum(np.abs(ev - lam) <= radius)) for lam in (1, -1, 1j, -1j)]
    return Multiplicities(*counts)


def matveev_vector(n: int, k: int, x, tau, nu: int = 1, eps: float = 1e-10) -> EigenvectorG:
    """Theta eigenvector ``G(x, tau, nu, k)`` of the size-``n`` DFT for eigenvalue ``i**k``.

    Component ``j`` is::

        theta_{j/n,0}(x,tau,nu) + (-1)^k theta_{-j/n,0}(x,tau,nu)
          + n^(-1/2) [ (-i)^k theta((j+x)/n, tau/n^(2nu), nu)
                       + (-i)^(3k) theta((x-j)/n, tau/n^(2nu), nu) ]

    Every theta call is certified to ``eps/4`` so each component is within
    ``eps`` of its exact value.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    k = int(k) % 4
    x = as_complex(x)
    tau = tau if isinstance(tau, Tau) else Tau(tau)
    sub = eps / 4.0
    sign = (-1) ** k
    c1 = _i_pow(-k)  # (-i)^k
    c3 = _i_pow(-3 * k)  # (-i)^(3k)
    inner_tau = tau.value / n ** (2 * nu)
    outer = ThetaPoint(x, tau, nu, sub)
    comps = np.empty(n, dtype=complex)
    for j in range(n):
        t_plus = theta_char(Characteristics(Fraction(j, n), Fraction(0)), outer)[0]
        t_minus = theta_char(Characteristics(Fraction(-j, n), Fraction(0)), outer)[0]
        s_plus = theta_char(Characteristics(), ThetaPoint((j + x) / n, inner_tau, nu, sub))[0]
        s_minus = theta_char(Characteristics(), ThetaPoint((x - j) / n, inner_tau, nu, sub))[0]
        comps[j] = t_plus + sign * t_minus + (c1 * s_plus + c3 * s_minus) / math.sqrt(n)
    comps.setflags(write=False)
    return EigenvectorG(n=n, k=k, x=x, tau=tau, nu=nu, components=comps)


def eigen_residual(A: DftMatrix, G: EigenvectorG) -> float:
    """``||A G - i^k G||_inf / max(1, ||G||_inf)``."""
    if A.n != G.n or G.components.shape != (A.n,):
        raise ValueError(f"dimension mismatch: matrix {A.n}, vector {G.components.shape}")
    v = G.components
    r = A.entries @ v - G.eigenvalue * v
    return float(np.max(np.abs(r)) / max(1.0, float(np.max(np.abs(v)))))
