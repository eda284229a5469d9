"""Theta functions with characteristics, DFT eigenvectors built from them,
sample-based identity checks and exact q-series arithmetic."""

from __future__ import annotations

__version__ = "0.1.0"

from .numerics import (
    DEFAULT_REGION,
    EmptyRequestError,
    NonFiniteError,
    SampleRegion,
    Tau,
    ThetaDftError,
    ThetaPoint,
    sample_points,
)
from .theta import (
    Characteristics,
    CertificationError,
    TruncationCertificate,
    TruncationError,
    theta,
    theta_char,
    theta_value,
)
from .dft import dft_matrix, eigen_residual, matveev_vector, multiplicities, numerical_multiplicities
from .identities import IdentityReport, lookup, registry, verify, verify_all
from .qseries import ExponentLattice, LaurentSeries, poch, series_eq, theta_product_series, triple_product_check
from .qidentities import (
    check_odd_square_identity,
    check_rogers_ramanujan,
    check_square_identity,
    check_triangular_identity,
    rr_substitution_trace,
)
