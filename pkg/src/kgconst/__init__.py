"""High-precision verification toolkit for the double-series identity for pi
and the Grothendieck-Krivine constant, including the complex-case elliptic
root equation, Haagerup's bound, the Khintchine product, and the related
integral identities.
"""

from .core import BigReal, PrecisionContext, const_KG, const_L, const_pi, const_sqrt2
from .errors import (
    BracketFailure,
    DomainError,
    InvalidPrecision,
    KgconstError,
    MaxTermsExceeded,
    NoConvergence,
    NonFiniteEvaluation,
)
from .identities import IdentityId, IdentityReport, verify, verify_all
from .quadrature import QuadratureResult, integrate, integrate_to_infinity
from .series import (
    FourierCoefficient,
    SeriesResult,
    double_series,
    double_series_partial,
    fourier_a,
    fourier_a_quadrature,
    inner_tail,
    inner_term,
    limit_S,
    parseval_closure,
    partial_sum_S,
    recurrence_check,
)
from .elliptic import (
    EllipticPair,
    RootResult,
    ellip_E,
    ellip_E_imag,
    ellip_K,
    ellip_K_imag,
    haagerup_bound,
    kc_upper,
    krivine_complex_f,
    solve_x0,
)
from .khintchine import ProductResult, khintchine_accelerated, khintchine_partial

__version__ = "0.1.0"

__all__ = [
    "BigReal",
    "PrecisionContext",
    "const_pi",
    "const_L",
    "const_KG",
    "const_sqrt2",
    "KgconstError",
    "InvalidPrecision",
    "DomainError",
    "NoConvergence",
    "NonFiniteEvaluation",
    "MaxTermsExceeded",
    "BracketFailure",
    "SeriesResult",
    "FourierCoefficient",
    "inner_term",
    "partial_sum_S",
    "limit_S",
    "inner_tail",
    "fourier_a",
    "fourier_a_quadrature",
    "recurrence_check",
    "double_series",
    "double_series_partial",
    "parseval_closure",
    "QuadratureResult",
    "integrate",
    "integrate_to_infinity",
    "EllipticPair",
    "RootResult",
    "ellip_K",
    "ellip_E",
    "ellip_K_imag",
    "ellip_E_imag",
    "haagerup_bound",
    "krivine_complex_f",
    "solve_x0",
    "kc_upper",
    "ProductResult",
    "khintchine_partial",
    "khintchine_accelerated",
    "IdentityId",
    "IdentityReport",
    "verify",
    "verify_all",
    "__version__",
]
