"""High-precision numerics for the trigamma-based function family
Phi(x) = x*psi'(x) - 1, its derivative ratios, Laplace-kernel representations,
and desk-scale verification of their monotonicity and complete-monotonicity
properties.
"""

from .precision import (
    AccuracyError,
    DEFAULT_POLICY,
    DomainError,
    EvalPoint,
    DerivOrders,
    OrderRangeError,
    PrecisionPolicy,
    QuadratureError,
)
from .polygamma import phi, phi_deriv, polygamma

__all__ = [
    "AccuracyError",
    "DEFAULT_POLICY",
    "DomainError",
    "EvalPoint",
    "DerivOrders",
    "OrderRangeError",
    "PrecisionPolicy",
    "QuadratureError",
    "phi",
    "phi_deriv",
    "polygamma",
]

__version__ = "0.1.0"
