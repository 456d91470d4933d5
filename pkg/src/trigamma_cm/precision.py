"""Working-precision policy, shared domain types, and error classes.

All numeric kernels in this package run on mpmath arbitrary-precision floats
under an explicit bit budget, so that twelfth-order derivative combinations
keep at least ten significant digits after internal cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf

# Guard bits added on top of the requested significand width; absorbs the
# rounding of shift/summation loops without changing user-visible precision.
GUARD_BITS = 20

DEFAULT_PREC_BITS = 192
DEFAULT_MAX_ORDER = 12
DEFAULT_RTOL = 1e-12
DEFAULT_CROSSOVER = 16.0


class DomainError(ValueError):
    """Argument outside the mathematical domain of the operation."""


class OrderRangeError(DomainError):
    """Derivative order negative or above the configured maximum."""


class AccuracyError(ArithmeticError):
    """Requested tolerance is unattainable; carries the achieved estimate."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class QuadratureError(AccuracyError):
    """Quadrature did not converge within budget; carries the error estimate."""


@dataclass(frozen=True)
class PrecisionPolicy:
    """Evaluation policy: target tolerance, significand bits, series/asymptotic
    crossover abscissa, and the maximum derivative order served."""

    target_rtol: float = DEFAULT_RTOL
    prec_bits: int = DEFAULT_PREC_BITS
    crossover: float = DEFAULT_CROSSOVER
    max_order: int = DEFAULT_MAX_ORDER

    def __post_init__(self):
        if not 0 < self.target_rtol <= 1e-6:
            raise DomainError(
                f"target_rtol must lie in (0, 1e-6], got {self.target_rtol}"
            )
        if self.prec_bits < 80:
            raise DomainError(f"prec_bits must be >= 80, got {self.prec_bits}")
        if self.crossover < 8:
            raise DomainError(f"crossover must be >= 8, got {self.crossover}")
        if self.max_order < 1:
            raise DomainError(f"max_order must be >= 1, got {self.max_order}")
        # Refuse tolerances the significand cannot express: better an error
        # than a silently degraded result.
        attainable = 2.0 ** (-(self.prec_bits - 10))
        if self.target_rtol < attainable:
            raise AccuracyError(
                f"target_rtol {self.target_rtol} unattainable at "
                f"{self.prec_bits} bits (attainable ~{attainable:.3g})",
                achieved=attainable,
            )

    def working(self):
        """Context manager setting mpmath precision for this policy."""
        return mp.workprec(self.prec_bits + GUARD_BITS)


DEFAULT_POLICY = PrecisionPolicy()


@dataclass(frozen=True)
class EvalPoint:
    """Strictly positive abscissa."""

    x: float

    def __post_init__(self):
        x = self.x
        if not (x == x and x > 0 and x < float("inf")):
            raise DomainError(f"abscissa must be finite and > 0, got {x!r}")


@dataclass(frozen=True)
class DerivOrders:
    """Pair of nonnegative derivative orders (single-order use sets n=None)."""

    m: int
    n: int | None = None
    max_order: int = DEFAULT_MAX_ORDER

    def __post_init__(self):
        for name, value in (("m", self.m), ("n", self.n)):
            if value is None:
                continue
            if not isinstance(value, int) or isinstance(value, bool):
                raise OrderRangeError(f"{name} must be an integer, got {value!r}")
            if not 0 <= value <= self.max_order:
                raise OrderRangeError(
                    f"{name}={value} outside [0, {self.max_order}]"
                )


def as_abscissa(x):
    """Validate a positive abscissa and return it as mpf, preserving the full
    precision of mpf inputs (accepts EvalPoint)."""
    if isinstance(x, EvalPoint):
        return mpf(x.x)
    xv = mpf(x) if not isinstance(x, mpf) else x
    if not (mp.isfinite(xv) and xv > 0):
        raise DomainError(f"abscissa must be finite and > 0, got {x!r}")
    return xv


def check_order(k, max_order, lowest=0) -> int:
    if not isinstance(k, int) or isinstance(k, bool):
        raise OrderRangeError(f"order must be an integer, got {k!r}")
    if not lowest <= k <= max_order:
        raise OrderRangeError(f"order {k} outside [{lowest}, {max_order}]")
    return k


def fmt17(value) -> str:
    """Deterministic 17-significant-digit decimal rendering (CLI/CSV output)."""
    return format(float(value), ".17g")


def to_mpf(x) -> mpf:
    """Coerce to mpf without going through a lossy decimal string."""
    if isinstance(x, mpf):
        return x
    return mpf(x)


def log_grid(lo: float, hi: float, n: int) -> tuple[float, ...]:
    """n log-uniform points on [lo, hi], endpoints exact, deterministic."""
    if not (lo > 0 and hi > lo and n >= 2):
        raise DomainError(f"log grid requires 0 < lo < hi and n >= 2, got {lo}, {hi}, {n}")
    ratio = hi / lo
    pts = [lo * ratio ** (i / (n - 1)) for i in range(n)]
    pts[0], pts[-1] = lo, hi
    return tuple(pts)


def lin_grid(lo: float, hi: float, n: int) -> tuple[float, ...]:
    """n linearly spaced points on [lo, hi], endpoints exact."""
    if not (hi > lo and n >= 2):
        raise DomainError(f"linear grid requires lo < hi and n >= 2, got {lo}, {hi}, {n}")
    step = (hi - lo) / (n - 1)
    pts = [lo + i * step for i in range(n)]
    pts[-1] = hi
    return tuple(pts)
