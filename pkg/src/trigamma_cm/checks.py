"""Numerical verification of monotonicity and complete-monotonicity claims.

Two routes realize the checks: derivative sign patterns (analytic derivatives
when the function handle advertises them, high-order central finite
differences with error estimates otherwise) and nonnegativity of Bernstein
integrands.  Every report is a desk-scale certificate: finite grid, finite
derivative order, stated margins - not a proof.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpf

from .kernel import h
from .laplace import frak_y_reciprocal_substituted, laplace_transform
from .precision import (
    DEFAULT_PREC_BITS,
    DomainError,
    GUARD_BITS,
    check_order,
    to_mpf,
)
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig
from .ratios import sharp_constant

__all__ = [
    "ScanReport",
    "OrderVerdict",
    "CmReport",
    "OmegaClass",
    "RatioProbeReport",
    "fd_derivative",
    "check_sign_pattern",
    "check_monotone",
    "check_bernstein_integrand",
    "classify_omega",
    "laplace_ratio_monotonicity_probe",
]


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanReport:
    """Grid scan outcome for a monotonicity or sign claim."""

    claim: str
    grid: tuple
    values: tuple
    passed: bool
    first_violation: dict | None
    vmin: float
    vmax: float
    note: str = ""


@dataclass(frozen=True)
class OrderVerdict:
    order: int
    status: str  # "pass" | "fail" | "inconclusive"
    worst_margin: float
    worst_x: float
    max_fd_error: float | None = None


@dataclass(frozen=True)
class CmReport:
    """Sign-pattern certificate up to a finite derivative order on a grid."""

    max_order: int
    grid: tuple
    verdicts: tuple[OrderVerdict, ...]
    first_violation: tuple | None  # (order, x, value)
    note: str = field(
        default="numerical certificate: finite grid and finite derivative order"
    )

    @property
    def passed(self) -> bool:
        return all(v.status == "pass" for v in self.verdicts)

    @property
    def inconclusive(self) -> bool:
        return any(v.status == "inconclusive" for v in self.verdicts) and not any(
            v.status == "fail" for v in self.verdicts
        )


class OmegaClass(enum.Enum):
    CM_NEGATIVE_SIDE = "cm_negative_side"
    CM_POSITIVE_SIDE = "cm_positive_side"
    NEITHER = "neither"


@dataclass(frozen=True)
class RatioProbeReport:
    hypothesis: ScanReport
    conclusion: ScanReport

    @property
    def consistent(self) -> bool:
        return self.hypothesis.passed and self.conclusion.passed


# ---------------------------------------------------------------------------
# Finite differences
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _fd_weights(order: int, half_width: int) -> tuple[Fraction, ...]:
    """Central-difference weights on integer offsets -p..p for the given
    derivative order, solved exactly (Vandermonde moment conditions)."""
    p = half_width
    size = 2 * p + 1
    if order >= size:
        raise DomainError(f"stencil of {size} points cannot reach order {order}")
    rows = [
        [Fraction(off) ** q for off in range(-p, p + 1)] for q in range(size)
    ]
    rhs = [Fraction(0)] * size
    import math as _math

    rhs[order] = Fraction(_math.factorial(order))
    # Gaussian elimination with exact rationals
    for col in range(size):
        pivot = next(r for r in range(col, size) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        rhs[col] *= inv
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
                rhs[r] -= factor * rhs[col]
    return tuple(rhs)


def fd_derivative(
    f,
    x,
    order: int,
    accuracy: int = 8,
    step=None,
    prec_bits: int = DEFAULT_PREC_BITS,
):
    """Central-difference derivative with a two-step Richardson error estimate.

    Default step is x * eps^(1/10) with eps the working-precision epsilon.
    Returns (value, error_estimate); the estimate combines truncation
    (|D_h - D_{h/2}| / (2^accuracy - 1)) and rounding amplification.
    """
    check_order(order, 8, lowest=1)
    with mp.workprec(prec_bits + GUARD_BITS):
        xv = to_mpf(x)
        eps = mpf(2) ** (-(prec_bits + GUARD_BITS))
        hstep = to_mpf(step) if step is not None else abs(xv) * eps ** mpf("0.1")
        if hstep == 0:
            raise DomainError("finite-difference step must be nonzero")
        p = (order + accuracy) // 2
        weights = [mpf(w.numerator) / w.denominator for w in _fd_weights(order, p)]

        def stencil(hh):
            vals = [f(xv + i * hh) for i in range(-p, p + 1)]
            acc = mpf(0)
            for w, v in zip(weights, vals):
                acc += w * v
            round_amp = eps * sum(
                abs(w) * abs(v) for w, v in zip(weights, vals)
            ) / hh**order
            return acc / hh**order, round_amp

        coarse, _ = stencil(hstep)
        fine, round_err = stencil(hstep / 2)
        trunc_err = abs(coarse - fine) / (2**accuracy - 1)
        return fine, trunc_err + round_err


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def check_sign_pattern(
    f,
    max_order: int,
    grid,
    tolerance: float = 0.0,
    prec_bits: int = DEFAULT_PREC_BITS,
) -> CmReport:
    """Verify (-1)^j f^(j)(x) >= -tolerance for j = 0..max_order over the grid.

    Derivatives come from f.derivative(j) when the handle provides it, else
    from central finite differences (max_order <= 8 in that mode).  When the
    handle also provides a per-order magnitude scale, the tolerance is applied
    relative to that scale.  A point whose finite-difference error estimate
    straddles the margin yields an inconclusive verdict, distinct from fail.
    """
    grid = tuple(float(g) for g in grid)
    if not grid:
        raise DomainError("grid must be nonempty")
    analytic = hasattr(f, "derivative")
    if not analytic and max_order > 8:
        raise DomainError("finite-difference mode supports max_order <= 8")
    verdicts = []
    first_violation = None
    for j in range(max_order + 1):
        scale_fn = f.scale(j) if analytic and hasattr(f, "scale") else None
        deriv_fn = f.derivative(j) if analytic else None
        # Escalate working precision instead of failing when FD error
        # estimates straddle the margin; inconclusive only if the largest
        # budget still cannot separate sign from noise.
        for bits in (prec_bits, prec_bits + 128, prec_bits + 320):
            worst_margin = mp.inf
            worst_x = grid[0]
            max_err = mpf(0)
            clear_fail = False
            unclear = False
            violation_point = None
            for x in grid:
                if analytic:
                    value = deriv_fn(x)
                    err = mpf(0)
                elif j == 0:
                    value, err = f(to_mpf(x)), mpf(0)
                else:
                    value, err = fd_derivative(f, x, j, prec_bits=bits)
                signed = (-1) ** j * value
                tol_here = to_mpf(tolerance)
                if scale_fn is not None:
                    tol_here = tol_here * scale_fn(x)
                margin = signed + tol_here
                if margin < worst_margin:
                    worst_margin = margin
                    worst_x = x
                max_err = max(max_err, err)
                if margin + err < 0:
                    clear_fail = True
                    violation_point = (j, x, float(signed))
                    break
                if margin - err < 0:
                    unclear = True
            if analytic or not unclear or clear_fail:
                break
        if clear_fail:
            status = "fail"
            if first_violation is None:
                first_violation = violation_point
        elif unclear:
            status = "inconclusive"
        else:
            status = "pass"
        verdicts.append(
            OrderVerdict(
                order=j,
                status=status,
                worst_margin=float(worst_margin),
                worst_x=float(worst_x),
                max_fd_error=None if analytic else float(max_err),
            )
        )
    return CmReport(
        max_order=max_order,
        grid=grid,
        verdicts=tuple(verdicts),
        first_violation=first_violation,
    )


def check_monotone(
    f,
    grid,
    direction: str,
    tolerance: float = 1e-10,
    strict: bool = False,
) -> ScanReport:
    """Assert adjacent-pair ordering over the grid.

    `tolerance` is a relative slack: ties within it count as passing unless
    `strict` is set (sharpness experiments).  Violations live in the report,
    never as exceptions.
    """
    if direction not in ("increasing", "decreasing"):
        raise DomainError(f"direction must be increasing/decreasing, got {direction!r}")
    grid = tuple(float(g) for g in grid)
    if len(grid) < 2 or any(a >= b for a, b in zip(grid, grid[1:])):
        raise DomainError("grid must be strictly increasing with >= 2 points")
    values = [f(x) for x in grid]
    sign = 1 if direction == "increasing" else -1
    passed = True
    first_violation = None
    for i in range(len(grid) - 1):
        delta = sign * (values[i + 1] - values[i])
        slack = to_mpf(tolerance) * max(abs(values[i]), abs(values[i + 1]))
        bad = (delta <= 0) if strict else (delta < -slack)
        if bad:
            passed = False
            first_violation = {
                "index": i,
                "x_left": grid[i],
                "x_right": grid[i + 1],
                "value_left": float(values[i]),
                "value_right": float(values[i + 1]),
            }
            break
    return ScanReport(
        claim=direction + (" (strict)" if strict else ""),
        grid=grid,
        values=tuple(float(v) for v in values),
        passed=passed,
        first_violation=first_violation,
        vmin=float(min(values)),
        vmax=float(max(values)),
    )


def classify_omega(m: int, n: int, omega) -> OmegaClass:
    """Threshold classification of omega against C and 2C."""
    c = sharp_constant(m, n).value
    if omega <= c:
        return OmegaClass.CM_NEGATIVE_SIDE
    if omega >= 2 * c:
        return OmegaClass.CM_POSITIVE_SIDE
    return OmegaClass.NEITHER


def check_bernstein_integrand(
    m: int,
    n: int,
    omega,
    t_grid,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
    tolerance: float = 1e-10,
) -> ScanReport:
    """Scan [1 - omega / frak_y(t)] t^(m+n+1) h(t) over the t grid.

    Expected signs follow the omega classification: nonnegative at or below C,
    nonpositive at or above 2C, both signs strictly between.
    """
    check_order(m, 12)
    check_order(n, 12)
    t_grid = tuple(float(t) for t in t_grid)
    if any(t <= 0 for t in t_grid):
        raise DomainError("t grid must be positive")
    omega_v = to_mpf(omega)
    values = []
    with mp.workprec(cfg.prec_bits + GUARD_BITS):
        for t in t_grid:
            tv = to_mpf(t)
            recip = frak_y_reciprocal_substituted(m, n, tv, cfg)
            values.append(
                (1 - omega_v * recip) * tv ** (m + n + 1) * h(tv, cfg.prec_bits)
            )
    vmin, vmax = min(values), max(values)
    klass = classify_omega(m, n, omega)
    tol = to_mpf(tolerance)
    first_violation = None
    if klass is OmegaClass.CM_NEGATIVE_SIDE:
        claim = "nonnegative"
        passed = vmin >= -tol
        if not passed:
            i = values.index(vmin)
            first_violation = {"x": t_grid[i], "value": float(vmin)}
    elif klass is OmegaClass.CM_POSITIVE_SIDE:
        claim = "nonpositive"
        passed = vmax <= tol
        if not passed:
            i = values.index(vmax)
            first_violation = {"x": t_grid[i], "value": float(vmax)}
    else:
        claim = "sign-change"
        passed = vmin < -tol and vmax > tol
        if not passed:
            first_violation = {"note": "both signs not observed on this grid"}
    return ScanReport(
        claim=claim,
        grid=t_grid,
        values=tuple(float(v) for v in values),
        passed=bool(passed),
        first_violation=first_violation,
        vmin=float(vmin),
        vmax=float(vmax),
        note=f"omega={float(omega)} classified {klass.value}",
    )


def laplace_ratio_monotonicity_probe(
    numerator_kernel,
    denominator_kernel,
    x_grid,
    t_grid,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
    tolerance: float = 1e-10,
) -> RatioProbeReport:
    """Structural probe of the monotone-ratio rule for Laplace transforms.

    Records (a) the direction of A(t)/B(t) on the t grid and (b) the opposite
    direction for the ratio of transforms on the x grid; a constant ratio
    passes both under tie slack.
    """

    def kernel_ratio(t):
        tv = to_mpf(t)
        num = numerator_kernel(tv)
        den = denominator_kernel(tv)
        if den == 0:
            raise DomainError(f"denominator kernel vanished at t={t}")
        return num / den

    increasing = check_monotone(kernel_ratio, t_grid, "increasing", tolerance)
    if increasing.passed:
        hypothesis = increasing
        conclusion_direction = "decreasing"
    else:
        decreasing = check_monotone(kernel_ratio, t_grid, "decreasing", tolerance)
        hypothesis = decreasing
        conclusion_direction = "increasing"

    def transform_ratio(x):
        num = laplace_transform(numerator_kernel, x, cfg)
        den = laplace_transform(denominator_kernel, x, cfg)
        if den == 0:
            raise DomainError(f"denominator transform vanished at x={x}")
        return num / den

    conclusion = check_monotone(
        transform_ratio, x_grid, conclusion_direction, tolerance
    )
    return RatioProbeReport(hypothesis=hypothesis, conclusion=conclusion)
