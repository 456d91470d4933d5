"""Verification suites: each suite bundles the claims of one result family
into a machine-checkable battery with stated grids and tolerances, producing
per-claim pass/fail/inconclusive records and margins.

Every record is a desk-scale numerical certificate, not a proof: finite
grids, finite derivative orders, explicit tolerances.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from mpmath import mp, mpf

from . import checks, kernel, laplace, lemma_f, ratios
from .polygamma import phi_deriv, polygamma
from .precision import (
    DEFAULT_POLICY,
    PrecisionPolicy,
    DomainError,
    log_grid,
    to_mpf,
)
from .quadrature import QuadratureConfig

__all__ = ["ClaimResult", "SuiteResult", "SuiteOptions", "run_suite", "SUITE_NAMES"]

SUITE_NAMES = (
    "lemma-f",
    "kernel-h",
    "limits",
    "theorem-3",
    "theorem-4",
    "remark-5",
    "all",
)


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    anchor: str
    status: str  # "pass" | "fail" | "inconclusive"
    margin: float | None = None
    grid: str = ""
    details: str = ""


@dataclass
class SuiteResult:
    suite: str
    claims: list[ClaimResult] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def checked(self) -> int:
        return len(self.claims)

    @property
    def passes(self) -> int:
        return sum(c.status == "pass" for c in self.claims)

    @property
    def fails(self) -> int:
        return sum(c.status == "fail" for c in self.claims)

    @property
    def inconclusives(self) -> int:
        return sum(c.status == "inconclusive" for c in self.claims)

    @property
    def exit_code(self) -> int:
        if self.fails:
            return 1
        if self.inconclusives:
            return 3
        return 0

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "suite": self.suite,
            "claims_checked": self.checked,
            "passes": self.passes,
            "fails": self.fails,
            "inconclusives": self.inconclusives,
            "elapsed_s": round(self.elapsed_s, 3),
            "note": "desk-scale numerical certificate: finite grids and orders",
            "claims": [
                {
                    "id": c.claim_id,
                    "anchor": c.anchor,
                    "status": c.status,
                    "margin": c.margin,
                    "grid": c.grid,
                    "details": c.details,
                }
                for c in self.claims
            ],
        }


@dataclass(frozen=True)
class SuiteOptions:
    """Knobs shared by the suites; pairs restricts (m, n) where applicable."""

    policy: PrecisionPolicy = DEFAULT_POLICY
    quadrature: QuadratureConfig = QuadratureConfig()
    pairs: tuple[tuple[int, int], ...] | None = None
    monotone_slack: float = 1e-10
    sign_tolerance: float = 1e-10
    grid_points: int = 200


def _pairs_up_to(limit: int, options: SuiteOptions) -> list[tuple[int, int]]:
    if options.pairs is not None:
        return [tuple(sorted(p)) for p in options.pairs]
    return [(m, n) for m in range(limit + 1) for n in range(m, limit + 1)]


def _bool_claim(claim_id, anchor, ok, margin=None, grid="", details="") -> ClaimResult:
    return ClaimResult(
        claim_id=claim_id,
        anchor=anchor,
        status="pass" if ok else "fail",
        margin=None if margin is None else float(margin),
        grid=grid,
        details=details,
    )


# ---------------------------------------------------------------------------
# limits: scaled limits of phi derivatives + representation cross-validation
# ---------------------------------------------------------------------------


def _suite_limits(options: SuiteOptions) -> list[ClaimResult]:
    policy = options.policy
    out = []

    worst = 0.0
    for k in range(7):
        target = math.factorial(k)
        v = (-1) ** k * mpf("1e-4") ** (k + 1) * phi_deriv(k, 1e-4, policy)
        worst = max(worst, abs(float(v) - target) / target)
    out.append(
        _bool_claim(
            "scaled-limit-origin",
            "(-1)^k x^(k+1) phi^(k)(x) -> k! as x -> 0+, within 1% at x=1e-4, k<=6",
            worst <= 0.01,
            margin=0.01 - worst,
            grid="x=1e-4, k=0..6",
        )
    )
    worst = 0.0
    for k in range(7):
        target = math.factorial(k) / 2
        v = (-1) ** k * mpf("1e4") ** (k + 1) * phi_deriv(k, 1e4, policy)
        worst = max(worst, abs(float(v) - target) / target)
    out.append(
        _bool_claim(
            "scaled-limit-infinity",
            "(-1)^k x^(k+1) phi^(k)(x) -> k!/2 as x -> inf, within 1% at x=1e4, k<=6",
            worst <= 0.01,
            margin=0.01 - worst,
            grid="x=1e4, k=0..6",
        )
    )

    grid = log_grid(1e-2, 1e2, 20)
    ok = True
    for k in range(1, 9):
        for x in grid:
            if (-1) ** (k + 1) * polygamma(k, x, policy) <= 0:
                ok = False
    for k in range(0, 8):
        for x in grid:
            if (-1) ** k * phi_deriv(k, x, policy) <= 0:
                ok = False
    out.append(
        _bool_claim(
            "sign-patterns",
            "(-1)^(k+1) psi^(k) > 0 and (-1)^k phi^(k) > 0 on the grid",
            ok,
            grid="20-pt log grid [1e-2, 1e2], k<=8",
        )
    )

    worst = 0.0
    for k in range(1, 9):
        for x in grid:
            lhs = polygamma(k, x, policy) - polygamma(
                k, x + 1, policy
            )
            rhs = (-1) ** (k + 1) * mp.factorial(k) / to_mpf(x) ** (k + 1)
            worst = max(worst, float(abs(lhs - rhs) / abs(rhs)))
    budget = 10 * policy.target_rtol
    out.append(
        _bool_claim(
            "recurrence",
            "psi^(k)(x) - psi^(k)(x+1) = (-1)^(k+1) k!/x^(k+1) within 10x target rtol",
            worst <= budget,
            margin=budget - worst,
            grid="20-pt log grid, k=1..8",
        )
    )

    worst = 0.0
    for k in range(7):
        for x in (0.1, 0.5, 1.0, 2.0, 10.0, 50.0):
            lv = laplace.laplace_phi_deriv(k, x, options.quadrature)
            av = phi_deriv(k, x, policy)
            worst = max(worst, float(abs(lv - av) / abs(av)))
    out.append(
        _bool_claim(
            "laplace-cross-validation",
            "quadrature representation of phi^(k) matches the analytic route to 1e-7",
            worst <= 1e-7,
            margin=1e-7 - worst,
            grid="k<=6, x in {0.1,0.5,1,2,10,50}",
            details=f"worst relative deviation {worst:.3e}",
        )
    )

    fast = QuadratureConfig(
        nodes=40, subdivision="fixed", prec_bits=100, abs_tol=1e-7
    )
    worst = 0.0
    for m in range(3):
        for n in range(m, 3):
            lhs = laplace.laplace_transform(
                lambda t, m=m, n=n: laplace.convolution_kernel(m, n, t, fast), 1.0, fast
            )
            rhs = laplace.laplace_transform(
                lambda t, m=m: t**m * kernel.h(t, fast.prec_bits), 1.0, fast
            ) * laplace.laplace_transform(
                lambda t, n=n: t**n * kernel.h(t, fast.prec_bits), 1.0, fast
            )
            worst = max(worst, float(abs(lhs - rhs) / abs(rhs)))
    out.append(
        _bool_claim(
            "convolution-identity",
            "transform of the self-convolution equals the product of transforms (1e-6)",
            worst <= 1e-6,
            margin=1e-6 - worst,
            grid="(m,n) in {0,1,2}^2 at x=1",
            details=f"worst relative deviation {worst:.3e}",
        )
    )

    ok = True
    details = []
    for k in range(1, 7):
        for x in (0.5, 1.0, 2.0, 10.0):
            fd, est = checks.fd_derivative(
                lambda u, k=k: phi_deriv(k - 1, u, policy),
                x,
                1,
                prec_bits=policy.prec_bits,
            )
            an = phi_deriv(k, x, policy)
            if abs(fd - an) > max(est, abs(an) * 1e-20):
                ok = False
                details.append(f"k={k} x={x}")
    out.append(
        _bool_claim(
            "derivative-consistency",
            "phi^(k) matches a central finite difference of phi^(k-1) within its estimate",
            ok,
            grid="k=1..6, x in {0.5,1,2,10}",
            details="; ".join(details),
        )
    )
    return out


# ---------------------------------------------------------------------------
# kernel-h
# ---------------------------------------------------------------------------


def _h_bits(t: float, base: int) -> int:
    """Working bits resolving the gap between h-family values and 1, which
    shrinks like e^-t: strict-ordering claims need precision scaled with t."""
    return max(base, int(1.5 * t) + 64)


def _suite_kernel_h(options: SuiteOptions) -> list[ClaimResult]:
    bits = options.policy.prec_bits
    out = []

    grid = log_grid(1e-6, 1e4, 80)
    values = [kernel.h(t, _h_bits(t, bits)) for t in grid]
    in_range = all(mpf(1) / 2 <= v < 1 for v in values)
    increasing = all(a < b for a, b in zip(values, values[1:]))
    out.append(
        _bool_claim(
            "h-range-monotone",
            "1/2 <= h(t) < 1 and h strictly increasing on the log grid",
            in_range and increasing,
            grid="80-pt log grid [1e-6, 1e4], precision scaled with t",
        )
    )

    ok = True
    worst = 1.0
    tgrid = log_grid(1e-3, 1e3, 100)
    for s in (0.1, 0.25, 0.5, 0.75, 0.9):
        lower = 2.0 ** (s - 1)
        vals = [kernel.h_ratio(s, t, _h_bits(t, bits)) for t in tgrid]
        if not all(a < b for a, b in zip(vals, vals[1:])):
            ok = False
        if not all(lower < v < 1 for v in vals):
            ok = False
        worst = min(worst, float(min(v - lower for v in vals)))
    out.append(
        _bool_claim(
            "h-ratio-monotone-range",
            "h(st)/h(t)^s strictly increasing in t with values in (2^(s-1), 1)",
            ok,
            margin=worst,
            grid="s in {0.1,0.25,0.5,0.75,0.9}, 100-pt log grid [1e-3, 1e3]",
        )
    )

    dev_low = abs(float(kernel.h_ratio(0.3, 1e-4, bits)) - 2 ** (0.3 - 1))
    dev_high = abs(float(kernel.h_ratio(0.5, 1e3, _h_bits(1e3, bits))) - 1.0)
    out.append(
        _bool_claim(
            "h-ratio-endpoints",
            "ratio endpoint values: 2^(s-1) as t->0+ (1e-6), 1 as t->inf (1e-3)",
            dev_low <= 1e-6 and dev_high <= 1e-3,
            margin=min(1e-6 - dev_low, 1e-3 - dev_high),
            grid="t=1e-4 (s=0.3); t=1e3 (s=0.5)",
        )
    )

    ok = True
    for s in (0.1, 0.25, 0.5):
        vals = [kernel.h_ratio_product(s, t, _h_bits(t, bits)) for t in tgrid]
        if not all(a < b for a, b in zip(vals, vals[1:])):
            ok = False
        if not all(mpf(1) / 2 < v < 1 for v in vals):
            ok = False
    symmetric = kernel.h_ratio_product(0.3, 7.7, bits) == kernel.h_ratio_product(
        0.7, 7.7, bits
    )
    out.append(
        _bool_claim(
            "h-ratio-product",
            "product ratio increasing with range in (1/2, 1); exactly symmetric in s <-> 1-s",
            ok and symmetric,
            grid="s in {0.1,0.25,0.5}, same log grid",
        )
    )

    worst = 0.0
    for s in (0.25, 0.5, 0.75):
        rep = kernel.series_coefficient_check(s)
        worst = max(worst, rep.max_residual)
    out.append(
        _bool_claim(
            "series-coefficients",
            "derivative-numerator Taylor coefficients (orders 7-11) match closed forms to 1e-8",
            worst <= 1e-8,
            margin=1e-8 - worst,
            grid="s in {0.25, 0.5, 0.75}",
            details=f"worst residual {worst:.3e}",
        )
    )

    worst = 0.0
    coeffs = kernel.maclaurin_coefficients(12)
    for t in [i * 1e-3 for i in range(-10, 11) if i]:
        with mp.workprec(bits):
            tv = to_mpf(t)
            em = mp.expm1(tv)
            direct = mp.exp(tv) * (em - tv) / (em * em)
            poly = sum(to_mpf(c.numerator) / c.denominator * tv**j for j, c in enumerate(coeffs))
            worst = max(worst, float(abs(direct - poly)))
    out.append(
        _bool_claim(
            "taylor-consistency",
            "direct form of h matches its degree-11 Maclaurin polynomial to 1e-12 for |t| <= 1e-2",
            worst <= 1e-12,
            margin=1e-12 - worst,
            grid="21 points, |t| <= 1e-2",
        )
    )
    return out


# ---------------------------------------------------------------------------
# theorem-3: decreasing ratio and sharp range
# ---------------------------------------------------------------------------


def _suite_theorem_3(options: SuiteOptions) -> list[ClaimResult]:
    policy = options.policy
    out = []
    grid = log_grid(1e-4, 1e4, options.grid_points)
    pairs = _pairs_up_to(4, options)

    all_monotone = True
    all_range = True
    all_sharp = True
    worst_sharp = 0.0
    for m, n in pairs:
        c = ratios.sharp_constant(m, n).value
        values = [ratios.Y(m, n, x, policy) for x in grid]
        for a, b in zip(values, values[1:]):
            if b - a > options.monotone_slack * max(abs(a), abs(b)):
                all_monotone = False
        if not all(-2 * c < v < -c for v in values):
            all_range = False
        dev0 = float(abs(values[0] + c)) / c
        dev1 = float(abs(values[-1] + 2 * c)) / c
        worst_sharp = max(worst_sharp, dev0, dev1)
        if dev0 > 0.01 or dev1 > 0.01:
            all_sharp = False
    gdesc = f"{options.grid_points}-pt log grid [1e-4, 1e4], pairs m,n<=4"
    out.append(
        _bool_claim(
            "Y-decreasing",
            "Y(m,n,.) strictly decreasing pairwise (relative slack 1e-10)",
            all_monotone,
            grid=gdesc,
        )
    )
    out.append(
        _bool_claim(
            "Y-range",
            "-2C < Y(m,n,x) < -C with C = (m+n+1)!/(m! n!) at every grid point",
            all_range,
            grid=gdesc,
        )
    )
    out.append(
        _bool_claim(
            "Y-endpoint-sharpness",
            "Y within 1% of -C at x=1e-4 and of -2C at x=1e4",
            all_sharp,
            margin=0.01 - worst_sharp,
            grid=gdesc,
        )
    )

    ok = True
    for k in range(5):
        for m in range(k + 1):
            values = [ratios.calJ(k, m, x, policy) for x in grid]
            for a, b in zip(values, values[1:]):
                if b - a > options.monotone_slack * max(abs(a), abs(b)):
                    ok = False
    out.append(
        _bool_claim(
            "calJ-decreasing",
            "calJ(k,m,.) strictly decreasing for k<=4, m<=k (same slack)",
            ok,
            grid=f"{options.grid_points}-pt log grid, k<=4",
        )
    )

    tgrid = log_grid(1e-2, 1e2, 21)
    fast = QuadratureConfig(nodes=32, subdivision="fixed", prec_bits=120, abs_tol=1e-6)
    ok = True
    for m, n in pairs:
        vals = [laplace.frak_y(m, n, t, fast) for t in tgrid]
        if not all(a > b for a, b in zip(vals, vals[1:])):
            ok = False
    out.append(
        _bool_claim(
            "frak-y-decreasing",
            "t-domain ratio frak_y(m,n,.) strictly decreasing",
            ok,
            grid="21-pt log grid [1e-2, 1e2], pairs m,n<=4",
        )
    )

    ok = True
    worst = 1.0
    for m, n in [(p, q) for p, q in pairs if p <= 2 and q <= 2]:
        c = ratios.sharp_constant(m, n).value
        lo, hi = 1 / (2 * mpf(c)), 1 / mpf(c)
        for t in log_grid(1e-3, 1e3, 25):
            r = laplace.frak_y_reciprocal_substituted(m, n, t, options.quadrature)
            if not lo < r < hi:
                ok = False
        r0 = laplace.frak_y_reciprocal_substituted(m, n, 1e-3, options.quadrature)
        r1 = laplace.frak_y_reciprocal_substituted(m, n, 1e3, options.quadrature)
        dev = max(float(abs(r0 - lo) / lo), float(abs(r1 - hi) / hi))
        worst = min(worst, 0.01 - dev)
        if dev > 0.01:
            ok = False
    out.append(
        _bool_claim(
            "frak-y-sharp-range",
            "(1/2) m!n!/(m+n+1)! < 1/frak_y < m!n!/(m+n+1)!, endpoints within 1% at t=1e-3/1e3",
            ok,
            margin=worst,
            grid="25-pt log grid [1e-3, 1e3], pairs m,n<=2",
        )
    )

    probe = checks.laplace_ratio_monotonicity_probe(
        lambda t: t * kernel.h(t, fast.prec_bits),
        lambda t: laplace.convolution_kernel(0, 0, t, fast),
        x_grid=log_grid(0.5, 2.0, 5),
        t_grid=log_grid(1e-1, 1e2, 9),
        cfg=fast,
    )
    out.append(
        _bool_claim(
            "monotone-ratio-probe",
            "kernel ratio monotone in t implies the opposite monotonicity for the transform ratio",
            probe.consistent,
            grid="9-pt t grid, 5-pt x grid, (m,n)=(0,0)",
            details=f"hypothesis {probe.hypothesis.claim}, conclusion {probe.conclusion.claim}",
        )
    )
    return out


# ---------------------------------------------------------------------------
# theorem-4: complete-monotonicity thresholds
# ---------------------------------------------------------------------------


def _suite_theorem_4(options: SuiteOptions) -> list[ClaimResult]:
    policy = options.policy
    cfg = options.quadrature
    out = []
    tol = options.sign_tolerance
    tgrid = log_grid(1e-3, 1e3, 41)
    pairs = [(m, n) for m, n in _pairs_up_to(3, options)]
    core_pairs = [(m, n) for m, n in pairs if m <= 2 and n <= 2]

    def integrand_report(m, n, omega):
        return checks.check_bernstein_integrand(m, n, omega, tgrid, cfg, tol)

    ok = True
    for m, n in core_pairs:
        c = ratios.sharp_constant(m, n).value
        if not integrand_report(m, n, c).passed:
            ok = False
    out.append(
        _bool_claim(
            "integrand-nonnegative-at-C",
            "[1 - C/frak_y] t^(m+n+1) h(t) >= -1e-10 on t in [1e-3, 1e3]",
            ok,
            grid="41-pt log t grid, (m,n) in {0,1,2}^2",
        )
    )
    ok = True
    for m, n in core_pairs:
        c = ratios.sharp_constant(m, n).value
        if not integrand_report(m, n, 2 * c).passed:
            ok = False
    out.append(
        _bool_claim(
            "integrand-nonpositive-at-2C",
            "[1 - 2C/frak_y] t^(m+n+1) h(t) <= 1e-10 on the same grid",
            ok,
            grid="41-pt log t grid, (m,n) in {0,1,2}^2",
        )
    )
    ok = True
    for m, n in core_pairs:
        c = ratios.sharp_constant(m, n).value
        if not integrand_report(m, n, 1.5 * c).passed:
            ok = False
    out.append(
        _bool_claim(
            "integrand-sign-change-at-1.5C",
            "both signs present strictly between the thresholds (omega = 1.5C)",
            ok,
            grid="41-pt log t grid, (m,n) in {0,1,2}^2",
        )
    )

    xgrid = log_grid(1e-2, 1e2, 12)
    ok = True
    inconclusive = False
    for m, n in core_pairs:
        c = ratios.sharp_constant(m, n).value
        sign = (-1) ** (m + n + 1)
        rep = checks.check_sign_pattern(
            ratios.caly_handle(m, n, c, sign=sign, policy=policy),
            6,
            xgrid,
            tolerance=1e-20,
        )
        if rep.inconclusive:
            inconclusive = True
        elif not rep.passed:
            ok = False
    out.append(
        ClaimResult(
            claim_id="sign-pattern-at-C",
            anchor="(-1)^(m+n+1) [phi^(m+n+1) + C phi^(m) phi^(n)] passes sign checks to order 6",
            status="fail" if not ok else ("inconclusive" if inconclusive else "pass"),
            grid="12-pt log x grid [1e-2, 1e2], analytic derivatives",
        )
    )
    ok = True
    inconclusive = False
    for m, n in core_pairs:
        c = ratios.sharp_constant(m, n).value
        sign = (-1) ** (m + n)
        rep = checks.check_sign_pattern(
            ratios.caly_handle(m, n, 2 * c, sign=sign, policy=policy),
            6,
            xgrid,
            tolerance=1e-20,
        )
        if rep.inconclusive:
            inconclusive = True
        elif not rep.passed:
            ok = False
    out.append(
        ClaimResult(
            claim_id="sign-pattern-at-2C",
            anchor="(-1)^(m+n) [phi^(m+n+1) + 2C phi^(m) phi^(n)] passes sign checks to order 6",
            status="fail" if not ok else ("inconclusive" if inconclusive else "pass"),
            grid="same grid, analytic derivatives",
        )
    )

    ok = True
    for m, n in pairs:
        c = ratios.sharp_constant(m, n).value
        above = integrand_report(m, n, c * 1.01)
        below = integrand_report(m, n, 2 * c * 0.99)
        # just above C: a negative region must appear at large t; just below
        # 2C: a positive region at small t.
        if not (above.vmin < -tol and below.vmax > tol):
            ok = False
    out.append(
        _bool_claim(
            "boundary-sharpness",
            "omega = 1.01C shows a negative region; omega = 1.98C shows a positive region",
            ok,
            grid="41-pt log t grid, pairs m,n<=3",
        )
    )

    ok = True
    for m, n in core_pairs:
        c = ratios.sharp_constant(m, n).value
        sign = (-1) ** (m + n + 1)
        vals = [
            sign * ratios.calY(m, n, 1.01 * c, x, policy)
            for x in log_grid(1e-3, 1.0, 20)
        ]
        if min(vals) >= 0:
            ok = False
    out.append(
        _bool_claim(
            "zeroth-order-necessity",
            "omega slightly above C already breaks nonnegativity near the origin",
            ok,
            grid="20-pt log x grid [1e-3, 1]",
        )
    )

    ok = (
        checks.classify_omega(0, 0, 1) is checks.OmegaClass.CM_NEGATIVE_SIDE
        and checks.classify_omega(0, 0, 2) is checks.OmegaClass.CM_POSITIVE_SIDE
        and checks.classify_omega(1, 1, 7) is checks.OmegaClass.NEITHER
    )
    out.append(
        _bool_claim(
            "omega-classification",
            "classification thresholds agree with C and 2C at reference points",
            ok,
            grid="(0,0,1), (0,0,2), (1,1,7)",
        )
    )
    return out


# ---------------------------------------------------------------------------
# lemma-f
# ---------------------------------------------------------------------------


def _suite_lemma_f(options: SuiteOptions) -> list[ClaimResult]:
    bits = options.policy.prec_bits
    out = []

    ok = True
    worst = math.inf
    for m in range(3, 32):
        for k in range(2 * m + 1, 65):
            chk = lemma_f.F_sequence_positive(m, k, bits)
            ok = ok and chk.positive
            worst = min(worst, chk.margin)
    out.append(
        _bool_claim(
            "sequence-positive",
            "F(m,k) > 0 for all integers 6 <= 2m < k <= 64",
            ok,
            margin=worst,
            grid="870 integer pairs",
        )
    )

    ok = True
    worst = math.inf
    threshold = 2 + 1 / math.log(2)
    for i in range(100):
        x = threshold + 1e-4 + (30 - threshold) * i / 99
        for j in range(100):
            y = 2 * x * (1 + 1e-3) + 50 * j / 99
            v = lemma_f.F(x, y, bits)
            worst = min(worst, float(v))
            if v <= 0:
                ok = False
    out.append(
        _bool_claim(
            "grid-positive",
            "F > 0 on a 100x100 grid with y > 2x > 6.8854",
            ok,
            margin=worst,
            grid="x in (3.4428, 30), y in (2x, 2x+50)",
        )
    )

    dev = abs(float(lemma_f.F(3, 7, bits) - mpf(1) / 6))
    out.append(
        _bool_claim(
            "f37-value",
            "F(3,7) = 1/6 to 1e-12",
            dev <= 1e-12,
            margin=1e-12 - dev,
        )
    )

    worst = max(abs(float(lemma_f.F(2, y, bits))) for y in (5, 8, 20))
    out.append(
        _bool_claim(
            "f2-vanishes",
            "F(2,y) = 0 within 1e-10 absolute for y in {5, 8, 20}",
            worst <= 1e-10,
            margin=1e-10 - worst,
        )
    )

    ok = True
    worst = 0.0
    for i in range(100):
        x = 0.05 + 10 * i / 99
        for j in range(100):
            y = 2 * x * (1 + 1e-3) + 30 * j / 99
            a = lemma_f.F(x, y, bits)
            b = lemma_f.F_rearranged(x, y, bits)
            dev = float(abs(a - b))
            lim = max(1e-12, 1e-12 * abs(float(a)))
            worst = max(worst, dev)
            if dev > lim:
                ok = False
    out.append(
        _bool_claim(
            "form-identity",
            "three-term and rearranged forms agree to 1e-12 (absolute near zero)",
            ok,
            margin=worst,
            grid="100x100 grid in the domain",
            details=f"worst |difference| {worst:.3e}",
        )
    )

    ok = True
    for x in (threshold + 1e-3, 3.5, 4.0, 10.0):
        for t in log_grid(1e-4, 1e2, 25):
            if not lemma_f.key_inequality(t, x):
                ok = False
    for m in range(4, 32):
        for k in range(2 * m + 1, 65):
            d = k - 2 * m
            if not (d / (2.0**d - 1) < m - 2):
                ok = False
    out.append(
        _bool_claim(
            "proof-chain",
            "2^t > 1 + t/(x-2) whenever x > 2 + 1/ln 2; (k-2m)/(2^(k-2m)-1) < m-2 for m >= 4",
            ok,
            grid="x samples + integer pairs",
        )
    )

    with mp.workprec(bits):
        tgrid = log_grid(1e-6, 1e2, 40)
        vals = [to_mpf(t) / (mpf(2) ** to_mpf(t) - 1) for t in tgrid]
        decreasing = all(a > b for a, b in zip(vals, vals[1:]))
        sup_dev = float(abs(vals[0] - 1 / mp.log(2)))
    out.append(
        _bool_claim(
            "t-over-power-decreasing",
            "t/(2^t - 1) strictly decreasing with supremum 1/ln 2 as t -> 0+",
            decreasing and sup_dev <= 1e-4,
            margin=1e-4 - sup_dev,
            grid="40-pt log grid [1e-6, 1e2]",
        )
    )

    rm = lemma_f.sign_region_map((2.0 + 1e-9, 10.0), (10.0, 20.0), 50, bits)
    ok_plus = all(
        s == "+"
        for x, y, s in rm.rows()
        if 2 < x < y / 2
    )
    rm = lemma_f.sign_region_map((1e-6, 2.0), (4.0 + 1e-9, 40.0), 50, bits)
    ok_minus = all(s == "-" for x, y, s in rm.rows() if x < 2 and y > 4)
    rm = lemma_f.sign_region_map((2.0, 2.0), (10.0, 20.0), 10, bits)
    ok_zero = all(s == "0" for _, _, s in rm.rows())
    out.append(
        _bool_claim(
            "region-guess-consistency",
            "scan data matches the guessed sign regions: positive band 2<x<y/2, negative band x<2, zero line x=2",
            ok_plus and ok_minus and ok_zero,
            grid="50x50 scans + 10-pt line",
            details="exploratory scan; consistency recorded, no theorem asserted",
        )
    )
    return out


# ---------------------------------------------------------------------------
# remark-5
# ---------------------------------------------------------------------------


def _suite_remark_5(options: SuiteOptions) -> list[ClaimResult]:
    policy = options.policy
    out = []

    grid = log_grid(1e-2, 1e2, 25)
    ok = True
    for m in range(4):
        for n in range(m, 4):
            for x in grid:
                if ratios.remark_expression(m, n, x, policy) <= 0:
                    ok = False
    out.append(
        _bool_claim(
            "remark-positive",
            "phi^(m+n+1) [phi^(m) phi^(n)]' - phi^(m+n+2) phi^(m) phi^(n) > 0 on the grid",
            ok,
            grid="25-pt log grid [1e-2, 1e2], m,n<=3",
        )
    )

    worst = 0.0
    for m, n, x in ((1, 0, 2.0), (0, 0, 1.0), (2, 1, 0.5)):
        expr = ratios.remark_expression(m, n, x, policy)
        yp, est = checks.fd_derivative(
            lambda u: ratios.Y(m, n, u, policy), x, 1, prec_bits=policy.prec_bits
        )
        prod = phi_deriv(m, x, policy) * phi_deriv(n, x, policy)
        dev = float(abs(expr + yp * prod**2) / abs(expr))
        worst = max(worst, dev)
    out.append(
        _bool_claim(
            "remark-quotient-identity",
            "expression equals -Y'(m,n,x) [phi^(m) phi^(n)]^2 (1e-6, derivative by FD)",
            worst <= 1e-6,
            margin=1e-6 - worst,
            grid="(1,0,2), (0,0,1), (2,1,0.5)",
        )
    )

    rep = checks.check_sign_pattern(
        lambda x: ratios.remark_expression(0, 0, x, policy),
        3,
        log_grid(0.5, 5.0, 8),
        tolerance=0.0,
        prec_bits=policy.prec_bits,
    )
    observed = ",".join(v.status for v in rep.verdicts)
    out.append(
        ClaimResult(
            claim_id="remark-cm-probe",
            anchor="probe of the guessed complete monotonicity (orders 0-3; recorded, not asserted)",
            status="pass",
            grid="8-pt log grid [0.5, 5]",
            details=f"observed verdicts: {observed}",
        )
    )
    return out


_SUITES = {
    "limits": _suite_limits,
    "kernel-h": _suite_kernel_h,
    "theorem-3": _suite_theorem_3,
    "theorem-4": _suite_theorem_4,
    "lemma-f": _suite_lemma_f,
    "remark-5": _suite_remark_5,
}


def run_suite(name: str, options: SuiteOptions = SuiteOptions()) -> SuiteResult:
    """Run one suite (or 'all') and return its result record."""
    if name not in SUITE_NAMES:
        raise DomainError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
    t0 = time.monotonic()
    result = SuiteResult(suite=name)
    names = [n for n in SUITE_NAMES if n != "all"] if name == "all" else [name]
    for n in names:
        claims = _SUITES[n](options)
        if name == "all":
            claims = [
                ClaimResult(
                    claim_id=f"{n}:{c.claim_id}",
                    anchor=c.anchor,
                    status=c.status,
                    margin=c.margin,
                    grid=c.grid,
                    details=c.details,
                )
                for c in claims
            ]
        result.claims.extend(claims)
    result.elapsed_s = time.monotonic() - t0
    return result
