"""Quadrature realizations of the Laplace representation
phi^(k)(x) = (-1)^k * integral_0^inf t^k h(t) e^{-xt} dt,
the self-convolution kernel, the t-domain ratio frak_y, and the Beta-integral
weight.  These provide the oracle route against which the analytic
(polygamma-based) route is cross-validated.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpf

from .kernel import h
from .precision import (
    DEFAULT_MAX_ORDER,
    DomainError,
    GUARD_BITS,
    as_abscissa,
    check_order,
    to_mpf,
)
from .quadrature import (
    DEFAULT_QUADRATURE,
    QuadratureConfig,
    integrate_segments,
    laguerre_sum,
)

__all__ = [
    "laplace_transform",
    "laplace_phi_deriv",
    "convolution_kernel",
    "frak_y",
    "frak_y_reciprocal_substituted",
    "beta_weight",
    "beta_weight_quad",
]


def _geometric_breakpoints(upper):
    pts = [mpf(0)]
    v = mpf(1)
    while v < upper:
        pts.append(v)
        v *= 2
    pts.append(to_mpf(upper))
    if pts[-1] <= pts[-2]:
        pts.pop(-2)
    return pts


def _truncation_for(x, cfg: QuadratureConfig):
    lower = 50.0 / x
    if cfg.truncation is None:
        return mpf(max(1.0, lower))
    if cfg.truncation < lower:
        raise DomainError(
            f"truncation {cfg.truncation} below required {lower:.6g} (= 50/x)"
        )
    return to_mpf(cfg.truncation)


def laplace_transform(kernel, x, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """integral_0^inf kernel(t) e^{-xt} dt, split at the truncation point with
    a Laguerre rule on the exponentially weighted tail."""
    xf = as_abscissa(x)
    with mp.workprec(cfg.prec_bits + GUARD_BITS):
        xv = to_mpf(xf)
        T = _truncation_for(xf, cfg)
        finite, _ = integrate_segments(
            lambda t: kernel(t) * mp.exp(-xv * t),
            _geometric_breakpoints(T),
            cfg,
        )
        tail = laguerre_sum(lambda u: kernel(T + u / xv), cfg) * mp.exp(-xv * T) / xv
        return finite + tail


def laplace_phi_deriv(
    k: int, x, cfg: QuadratureConfig = DEFAULT_QUADRATURE, max_order: int = DEFAULT_MAX_ORDER
):
    """phi^(k)(x) via the integral representation; sign (-1)^k."""
    check_order(k, max_order)
    with mp.workprec(cfg.prec_bits + GUARD_BITS):
        value = laplace_transform(
            lambda t: t**k * h(t, cfg.prec_bits), x, cfg
        )
        return (-1) ** k * value


def convolution_kernel(
    m: int, n: int, t, cfg: QuadratureConfig = DEFAULT_QUADRATURE
):
    """integral_0^t u^m (t-u)^n h(u) h(t-u) du, evaluated after the symmetric
    substitution u = (1+v)t/2; positive, symmetric in (m, n)."""
    check_order(m, DEFAULT_MAX_ORDER)
    check_order(n, DEFAULT_MAX_ORDER)
    if m > n:
        m, n = n, m  # canonical order: symmetry holds exactly
    with mp.workprec(cfg.prec_bits + GUARD_BITS):
        tv = to_mpf(t)
        if tv <= 0:
            raise DomainError(f"t must be > 0, got {t!r}")
        bits = cfg.prec_bits

        def integrand(v):
            return (
                (1 + v) ** m
                * (1 - v) ** n
                * h((1 + v) / 2 * tv, bits)
                * h((1 - v) / 2 * tv, bits)
            )

        value, _ = integrate_segments(integrand, _v_breakpoints(tv), cfg)
        return (tv / 2) ** (m + n + 1) * value


def _v_breakpoints(t):
    """Panels on [-1, 1] with geometric refinement toward the endpoints, where
    the integrand develops O(1/t)-wide layers for large t."""
    pts = {mpf(-1), mpf(0), mpf(1)}
    d = mpf(4) / t
    while d < 1:
        pts.add(-1 + d)
        pts.add(1 - d)
        d *= 2
    return sorted(pts)


def frak_y(m: int, n: int, t, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """t^(m+n+1) h(t) / convolution_kernel(m, n, t); positive and decreasing."""
    with mp.workprec(cfg.prec_bits + GUARD_BITS):
        tv = to_mpf(t)
        if tv <= 0:
            raise DomainError(f"t must be > 0, got {t!r}")
        return tv ** (m + n + 1) * h(tv, cfg.prec_bits) / convolution_kernel(m, n, tv, cfg)


@lru_cache(maxsize=100_000)
def _recip_cached(m: int, n: int, tv, cfg: QuadratureConfig):
    with mp.workprec(cfg.prec_bits + GUARD_BITS):
        bits = cfg.prec_bits
        ht = h(tv, bits)

        def integrand(v):
            return (
                (1 + v) ** m
                * (1 - v) ** n
                * h((1 + v) / 2 * tv, bits)
                * h((1 - v) / 2 * tv, bits)
                / ht
            )

        value, _ = integrate_segments(integrand, _v_breakpoints(tv), cfg)
        return value / mpf(2) ** (m + n + 1)


def frak_y_reciprocal_substituted(
    m: int, n: int, t, cfg: QuadratureConfig = DEFAULT_QUADRATURE
):
    """1/frak_y via the v-integral of the kernel-ratio product over [-1, 1].

    Range ((1/2) m! n! / (m+n+1)!, m! n! / (m+n+1)!), increasing in t.
    """
    check_order(m, DEFAULT_MAX_ORDER)
    check_order(n, DEFAULT_MAX_ORDER)
    if m > n:
        m, n = n, m
    tv = to_mpf(t)
    if tv <= 0:
        raise DomainError(f"t must be > 0, got {t!r}")
    return _recip_cached(m, n, tv, cfg)


def beta_weight(m: int, n: int, max_order: int = 5 * DEFAULT_MAX_ORDER):
    """integral_-1^1 (1+v)^m (1-v)^n dv by the closed form
    2^(m+n+1) m! n! / (m+n+1)!, as an exact rational rendered at working
    precision."""
    check_order(m, max_order)
    check_order(n, max_order)
    exact = Fraction(
        2 ** (m + n + 1) * math.factorial(m) * math.factorial(n),
        math.factorial(m + n + 1),
    )
    return mpf(exact.numerator) / exact.denominator


def beta_weight_quad(m: int, n: int, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """Same Beta-integral weight, by Legendre quadrature (exact for these
    polynomial integrands up to the rule's degree)."""
    check_order(m, 5 * DEFAULT_MAX_ORDER)
    check_order(n, 5 * DEFAULT_MAX_ORDER)
    with mp.workprec(cfg.prec_bits + GUARD_BITS):
        value, _ = integrate_segments(
            lambda v: (1 + v) ** m * (1 - v) ** n, [mpf(-1), mpf(0), mpf(1)], cfg
        )
        return value
