"""The Bernstein kernel h(t) of the Laplace representation of x*psi'(x) - 1,
its ratio functions, and the Taylor-coefficient check for the ratio's
derivative numerator.

h(t) = e^t (e^t - 1 - t) / (e^t - 1)^2 with h(0) = 1/2, increasing from 1/2
to 1 on [0, inf).  Three evaluation branches keep it stable: a Maclaurin
polynomial near 0 (cancellation), the direct form in the midrange, and the
e^{-t} form for large t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpf

from .precision import AccuracyError, DomainError, GUARD_BITS, DEFAULT_PREC_BITS, to_mpf

__all__ = [
    "h",
    "h_ratio",
    "h_ratio_product",
    "maclaurin_coefficients",
    "series_coefficient_check",
    "CoefficientCheck",
    "CoefficientReport",
]

SERIES_CUT = 0.25
EXP_FORM_CUT = 30.0


@lru_cache(maxsize=None)
def maclaurin_coefficients(n_terms: int) -> tuple[Fraction, ...]:
    """First n_terms Maclaurin coefficients of h, exact rationals.

    Generated by formal division of e^t(e^t-1-t) = sum (2^j-1-j) t^j/j! by
    (e^t-1)^2 = sum (2^j-2) t^j/j!, both starting at t^2.
    """
    num = [Fraction(2**j - 1 - j, math.factorial(j)) for j in range(2, n_terms + 2)]
    den = [Fraction(2**j - 2, math.factorial(j)) for j in range(2, n_terms + 2)]
    coeffs: list[Fraction] = []
    for j in range(n_terms):
        acc = num[j]
        for i in range(j):
            acc -= coeffs[i] * den[j - i]
        coeffs.append(acc / den[0])
    return tuple(coeffs)


def _series_terms_for(prec_bits: int) -> int:
    # Terms decay by ~(SERIES_CUT / 2pi) per order inside the branch cut.
    per_term = math.log2(2 * math.pi / SERIES_CUT)
    return int(prec_bits / per_term) + 8


def h(t, prec_bits: int = DEFAULT_PREC_BITS):
    """Kernel value h(t); total on the real line, in [1/2, 1) for t >= 0."""
    with mp.workprec(prec_bits + GUARD_BITS):
        tv = to_mpf(t)
    if not mp.isfinite(tv):
        raise DomainError(f"t must be finite, got {t!r}")
    return _h_cached(tv, prec_bits)


@lru_cache(maxsize=400_000)
def _h_cached(tv, prec_bits: int):
    with mp.workprec(prec_bits + GUARD_BITS):
        if tv == 0:
            return mpf(1) / 2
        if abs(tv) <= SERIES_CUT:
            coeffs = maclaurin_coefficients(_series_terms_for(prec_bits + GUARD_BITS))
            acc = mpf(0)
            for c in reversed(coeffs):
                acc = acc * tv + mpf(c.numerator) / c.denominator
            return acc
        if tv > EXP_FORM_CUT:
            u = mp.exp(-tv)
            return (1 - (1 + tv) * u) / (1 - u) ** 2
        em = mp.expm1(tv)
        return mp.exp(tv) * (em - tv) / (em * em)


def h_ratio(s, t, prec_bits: int = DEFAULT_PREC_BITS):
    """h(s*t) / h(t)^s for fixed s in (0, 1), t > 0.

    Increasing in t, with range (2^(s-1), 1).
    """
    s = float(s)
    if not 0 < s < 1:
        raise DomainError(f"s must lie in (0, 1), got {s}")
    with mp.workprec(prec_bits + GUARD_BITS):
        tv = to_mpf(t)
        if tv <= 0:
            raise DomainError(f"t must be > 0, got {t!r}")
        sv = to_mpf(s)
        return h(sv * tv, prec_bits) / h(tv, prec_bits) ** sv


def _decimal_ratio(s) -> Fraction:
    """Read s as the decimal number it prints as, so that 0.3 and 0.7 are
    exact complements and the s <-> 1-s symmetry below is bitwise exact."""
    if isinstance(s, Fraction):
        return s
    return Fraction(str(float(s)))


def h_ratio_product(s, t, prec_bits: int = DEFAULT_PREC_BITS):
    """h(s*t) * h((1-s)*t) / h(t); symmetric under s <-> 1-s.

    Increasing in t for fixed s in (0, 1), with range (1/2, 1).
    """
    sf = _decimal_ratio(s)
    if not 0 < sf < 1:
        raise DomainError(f"s must lie in (0, 1), got {s}")
    lo_frac = min(sf, 1 - sf)
    with mp.workprec(prec_bits + GUARD_BITS):
        tv = to_mpf(t)
        if tv <= 0:
            raise DomainError(f"t must be > 0, got {t!r}")
        lo = mpf(lo_frac.numerator) / lo_frac.denominator
        hi = 1 - lo
        return h(lo * tv, prec_bits) * h(hi * tv, prec_bits) / h(tv, prec_bits)


# ---------------------------------------------------------------------------
# Taylor-coefficient check for the derivative numerator of h(st)/h^s(t).
#
# d/dt [h(st)/h^s(t)] has numerator -s e^{(1+s)t} B(t,s) with B a combination
# of polynomial-times-exponential terms.  B vanishes to order 6 in t, and
# -B/s^3 has the closed-form leading coefficients checked below.
# ---------------------------------------------------------------------------

# (polynomial in t as {degree: coeff(s)}, exponential rate a(s))
_BRACKET_TERMS = (
    ({1: lambda s: 1, 0: lambda s: -2}, lambda s: 1 + 2 * s),
    ({1: lambda s: 1, 0: lambda s: 2}, lambda s: 2 * s),
    ({1: lambda s: -s, 0: lambda s: 2}, lambda s: 2 + s),
    ({1: lambda s: 4 * (s - 1)}, lambda s: 1 + s),
    ({2: lambda s: -2 * s, 1: lambda s: -3 * s, 0: lambda s: -2}, lambda s: s),
    ({1: lambda s: -s, 0: lambda s: -2}, lambda s: 2 + 0 * s),
    ({2: lambda s: 2 * s, 1: lambda s: 3 + 0 * s, 0: lambda s: 2 + 0 * s}, lambda s: 1 + 0 * s),
    ({1: lambda s: s - 1}, lambda s: 0 * s),
)


def _reference_coefficient(order: int, s):
    if order == 7:
        return (1 - s) / 36
    if order == 8:
        return (1 - s**2) / 45
    if order == 9:
        return (22 * (1 - s**3) + 15 * (s - s**2)) / 2160
    if order == 10:
        return (52 * (1 - s**4) + 63 * (s - s**3)) / 15120
    if order == 11:
        return (285 * (1 - s**5) + 470 * (s - s**4) + 238 * (s**2 - s**3)) / 302400
    raise DomainError(f"no printed closed form for order {order}")


def _bracket_coefficient(order: int, s):
    """[t^order] of B(t, s), summed term by term; also returns the largest
    contribution magnitude so cancellation can be quantified."""
    total = mpf(0)
    largest = mpf(0)
    for poly, rate in _BRACKET_TERMS:
        a = rate(s)
        for deg, coeff_fn in poly.items():
            j = order - deg
            if j < 0:
                continue
            contrib = coeff_fn(s) * a**j / mp.factorial(j)
            total += contrib
            largest = max(largest, abs(contrib))
    return total, largest


@dataclass(frozen=True)
class CoefficientCheck:
    order: int
    extracted: float
    reference: float
    residual: float          # relative where the reference allows, else absolute
    cancellation_digits: float


@dataclass(frozen=True)
class CoefficientReport:
    s: float
    checks: tuple[CoefficientCheck, ...]
    achieved_accuracy: float

    @property
    def max_residual(self) -> float:
        return max(c.residual for c in self.checks)


def series_coefficient_check(
    s, orders=(7, 8, 9, 10, 11), dps: int = 60, required: float = 1e-8
) -> CoefficientReport:
    """Extract Taylor coefficients (orders 7..11) of the derivative-numerator
    bracket and compare with the printed closed forms.

    Raises AccuracyError if cancellation eats too much of the working
    precision to certify `required`; the report carries the achieved accuracy.
    """
    s = float(s)
    if not 0 < s < 1:
        raise DomainError(f"s must lie in (0, 1), got {s}")
    for order in orders:
        if order not in (7, 8, 9, 10, 11):
            raise DomainError(f"order {order} outside the printed range 7..11")
    checks = []
    worst_cancel = 0.0
    with mp.workdps(dps):
        sv = to_mpf(s)
        # orders 0..6 must vanish relative to their own term scale
        for order in range(7):
            total, largest = _bracket_coefficient(order, sv)
            if largest > 0 and abs(total) / largest > mpf(10) ** (-(dps - 8)):
                raise AccuracyError(
                    f"bracket coefficient at order {order} did not cancel "
                    f"(|sum|/|max term| = {float(abs(total) / largest):.3e})"
                )
        for order in orders:
            total, largest = _bracket_coefficient(order, sv)
            extracted = -total / sv**3
            reference = _reference_coefficient(order, sv)
            if abs(reference) > 0:
                residual = abs(extracted - reference) / abs(reference)
            else:
                residual = abs(extracted - reference)
            cancel = float(mp.log10(largest / abs(total))) if total != 0 else dps
            worst_cancel = max(worst_cancel, cancel)
            checks.append(
                CoefficientCheck(
                    order=order,
                    extracted=float(extracted),
                    reference=float(reference),
                    residual=float(residual),
                    cancellation_digits=cancel,
                )
            )
    achieved = 10.0 ** (-(dps - worst_cancel - 2))
    if achieved > required:
        raise AccuracyError(
            f"coefficient extraction conditioned to ~{achieved:.2e} at "
            f"{dps} digits; cannot certify {required:.2e}",
            achieved=achieved,
        )
    return CoefficientReport(s=s, checks=tuple(checks), achieved_accuracy=achieved)
