"""Polygamma derivatives and the function x*psi'(x) - 1 with its derivatives.

Evaluation strategy: shift the argument upward by the polygamma recurrence
until it clears a precision-dependent threshold, then sum the large-argument
(Bernoulli-coefficient) expansion.  Everything runs at the policy's working
precision, so downstream ratio/difference combinations up to twelfth order
keep comfortable headroom.
"""

from __future__ import annotations

import math
from functools import lru_cache

from mpmath import mp, mpf

from .precision import (
    GUARD_BITS,
    AccuracyError,
    DEFAULT_POLICY,
    PrecisionPolicy,
    as_abscissa,
    check_order,
    to_mpf,
)

__all__ = ["polygamma", "phi", "phi_deriv"]


def _asymptotic_psi(k: int, y, eps):
    """psi^(k)(y) for large y.

    Series: (-1)^(k-1) [ (k-1)!/y^k + k!/(2 y^(k+1))
                         + sum_{i>=1} B_{2i} (2i+k-1)!/(2i)! / y^(2i+k) ].
    Returns None if the terms start diverging before reaching eps (y too small
    for the requested precision).
    """
    y = to_mpf(y)
    inv_y2 = 1 / (y * y)
    acc = mp.factorial(k - 1) / y**k + mp.factorial(k) / (2 * y ** (k + 1))
    # factor f_i = (2i+k-1)!/(2i)!  starting at i=1
    f = mp.factorial(k + 1) / 2
    power = y ** (-(k + 2))  # y^-(2i+k) at i=1
    prev_mag = mp.inf
    i = 1
    while True:
        term = mp.bernoulli(2 * i) * f * power
        mag = abs(term)
        if mag >= prev_mag:
            return None
        acc += term
        if mag < eps * abs(acc):
            break
        prev_mag = mag
        f *= mpf((2 * i + k) * (2 * i + k + 1)) / ((2 * i + 1) * (2 * i + 2))
        power *= inv_y2
        i += 1
        if i > 4000:
            return None
    return (-1) ** (k - 1) * acc


@lru_cache(maxsize=200_000)
def _psi_cached(k: int, x, prec_bits: int, crossover: float):
    """psi^(k)(x) for k >= 1, x > 0 (mpf), at prec_bits + guard working bits."""
    with mp.workprec(prec_bits + GUARD_BITS):
        x = to_mpf(x)
        eps = mpf(2) ** (-(prec_bits + GUARD_BITS - 4))
        # Shift threshold: the expansion's smallest term behaves like
        # exp(-2*pi*y), so y must scale with the bit budget (and mildly with k).
        y_target = max(crossover, 0.1103 * (prec_bits + GUARD_BITS) + 0.25 * k + 2.0)
        while True:
            n_shift = int(mp.ceil(y_target - x)) if x < y_target else 0
            y = x + n_shift
            tail = _asymptotic_psi(k, y, eps)
            if tail is not None:
                break
            y_target *= 1.5  # terms diverged early; push the shift further out
        shift_sum = mpf(0)
        for j in range(n_shift - 1, -1, -1):  # ascending magnitude
            shift_sum += (x + j) ** (-(k + 1))
        return (-1) ** (k + 1) * mp.factorial(k) * shift_sum + tail


def polygamma(k: int, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """psi^(k)(x) for 1 <= k <= policy.max_order, x > 0.

    The result's relative error is bounded by the policy target tolerance;
    its sign is (-1)^(k+1).
    """
    check_order(k, policy.max_order, lowest=1)
    xv = to_mpf(as_abscissa(x))
    value = _psi_cached(k, xv, policy.prec_bits, policy.crossover)
    if (-1) ** (k + 1) * value <= 0:
        raise AccuracyError(
            f"psi^({k})({x}) lost its sign pattern; working precision too low"
        )
    return value


def phi(x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """x*psi'(x) - 1; strictly positive on (0, inf).

    The subtraction cancels the leading 1 for large x, which is why this runs
    at extended working precision.
    """
    xv = to_mpf(as_abscissa(x))
    with policy.working():
        return xv * _psi_cached(1, xv, policy.prec_bits, policy.crossover) - 1


def phi_deriv(k: int, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """k-th derivative of phi: x*psi^(k+1)(x) + k*psi^(k)(x) for k >= 1.

    Valid for 0 <= k <= policy.max_order - 1; sign is (-1)^k.
    """
    check_order(k, policy.max_order - 1)
    if k == 0:
        return phi(x, policy)
    xv = to_mpf(as_abscissa(x))
    with policy.working():
        return xv * _psi_cached(
            k + 1, xv, policy.prec_bits, policy.crossover
        ) + k * _psi_cached(k, xv, policy.prec_bits, policy.crossover)


def factorial(n: int) -> int:
    return math.factorial(n)
