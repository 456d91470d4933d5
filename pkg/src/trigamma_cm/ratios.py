"""The named combination functions built from phi = x*psi'(x) - 1 and its
derivatives: the central ratio Y, the additive family calY, and the special
cases they generalize, together with the sharp integer constants separating
their monotonicity/complete-monotonicity regimes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpf

from .polygamma import phi_deriv
from .precision import (
    DEFAULT_POLICY,
    DomainError,
    PrecisionPolicy,
    as_abscissa,
    check_order,
    to_mpf,
)

__all__ = [
    "SharpConstant",
    "sharp_constant",
    "Y",
    "Y_prime",
    "calY",
    "H_beta",
    "frakH",
    "frakJ",
    "J",
    "calJ",
    "remark_expression",
    "AnalyticHandle",
    "caly_handle",
    "phi_deriv_handle",
]


@dataclass(frozen=True)
class SharpConstant:
    """C = (m+n+1)! / (m! n!), the exact threshold constant; Y ranges over
    (-2C, -C)."""

    m: int
    n: int
    value: int

    @property
    def double(self) -> int:
        return 2 * self.value


def sharp_constant(m: int, n: int, max_order: int = 60) -> SharpConstant:
    check_order(m, max_order)
    check_order(n, max_order)
    num = math.factorial(m + n + 1)
    den = math.factorial(m) * math.factorial(n)
    return SharpConstant(m=m, n=n, value=num // den)


def Y(m: int, n: int, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """phi^(m+n+1)(x) / (phi^(m)(x) phi^(n)(x)); symmetric in (m, n),
    decreasing in x with range (-2C, -C)."""
    if m > n:
        m, n = n, m  # canonical order: symmetry holds exactly
    with policy.working():
        num = phi_deriv(m + n + 1, x, policy)
        den = phi_deriv(m, x, policy) * phi_deriv(n, x, policy)
        if den == 0:
            raise DomainError(f"denominator underflow in Y({m},{n}) at x={x}")
        return num / den


def Y_prime(m: int, n: int, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """d/dx of Y(m, n, x), by the quotient rule on the derivative orders."""
    if m > n:
        m, n = n, m
    with policy.working():
        pm = phi_deriv(m, x, policy)
        pn = phi_deriv(n, x, policy)
        top = phi_deriv(m + n + 1, x, policy)
        top_d = phi_deriv(m + n + 2, x, policy)
        den_d = phi_deriv(m + 1, x, policy) * pn + pm * phi_deriv(n + 1, x, policy)
        return (top_d * pm * pn - top * den_d) / (pm * pn) ** 2


def calY(m: int, n: int, omega, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """phi^(m+n+1)(x) + omega * phi^(m)(x) phi^(n)(x)."""
    if m > n:
        m, n = n, m
    with policy.working():
        return phi_deriv(m + n + 1, x, policy) + to_mpf(omega) * phi_deriv(
            m, x, policy
        ) * phi_deriv(n, x, policy)


def H_beta(beta, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """phi'(x) / phi(x)^beta; decreasing iff beta >= 2, increasing if beta <= 1."""
    with policy.working():
        base = phi_deriv(0, x, policy)
        if base <= 0:
            raise DomainError(f"phi(x) must be positive, got {base} at x={x}")
        return phi_deriv(1, x, policy) / base ** to_mpf(beta)


def frakH(alpha, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """phi'(x) + alpha * phi(x)^2  (= calY(0, 0, alpha, x))."""
    return calY(0, 0, alpha, x, policy)


def frakJ(k: int, lam, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """phi^(2k+1)(x) + lam * [phi^(k)(x)]^2  (= calY(k, k, lam, x))."""
    return calY(k, k, lam, x, policy)


def J(k: int, mu, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """phi^(2k+1)(x) / [(-1)^k phi^(k)(x)]^mu.

    The base (-1)^k phi^(k) is positive, so real exponents are safe; a
    nonpositive base (numerical sign loss) is rejected rather than powered.
    """
    with policy.working():
        base = (-1) ** k * phi_deriv(k, x, policy)
        if base <= 0:
            raise DomainError(
                f"(-1)^{k} phi^({k})({x}) must be positive; non-integer powers "
                "of nonpositive bases are rejected"
            )
        muv = to_mpf(mu)
        power = base ** int(mu) if muv == int(mu) else base**muv
        return phi_deriv(2 * k + 1, x, policy) / power


def calJ(k: int, m: int, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """phi^(2k+2)(x) / (phi^(k-m)(x) phi^(k+m+1)(x)) for k >= m >= 0;
    identical to Y(k-m, k+m+1, x)."""
    if not 0 <= m <= k:
        raise DomainError(f"calJ requires k >= m >= 0, got k={k}, m={m}")
    return Y(k - m, k + m + 1, x, policy)


def remark_expression(m: int, n: int, x, policy: PrecisionPolicy = DEFAULT_POLICY):
    """phi^(m+n+1) [phi^(m) phi^(n)]' - phi^(m+n+2) phi^(m) phi^(n).

    Positivity at x is equivalent to Y(m, n, .) strictly decreasing there;
    whether the expression is completely monotonic is an open guess and is
    only probed, never asserted.
    """
    if m > n:
        m, n = n, m
    with policy.working():
        pm = phi_deriv(m, x, policy)
        pn = phi_deriv(n, x, policy)
        prod_d = phi_deriv(m + 1, x, policy) * pn + pm * phi_deriv(n + 1, x, policy)
        return phi_deriv(m + n + 1, x, policy) * prod_d - phi_deriv(
            m + n + 2, x, policy
        ) * pm * pn


class AnalyticHandle:
    """Function handle advertising closed-form derivatives (and optionally a
    per-order magnitude scale) to the sign-pattern checker."""

    def __init__(self, fn, derivative_factory, scale_factory=None, label=""):
        self._fn = fn
        self._derivative_factory = derivative_factory
        self._scale_factory = scale_factory
        self.label = label

    def __call__(self, x):
        return self._fn(x)

    def derivative(self, order: int):
        if order == 0:
            return self._fn
        return self._derivative_factory(order)

    def scale(self, order: int):
        if self._scale_factory is None:
            return None
        return self._scale_factory(order)

    def __repr__(self):
        return f"AnalyticHandle({self.label or self._fn!r})"


def caly_handle(
    m: int,
    n: int,
    omega,
    sign: int = 1,
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> AnalyticHandle:
    """Handle for sign * calY(m, n, omega, .) with Leibniz-rule derivatives.

    derivative(j) needs phi orders up to m+n+1+j, so j is bounded by
    policy.max_order - (m+n+2).
    """
    omega_v = to_mpf(omega)

    def deriv(j: int):
        coeffs = [math.comb(j, i) for i in range(j + 1)]

        def d(x):
            with policy.working():
                acc = phi_deriv(m + n + 1 + j, x, policy)
                for i, c in enumerate(coeffs):
                    acc += omega_v * c * phi_deriv(m + i, x, policy) * phi_deriv(
                        n + j - i, x, policy
                    )
                return sign * acc

        return d

    def scale(j: int):
        coeffs = [math.comb(j, i) for i in range(j + 1)]

        def s(x):
            with policy.working():
                acc = abs(phi_deriv(m + n + 1 + j, x, policy))
                for i, c in enumerate(coeffs):
                    acc += abs(omega_v) * c * abs(
                        phi_deriv(m + i, x, policy)
                    ) * abs(phi_deriv(n + j - i, x, policy))
                return acc

        return s

    return AnalyticHandle(
        fn=lambda x: sign * calY(m, n, omega_v, x, policy),
        derivative_factory=deriv,
        scale_factory=scale,
        label=f"{'+' if sign > 0 else '-'}calY({m},{n};omega={float(omega)})",
    )


def phi_deriv_handle(
    k: int, sign: int = 1, policy: PrecisionPolicy = DEFAULT_POLICY
) -> AnalyticHandle:
    """Handle for sign * phi^(k); derivative(j) is sign * phi^(k+j)."""
    return AnalyticHandle(
        fn=lambda x: sign * phi_deriv(k, x, policy),
        derivative_factory=lambda j: (lambda x: sign * phi_deriv(k + j, x, policy)),
        scale_factory=lambda j: (lambda x: abs(phi_deriv(k + j, x, policy))),
        label=f"{'+' if sign > 0 else '-'}phi^({k})",
    )
