"""Fixed-node Gauss quadrature on mpf arithmetic: Legendre panels with
optional adaptive bisection, and Laguerre rules for exponentially weighted
tails.  Nodes are generated by Newton iteration at the working precision and
cached per (count, precision).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from mpmath import mp, mpf

from .precision import (
    DEFAULT_PREC_BITS,
    DomainError,
    GUARD_BITS,
    QuadratureError,
    to_mpf,
)

__all__ = [
    "QuadratureConfig",
    "gauss_legendre",
    "gauss_laguerre",
    "integrate_segments",
    "laguerre_sum",
]

_MAX_DEPTH = 26


@dataclass(frozen=True)
class QuadratureConfig:
    """Node count, optional truncation point, subdivision policy, and the
    absolute tolerance budget for one integral."""

    nodes: int = 48
    truncation: float | None = None
    subdivision: str = "adaptive"
    abs_tol: float = 1e-9
    prec_bits: int = DEFAULT_PREC_BITS

    def __post_init__(self):
        if self.nodes < 32:
            raise DomainError(f"node count must be >= 32, got {self.nodes}")
        if self.subdivision not in ("fixed", "adaptive"):
            raise DomainError(f"unknown subdivision policy {self.subdivision!r}")
        if not 0 < self.abs_tol <= 1e-6:
            raise DomainError(f"abs_tol must lie in (0, 1e-6], got {self.abs_tol}")
        if self.truncation is not None and not self.truncation > 0:
            raise DomainError(f"truncation must be > 0, got {self.truncation}")


DEFAULT_QUADRATURE = QuadratureConfig()


@lru_cache(maxsize=64)
def gauss_legendre(n: int, prec_bits: int):
    """Nodes and weights of the n-point Legendre rule on [-1, 1]."""
    with mp.workprec(prec_bits + GUARD_BITS):
        eps = mpf(2) ** (-(prec_bits + GUARD_BITS - 6))
        nodes, weights = [], []
        for i in range(1, n // 2 + n % 2 + 1):
            x = mp.cos(mp.pi * (i - mpf(1) / 4) / (n + mpf(1) / 2))
            for _ in range(200):
                p0, p1 = mpf(1), x
                for j in range(2, n + 1):
                    p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
                dp = n * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) <= eps:
                    break
            else:
                raise QuadratureError(f"Legendre node {i}/{n} did not converge")
            nodes.append(x)
            weights.append(2 / ((1 - x * x) * dp * dp))
        xs, ws = [], []
        for x, w in zip(nodes, weights):
            xs.append(-x)
            ws.append(w)
        middle = n % 2
        for x, w in zip(reversed(nodes[: len(nodes) - middle]), reversed(weights[: len(weights) - middle])):
            xs.append(x)
            ws.append(w)
        return tuple(xs), tuple(ws)


@lru_cache(maxsize=64)
def gauss_laguerre(n: int, prec_bits: int):
    """Nodes and weights of the n-point Laguerre rule (weight e^-x on [0, inf))."""
    with mp.workprec(prec_bits + GUARD_BITS):
        eps = mpf(2) ** (-(prec_bits + GUARD_BITS - 6))
        xs: list = []
        ws: list = []
        z = mpf(0)
        for i in range(1, n + 1):
            if i == 1:
                z = mpf(3) / (1 + 2.4 * n)
            elif i == 2:
                z = z + mpf(15) / (1 + 2.5 * n)
            else:
                ai = i - 2
                z = z + ((1 + 2.55 * ai) / (1.9 * ai)) * (z - xs[i - 3])
            for _ in range(200):
                p1, p2 = mpf(1), mpf(0)
                for j in range(1, n + 1):
                    p1, p2 = ((2 * j - 1 - z) * p1 - (j - 1) * p2) / j, p1
                pp = n * (p1 - p2) / z
                dz = p1 / pp
                z -= dz
                if abs(dz) <= eps * max(mpf(1), abs(z)):
                    break
            else:
                raise QuadratureError(f"Laguerre node {i}/{n} did not converge")
            xs.append(z)
            ws.append(-1 / (pp * n * p2))
        return tuple(xs), tuple(ws)


def _panel(f, a, b, xs, ws):
    half = (b - a) / 2
    mid = (a + b) / 2
    acc = mpf(0)
    for x, w in zip(xs, ws):
        acc += w * f(mid + half * x)
    return acc * half


def _adaptive(f, a, b, tol, xs, ws, depth):
    whole = _panel(f, a, b, xs, ws)
    mid = (a + b) / 2
    left = _panel(f, a, mid, xs, ws)
    right = _panel(f, mid, b, xs, ws)
    err = abs(whole - (left + right))
    if err <= tol or depth >= _MAX_DEPTH:
        return left + right, err
    lv, le = _adaptive(f, a, mid, tol / 2, xs, ws, depth + 1)
    rv, re = _adaptive(f, mid, b, tol / 2, xs, ws, depth + 1)
    return lv + rv, le + re


def integrate_segments(f, breakpoints, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """Integrate f over consecutive [b_i, b_i+1] panels.

    Returns (value, error_estimate); raises QuadratureError when the adaptive
    budget is exhausted above cfg.abs_tol.
    """
    pts = [to_mpf(b) for b in breakpoints]
    if len(pts) < 2 or any(b >= c for b, c in zip(pts, pts[1:])):
        raise DomainError("breakpoints must be strictly increasing, length >= 2")
    xs, ws = gauss_legendre(cfg.nodes, cfg.prec_bits)
    with mp.workprec(cfg.prec_bits + GUARD_BITS):
        total = mpf(0)
        est = mpf(0)
        n_seg = len(pts) - 1
        for a, b in zip(pts, pts[1:]):
            if cfg.subdivision == "fixed":
                total += _panel(f, a, b, xs, ws)
            else:
                seg_tol = to_mpf(cfg.abs_tol) / (2 * n_seg)
                value, err = _adaptive(f, a, b, seg_tol, xs, ws, 0)
                total += value
                est += err
        if cfg.subdivision == "adaptive" and est > cfg.abs_tol:
            raise QuadratureError(
                f"quadrature error estimate {float(est):.3e} exceeds budget "
                f"{cfg.abs_tol:.3e}",
                achieved=float(est),
            )
        return total, (float(est) if cfg.subdivision == "adaptive" else float("nan"))


def laguerre_sum(g, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """Approximate integral_0^inf g(u) e^-u du with the Laguerre rule."""
    xs, ws = gauss_laguerre(cfg.nodes, cfg.prec_bits)
    with mp.workprec(cfg.prec_bits + GUARD_BITS):
        acc = mpf(0)
        for x, w in zip(xs, ws):
            acc += w * g(x)
        return acc
