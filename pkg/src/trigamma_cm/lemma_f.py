"""The two-power difference function

    F(x, y) = 2 (1/x - 1/(y-x)) + (1/2) (2^(y-x)/(y-x) - 2^x/x)
              - (2^(y-x) - 2^x) / ((y-x) x)

on 0 < 2x < y, in both its printed forms, with positivity checks for the
real-variable and integer-sequence cases and an exploratory sign-region map.
F(2, y) vanishes identically, so near x = 2 the rearranged form plus extended
precision carries the cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpf

from .precision import DEFAULT_PREC_BITS, DomainError, GUARD_BITS, to_mpf

__all__ = [
    "FPoint",
    "F",
    "F_rearranged",
    "key_inequality",
    "F_sequence_positive",
    "SequenceCheck",
    "f3_closed_form",
    "sign_region_map",
    "RegionMap",
]

NEAR_ZERO_RELATIVE = 1e-10


@dataclass(frozen=True)
class FPoint:
    """Point in the domain of F: positive coordinates, and 2x < y unless the
    ordering is explicitly relaxed (exploratory region maps only)."""

    x: float
    y: float
    ordered: bool = True

    def __post_init__(self):
        if not (self.x > 0 and self.y > 0):
            raise DomainError(f"coordinates must be positive, got ({self.x}, {self.y})")
        if self.ordered and not 2 * self.x < self.y:
            raise DomainError(f"domain requires 0 < 2x < y, got ({self.x}, {self.y})")
        if self.x == self.y:
            raise DomainError("x == y is outside the domain (division by y - x)")


def _components(x, y, prec_bits):
    with mp.workprec(prec_bits + GUARD_BITS):
        xv, yv = to_mpf(x), to_mpf(y)
        d = yv - xv
        p_d = mpf(2) ** d
        p_x = mpf(2) ** xv
        t1 = 2 * (1 / xv - 1 / d)
        t2 = (p_d / d - p_x / xv) / 2
        t3 = -(p_d - p_x) / (d * xv)
        return t1, t2, t3


def F(x, y, prec_bits: int = DEFAULT_PREC_BITS, ordered: bool = True):
    """Three-term form of F at a domain point."""
    FPoint(float(x), float(y), ordered)
    t1, t2, t3 = _components(x, y, prec_bits)
    return t1 + t2 + t3


def F_rearranged(x, y, prec_bits: int = DEFAULT_PREC_BITS, ordered: bool = True):
    """Rearranged single-fraction form:
    [2(y-2x) + 2^(x-1) (2 - y + x + (x-2) 2^(y-2x))] / (x (y-x))."""
    FPoint(float(x), float(y), ordered)
    with mp.workprec(prec_bits + GUARD_BITS):
        xv, yv = to_mpf(x), to_mpf(y)
        bracket = 2 - yv + xv + (xv - 2) * mpf(2) ** (yv - 2 * xv)
        return (2 * (yv - 2 * xv) + mpf(2) ** (xv - 1) * bracket) / (xv * (yv - xv))


def key_inequality(t, x) -> bool:
    """2^t > 1 + t/(x-2) for t > 0, x > 2; guaranteed when x > 2 + 1/ln 2."""
    with mp.workprec(DEFAULT_PREC_BITS + GUARD_BITS):
        tv, xv = to_mpf(t), to_mpf(x)
        if not (tv > 0 and xv > 2):
            raise DomainError(f"requires t > 0 and x > 2, got t={t}, x={x}")
        return bool(mpf(2) ** tv > 1 + tv / (xv - 2))


@dataclass(frozen=True)
class SequenceCheck:
    m: int
    k: int
    positive: bool
    margin: float
    sufficient_inequality: bool | None  # (k-2m)/(2^(k-2m)-1) < m-2, for m >= 4
    closed_form_margin: float | None  # explicit m=3 formula value


def f3_closed_form(k: int):
    """F(3, k) = (2^k - 32k + 128) / (48 (k-3)) for integer k > 6."""
    with mp.workprec(DEFAULT_PREC_BITS + GUARD_BITS):
        kv = to_mpf(k)
        return (mpf(2) ** kv - 32 * kv + 128) / (48 * (kv - 3))


def F_sequence_positive(m: int, k: int, prec_bits: int = DEFAULT_PREC_BITS) -> SequenceCheck:
    """Positivity of the integer sequence F(m, k) on 6 <= 2m < k, with the
    proof-chain side conditions recorded."""
    if not (isinstance(m, int) and isinstance(k, int)):
        raise DomainError("m and k must be integers")
    if not 6 <= 2 * m < k:
        raise DomainError(f"requires 6 <= 2m < k, got m={m}, k={k}")
    value = F(m, k, prec_bits)
    sufficient = None
    if m >= 4:
        with mp.workprec(prec_bits + GUARD_BITS):
            d = k - 2 * m
            sufficient = bool(mpf(d) / (mpf(2) ** d - 1) < m - 2)
    closed = float(f3_closed_form(k)) if m == 3 else None
    return SequenceCheck(
        m=m,
        k=k,
        positive=bool(value > 0),
        margin=float(value),
        sufficient_inequality=sufficient,
        closed_form_margin=closed,
    )


@dataclass(frozen=True)
class RegionMap:
    """Sign grid of F over a rectangle; exploratory output, nothing asserted.

    Signs: '+', '-', '0' (within the cancellation floor), 'x' (not evaluable:
    nonpositive coordinates or x == y)."""

    xs: tuple[float, ...]
    ys: tuple[float, ...]
    signs: tuple[tuple[str, ...], ...]  # signs[i][j] at (xs[i], ys[j])

    def rows(self):
        for i, x in enumerate(self.xs):
            for j, y in enumerate(self.ys):
                yield x, y, self.signs[i][j]


def _axis(lo: float, hi: float, resolution: int) -> tuple[float, ...]:
    if resolution <= 1:
        raise DomainError(f"resolution must be > 1, got {resolution}")
    if hi < lo:
        raise DomainError(f"range must satisfy lo <= hi, got ({lo}, {hi})")
    if hi == lo:
        return tuple([lo] * resolution)
    step = (hi - lo) / resolution
    return tuple(lo + (i + 0.5) * step for i in range(resolution))


def sign_region_map(
    x_range: tuple[float, float],
    y_range: tuple[float, float],
    resolution: int,
    prec_bits: int = DEFAULT_PREC_BITS,
) -> RegionMap:
    """Sign classification of F at cell centers of a resolution^2 grid.

    Points violating positivity (or with x == y) are marked 'x'; the lemma's
    2x < y ordering is deliberately not enforced here.
    """
    xs = _axis(float(x_range[0]), float(x_range[1]), resolution)
    ys = _axis(float(y_range[0]), float(y_range[1]), resolution)
    signs = []
    for x in xs:
        row = []
        for y in ys:
            if x <= 0 or y <= 0 or x == y:
                row.append("x")
                continue
            t1, t2, t3 = _components(x, y, prec_bits)
            value = t1 + t2 + t3
            scale = max(abs(t1), abs(t2), abs(t3), mpf(1))
            if abs(value) < NEAR_ZERO_RELATIVE * scale:
                row.append("0")
            elif value > 0:
                row.append("+")
            else:
                row.append("-")
        signs.append(tuple(row))
    return RegionMap(xs=xs, ys=ys, signs=tuple(signs))
