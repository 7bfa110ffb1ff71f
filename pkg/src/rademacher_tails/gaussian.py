"""High-precision standard normal tail primitives.

The tail function Gamma(x) = P(Z >= x) is evaluated through two regimes:

* ``|x| <= 1.5``: Gamma(x) = 1/2 - phi(x) * S(x) with the everywhere-positive
  series S(x) = x + x^3/3 + x^5/15 + ... (no cancellation inside the sum; the
  subtraction from 1/2 loses < 1 decimal digit on this range).
* ``x > 1.5``: the Laplace continued fraction for the Mills ratio
  R(x) = Gamma(x)/phi(x) = 1/(x+ 1/(x+ 2/(x+ 3/(x+ ...)))), evaluated with
  modified Lentz iteration.

Relative accuracy is ~1e-14 wherever the result is representable in float64;
beyond x ~ 38.6 the tail underflows and the log-space variants must be used.
"""

from __future__ import annotations

import math

from .errors import DomainError

LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

_SERIES_CUT = 1.5
_TINY = 1e-300


def _half_square(x: float) -> tuple[float, float]:
    # x*x/2 as an exact hi+lo pair (Dekker two-product; no fma needed).
    p = x * x
    c = 134217729.0 * x  # 2^27 + 1 splitter
    big = c - (c - x)
    small = x - big
    err = ((big * big - p) + 2.0 * big * small) + small * small
    return 0.5 * p, 0.5 * err


def pdf(x: float) -> float:
    """Standard normal density phi(x)."""
    hi, lo = _half_square(x)
    if hi > 745.0:
        return 0.0
    return math.exp(-hi) * math.exp(-lo) * INV_SQRT_2PI


def log_pdf(x: float) -> float:
    """ln phi(x), valid far beyond the underflow point of phi."""
    hi, lo = _half_square(x)
    return -hi - (lo + LOG_SQRT_2PI)


def _tail_series_sum(x: float) -> float:
    # S(x) = sum_{n>=0} x^(2n+1) / (1*3*...*(2n+1)); P(0<Z<x) = phi(x)*S(x).
    term = x
    total = x
    x2 = x * x
    n = 0
    while True:
        n += 1
        term *= x2 / (2 * n + 1)
        new = total + term
        if new == total:
            return total
        total = new


def _mills_cf(x: float) -> float:
    # Modified Lentz on R(x) = 1/(x+ 1/(x+ 2/(x+ ...))); converges for x > 0,
    # fast for x >= 1.5 (the only regime in which it is called).
    f = x if x != 0.0 else _TINY
    c = f
    d = 0.0
    for k in range(1, 500):
        d = x + k * d
        if d == 0.0:
            d = _TINY
        c = x + k / c
        if c == 0.0:
            c = _TINY
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-17:
            break
    return 1.0 / f


def mills_ratio(x: float) -> float:
    """Gamma(x)/phi(x) for x > 0."""
    if not (x > 0.0):
        raise DomainError(f"mills_ratio requires x > 0, got {x!r}")
    if x <= _SERIES_CUT:
        return 0.5 / pdf(x) - _tail_series_sum(x)
    return _mills_cf(x)


def std_normal_tail(x: float) -> float:
    """Gamma(x) = P(Z >= x).

    Satisfies Gamma(x) + Gamma(-x) = 1 to working precision.  Underflows to
    0.0 for x beyond ~38.6; use :func:`log_std_normal_tail` there.
    """
    if not math.isfinite(x):
        raise DomainError(f"std_normal_tail requires finite x, got {x!r}")
    if x < 0.0:
        return 1.0 - std_normal_tail(-x)
    if x <= _SERIES_CUT:
        return 0.5 - pdf(x) * _tail_series_sum(x)
    return pdf(x) * _mills_cf(x)


def log_std_normal_tail(x: float) -> float:
    """ln Gamma(x), stable for arbitrarily large x."""
    if not math.isfinite(x):
        raise DomainError(f"log_std_normal_tail requires finite x, got {x!r}")
    if x <= _SERIES_CUT:
        return math.log(std_normal_tail(x))
    hi, lo = _half_square(x)
    return (math.log(_mills_cf(x)) - LOG_SQRT_2PI - lo) - hi


def inverse_mills_ratio_r(x: float) -> float:
    """r(x) = phi(x) / (x * Gamma(x)), strictly decreasing from +inf to 1."""
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"inverse_mills_ratio_r requires finite x > 0, got {x!r}")
    return 1.0 / (x * mills_ratio(x))
