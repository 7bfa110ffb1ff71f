"""The fixed numerical constants of the tail bound and its proof apparatus."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .gaussian import inverse_mills_ratio_r, std_normal_tail

#: Berry-Esseen constant used throughout (Shevtsova's bound).
C_BE = 56.0 / 100.0

#: Threshold for the largest tilted coefficient, u* = 51/125.
U_STAR = 51.0 / 125.0


@dataclass(frozen=True)
class Constants:
    C: float
    c_star: float
    c_BE: float
    u_star: float
    K: float
    x_three_halves: float
    x_star: float


def _gamma_exponent(u: float) -> float:
    # gamma(u) = -alpha'(u) / (alpha(u) * ell'(u)) in the closed form
    # u^2 sech(2u) [cosh u + cosh 3u + u(3 sinh u + sinh 3u)]
    #   / (4 cosh u ln cosh u - 2 u sinh u).
    num = (
        u
        * u
        / math.cosh(2.0 * u)
        * (
            math.cosh(u)
            + math.cosh(3.0 * u)
            + u * (3.0 * math.sinh(u) + math.sinh(3.0 * u))
        )
    )
    den = 4.0 * math.cosh(u) * math.log(math.cosh(u)) - 2.0 * u * math.sinh(u)
    return num / den


def _bisect_r_equals(target: float, lo: float, hi: float, tol: float = 1e-12) -> float:
    # r is strictly decreasing, so r(lo) > target > r(hi) brackets the root.
    flo = inverse_mills_ratio_r(lo) - target
    fhi = inverse_mills_ratio_r(hi) - target
    if not (flo > 0.0 > fhi):
        raise ValueError("bisection bracket does not straddle the root")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if inverse_mills_ratio_r(mid) - target > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@lru_cache(maxsize=1)
def constants() -> Constants:
    """Compute all constants once; the result is immutable and cached."""
    big_c = 5.0 * math.sqrt(2.0 * math.pi * math.e) * (1.0 - 2.0 * std_normal_tail(1.0))
    c_star = 0.25 / std_normal_tail(math.sqrt(2.0))
    k = math.log(big_c / (2.0 * math.sqrt(2.0 * math.pi) * C_BE))
    x32 = _bisect_r_equals(1.5, 1.0, 1.1)
    x_star = math.sqrt(_gamma_exponent(U_STAR))
    return Constants(
        C=big_c,
        c_star=c_star,
        c_BE=C_BE,
        u_star=U_STAR,
        K=k,
        x_three_halves=x32,
        x_star=x_star,
    )
