"""The tail bound Q(x) = Gamma(x) + h(x) and the catalog of comparison bounds.

Q dominates P(S_n >= x) for every normalized Rademacher sum and every x > 0,
with equality at x = 1 for the single-coefficient sum.  The catalog collects
the classical bounds it is compared against, each restricted to its validity
domain.  Corollaries: the i.i.d. bounded-summand bound 2*Qhat_n via lattice
interpolation, and the Student-t bound through the monotone self-normalized
relation t = sqrt((n-1)/n) * v / sqrt(1 - v^2/n).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .constants import constants
from .errors import DomainError
from .gaussian import (
    log_pdf,
    log_std_normal_tail,
    pdf,
    std_normal_tail,
)

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


class BoundKind(enum.Enum):
    QBound = "q"
    Hoeffding = "hoeffding"
    PinelisCStar = "cstar"
    BentkusDzindzalieta = "bd"
    ChebyshevSym = "cheb"
    SmallXComposite = "composite"


@dataclass(frozen=True)
class BoundValue:
    kind: BoundKind
    x: float
    value: float
    clamped: bool


def h(x: float) -> float:
    """h(x) = C * phi(x) / (9 + x^2)."""
    return constants().C * pdf(x) / (9.0 + x * x)


def log_h(x: float) -> float:
    """ln h(x), stable for large x."""
    return math.log(constants().C) + log_pdf(x) - math.log(9.0 + x * x)


def q_raw(x: float) -> float:
    """Gamma(x) + h(x) without any domain restriction (used for lattices)."""
    return std_normal_tail(x) + h(x)


def log_q(x: float) -> float:
    """ln Q(x) via log-space addition; usable far into the tail."""
    a = log_std_normal_tail(x)
    b = log_h(x)
    hi, lo = (a, b) if a >= b else (b, a)
    return hi + math.log1p(math.exp(lo - hi))


def _finish(kind: BoundKind, x: float, value: float, clamp: bool) -> BoundValue:
    if clamp and value > 1.0:
        return BoundValue(kind=kind, x=x, value=1.0, clamped=True)
    return BoundValue(kind=kind, x=x, value=value, clamped=False)


def q_bound(x: float, clamp: bool = False) -> BoundValue:
    """The main bound Q(x) = P(Z > x) + C*phi(x)/(9 + x^2), for x > 0."""
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"q_bound requires x > 0, got {x!r}")
    return _finish(BoundKind.QBound, x, q_raw(x), clamp)


def comparison_bound(kind: BoundKind, x: float, clamp: bool = False) -> BoundValue:
    """Evaluate a catalog bound at x, enforcing its validity domain."""
    if not math.isfinite(x):
        raise DomainError(f"comparison_bound requires finite x, got {x!r}")
    if kind is BoundKind.QBound:
        return q_bound(x, clamp)
    if kind is BoundKind.Hoeffding:
        if x < 0.0:
            raise DomainError(f"Hoeffding bound is stated for x >= 0, got {x!r}")
        return _finish(kind, x, math.exp(-0.5 * x * x), clamp)
    if kind is BoundKind.PinelisCStar:
        return _finish(kind, x, constants().c_star * std_normal_tail(x), clamp)
    if kind is BoundKind.BentkusDzindzalieta:
        if not (1.0 < x <= SQRT2):
            raise DomainError(
                f"Bentkus-Dzindzalieta bound is valid on (1, sqrt(2)], got {x!r}"
            )
        return _finish(kind, x, 0.25 + 0.125 * (1.0 - math.sqrt(2.0 - 2.0 / (x * x))), clamp)
    if kind is BoundKind.ChebyshevSym:
        if not (x > 1.0):
            raise DomainError(f"symmetric Chebyshev bound is valid on x > 1, got {x!r}")
        return _finish(kind, x, 0.5 / (x * x), clamp)
    if kind is BoundKind.SmallXComposite:
        if not (0.0 < x <= SQRT3):
            raise DomainError(
                f"small-x composite bound is valid on (0, sqrt(3)], got {x!r}"
            )
        if x <= 1.0:
            value = 0.5
        elif x <= 1.3:
            value = 0.5 / (x * x)
        else:
            value = 3.22 * std_normal_tail(x)
        return _finish(kind, x, value, clamp)
    raise DomainError(f"unknown bound kind {kind!r}")


def best_bound(x: float, clamp: bool = False) -> BoundValue:
    """Minimum over all catalog bounds valid at x (convenience envelope only)."""
    best: BoundValue | None = None
    for kind in BoundKind:
        try:
            cand = comparison_bound(kind, x, clamp)
        except DomainError:
            continue
        if best is None or cand.value < best.value:
            best = cand
    if best is None:
        raise DomainError(f"no bound in the catalog is valid at x = {x!r}")
    return best


def _lattice_nodes(n: int, x: float) -> tuple[float, float, float]:
    # Lattice (2/sqrt(n)) * (n/2 - floor(n/2) + Z): integers scaled by 2/sqrt(n),
    # shifted by half a step when n is odd.  Returns (left node, right node, step).
    step = 2.0 / math.sqrt(n)
    shift = 0.5 * step if n % 2 else 0.0
    k = math.floor((x - shift) / step)
    left = shift + k * step
    return left, left + step, step


def qhat_iid_bound(n: int, x: float, clamp: bool = False) -> BoundValue:
    """2 * Qhat_n(x): twice the piecewise-linear interpolant of Q on the lattice.

    Applies to (X_1 + ... + X_n)/sqrt(n) for i.i.d. centered summands bounded
    by 1.  Q is extended below 0 by the same formula Gamma + h purely so that
    nonpositive lattice nodes interpolate; the underlying theorem is only
    asserted for positive thresholds.
    """
    if n < 1:
        raise DomainError(f"qhat_iid_bound requires n >= 1, got {n!r}")
    if not (x >= 0.0) or not math.isfinite(x):
        raise DomainError(f"qhat_iid_bound requires finite x >= 0, got {x!r}")
    left, right, step = _lattice_nodes(n, x)
    q_left = q_raw(left)
    if x == left:
        value = 2.0 * q_left
    else:
        t = (x - left) / step
        value = 2.0 * ((1.0 - t) * q_left + t * q_raw(right))
    return _finish(BoundKind.QBound, x, value, clamp)


def student_t_bound(t: float, n: int, clamp: bool = False) -> BoundValue:
    """Tail bound for Student's statistic under orthant symmetry.

    Inverts t = sqrt((n-1)/n) * v / sqrt(1 - v^2/n) to the self-normalized
    threshold x = sqrt(n) * t / sqrt(n - 1 + t^2) and evaluates Q there.
    Nonpositive t gives the vacuous bound 1.
    """
    if n < 2:
        raise DomainError(f"student_t_bound requires n >= 2, got {n!r}")
    if not math.isfinite(t):
        raise DomainError(f"student_t_bound requires finite t, got {t!r}")
    if t <= 0.0:
        return BoundValue(kind=BoundKind.QBound, x=0.0, value=1.0, clamped=False)
    x = math.sqrt(n) * t / math.sqrt(n - 1.0 + t * t)
    return _finish(BoundKind.QBound, x, q_raw(x), clamp)


def ratio_table(
    x_values: Sequence[float],
) -> list[tuple[float, float, float, float]]:
    """Rows (x, Q(x)/Gamma(x), exp(-x^2/2)/Gamma(x), c_star) on an increasing grid."""
    xs = list(x_values)
    if any(not (v > 0.0) for v in xs):
        raise DomainError("ratio_table requires a strictly positive grid")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise DomainError("ratio_table requires a strictly increasing grid")
    c_star = constants().c_star
    rows = []
    for x in xs:
        log_gamma = log_std_normal_tail(x)
        q_ratio = 1.0 + math.exp(log_h(x) - log_gamma)
        hoeff_ratio = math.exp(-0.5 * x * x - log_gamma)
        rows.append((x, q_ratio, hoeff_ratio, c_star))
    return rows
