"""Exact, exhaustive tail probabilities P(S_n >= x) for coefficient vectors.

Ground truth for every bound in the package: float mode enumerates all 2^n
sign vectors through the compiled/NumPy kernel with a 1e-12 tie band around
x; exact mode works in rational arithmetic (meet-in-the-middle over the two
halves of the vector) so atoms at x are unambiguous.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .bounds import BoundKind, comparison_bound, q_bound
from .coefficients import Coefficients, equal_weights
from .errors import CapacityError, DomainError

ENUM_CAP = 24
TIE = 1e-12


@dataclass(frozen=True)
class TailResult:
    probability: float | Fraction
    atom_mass_at_x: float | Fraction
    n_outcomes: int


def _exact_half_sums(vals: Sequence[Fraction]) -> list[Fraction]:
    sums = [Fraction(0)]
    for a in vals:
        sums = [s - a for s in sums] + [s + a for s in sums]
    return sums


def exact_tail(coeffs: Coefficients, x) -> TailResult:
    """P(S_n >= x) by full enumeration (ties at x are included in the event)."""
    n = coeffs.n
    if n > ENUM_CAP:
        raise CapacityError(f"enumeration is capped at n <= {ENUM_CAP}, got {n}")
    total = 1 << n
    if coeffs.mode == "exact":
        if isinstance(x, float):
            raise DomainError("exact mode requires a rational threshold (Fraction or int)")
        x = Fraction(x)
        half = n // 2
        left = _exact_half_sums(coeffs.values[:half])
        right = sorted(_exact_half_sums(coeffs.values[half:]))
        n_ge = 0
        n_atom = 0
        for s in left:
            lo = bisect.bisect_left(right, x - s)
            n_ge += len(right) - lo
            hi = bisect.bisect_right(right, x - s)
            n_atom += hi - lo
        return TailResult(
            probability=Fraction(n_ge, total),
            atom_mass_at_x=Fraction(n_atom, total),
            n_outcomes=total,
        )
    xf = float(x)
    if not math.isfinite(xf):
        raise DomainError(f"exact_tail requires a finite threshold, got {x!r}")
    n_ge, n_atom = kernels.tail_count(coeffs.as_array(), xf, TIE)
    return TailResult(
        probability=n_ge / total,
        atom_mass_at_x=n_atom / total,
        n_outcomes=total,
    )


def binomial_tail(n: int, x: float) -> Fraction:
    """P((eps_1 + ... + eps_n)/sqrt(n) >= x) with exact integer binomials.

    Uses the same 1e-12 tie band as float-mode enumeration so the two agree
    exactly on equal-weight vectors.
    """
    if n < 1:
        raise DomainError(f"binomial_tail requires n >= 1, got {n!r}")
    inv = 1.0 / math.sqrt(n)
    cutoff = float(x) - TIE
    count = sum(math.comb(n, k) for k in range(n + 1) if (2 * k - n) * inv >= cutoff)
    return Fraction(count, 1 << n)


def equal_weight_sup(x: float, n_max: int) -> tuple[Fraction, int]:
    """(max over n <= n_max of binomial_tail(n, x), smallest maximizing n)."""
    if not (1 <= n_max <= 10_000):
        raise DomainError(f"equal_weight_sup requires 1 <= n_max <= 10^4, got {n_max!r}")
    best = Fraction(-1)
    best_n = 1
    for n in range(1, n_max + 1):
        p = binomial_tail(n, x)
        if p > best:
            best = p
            best_n = n
    return best, best_n


def _sorted_sums(coeffs: Coefficients) -> np.ndarray:
    if coeffs.n > ENUM_CAP:
        raise CapacityError(f"enumeration is capped at n <= {ENUM_CAP}, got {coeffs.n}")
    return np.sort(kernels.signed_sums(coeffs.as_array()))


def _tail_prob_from_sorted(sums: np.ndarray, x: float) -> float:
    idx = np.searchsorted(sums, x - TIE, side="left")
    return (sums.size - idx) / sums.size


def verify_q_bound(
    coeffs_set: Sequence[Coefficients], x_grid: Sequence[float]
) -> list[tuple[Coefficients, float, float, float]]:
    """Violations of exact_tail <= Q(x) + 1e-12; empty list means all pass."""
    xs = [float(x) for x in x_grid]
    if any(not (x > 0.0) for x in xs):
        raise DomainError("verify_q_bound requires positive thresholds")
    q_values = [q_bound(x).value for x in xs]
    violations = []
    for coeffs in coeffs_set:
        sums = _sorted_sums(coeffs)
        for x, q in zip(xs, q_values):
            exact = _tail_prob_from_sorted(sums, x)
            if exact > q + TIE:
                violations.append((coeffs, x, exact, q))
    return violations


def verify_comparison_dominance(
    coeffs_set: Sequence[Coefficients], x_grid: Sequence[float]
) -> list[tuple[Coefficients, BoundKind, float, float, float]]:
    """Violations of exact_tail <= bound + 1e-12 for every valid catalog kind."""
    xs = [float(x) for x in x_grid]
    per_kind: dict[BoundKind, list[tuple[float, float]]] = {}
    for kind in (
        BoundKind.Hoeffding,
        BoundKind.PinelisCStar,
        BoundKind.BentkusDzindzalieta,
        BoundKind.ChebyshevSym,
        BoundKind.SmallXComposite,
    ):
        vals = []
        for x in xs:
            try:
                vals.append((x, comparison_bound(kind, x).value))
            except DomainError:
                continue
        per_kind[kind] = vals
    violations = []
    for coeffs in coeffs_set:
        sums = _sorted_sums(coeffs)
        for kind, vals in per_kind.items():
            for x, bound in vals:
                exact = _tail_prob_from_sorted(sums, x)
                if exact > bound + TIE:
                    violations.append((coeffs, kind, x, exact, bound))
    return violations


def equal_weight_agreement(n: int, x_grid: Sequence[float]) -> bool:
    """binomial_tail == float-mode exact_tail on equal weights, exactly."""
    coeffs = equal_weights(n)
    sums = _sorted_sums(coeffs)
    total = sums.size
    for x in x_grid:
        idx = np.searchsorted(sums, float(x) - TIE, side="left")
        if Fraction(int(total - idx), int(total)) != binomial_tail(n, float(x)):
            return False
    return True
