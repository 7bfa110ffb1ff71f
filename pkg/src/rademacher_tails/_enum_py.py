"""NumPy fallback for the sign-enumeration kernels."""

from __future__ import annotations

import numpy as np


def signed_sums(coeffs: np.ndarray) -> np.ndarray:
    """All 2^n signed sums sum_i s_i * a_i, s in {-1, +1}^n (unsorted)."""
    sums = np.zeros(1, dtype=np.float64)
    for a in coeffs:
        sums = np.concatenate((sums - a, sums + a))
    return sums


def tail_count(coeffs: np.ndarray, x: float, tie: float) -> tuple[int, int]:
    """(#outcomes with sum >= x - tie, #outcomes with |sum - x| <= tie)."""
    sums = signed_sums(coeffs)
    n_ge = int(np.count_nonzero(sums >= x - tie))
    n_atom = int(np.count_nonzero(np.abs(sums - x) <= tie))
    return n_ge, n_atom
