"""Backend selection for the enumeration kernels.

The compiled Cython extension is preferred; the NumPy implementation is the
always-available fallback.  ``RADEMACHER_TAILS_FORCE_FALLBACK=1`` pins the
fallback (used by the benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

import numpy as np

from . import _enum_py

if os.environ.get("RADEMACHER_TAILS_FORCE_FALLBACK", "") == "1":
    _impl = _enum_py
    BACKEND = "numpy"
else:
    try:
        from . import _enum_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _enum_py
        BACKEND = "numpy"


def worker_cap() -> int:
    """Worker-count cap from RADEMACHER_TAILS_THREADS (0 or unset = auto)."""
    raw = os.environ.get("RADEMACHER_TAILS_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value <= 0:
        return os.cpu_count() or 1
    return value


def tail_count(coeffs: np.ndarray, x: float, tie: float) -> tuple[int, int]:
    c = np.ascontiguousarray(coeffs, dtype=np.float64)
    return _impl.tail_count(c, float(x), float(tie))


def signed_sums(coeffs: np.ndarray) -> np.ndarray:
    c = np.ascontiguousarray(coeffs, dtype=np.float64)
    return np.asarray(_impl.signed_sums(c))
