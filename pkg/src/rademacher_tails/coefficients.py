"""Validated coefficient vectors (a_1, ..., a_n) with sum of squares 1."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError

NORM_TOL = 1e-12


@dataclass(frozen=True)
class Coefficients:
    """Nonnegative, ascending coefficients with unit Euclidean norm.

    ``mode`` is "float" (numpy array, norm checked to 1e-12) or "exact"
    (Fractions, norm checked exactly).  Construct through :func:`from_floats`
    or :func:`from_rationals`.
    """

    values: tuple
    mode: str

    @property
    def n(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray([float(v) for v in self.values], dtype=np.float64)


def from_floats(values: Sequence[float], normalize: bool = False) -> Coefficients:
    arr = np.asarray(list(values), dtype=np.float64)
    if arr.size < 1:
        raise DomainError("coefficient vector must be nonempty")
    if np.any(arr < 0.0) or not np.all(np.isfinite(arr)):
        raise DomainError("coefficients must be finite and nonnegative")
    norm_sq = float(np.dot(arr, arr))
    if normalize:
        if norm_sq <= 0.0:
            raise DomainError("cannot normalize the zero vector")
        arr = arr / np.sqrt(norm_sq)
    elif abs(norm_sq - 1.0) > NORM_TOL:
        raise DomainError(
            f"sum of squared coefficients is {norm_sq!r}, not 1 (pass normalize=True to rescale)"
        )
    arr = np.sort(arr)
    return Coefficients(values=tuple(float(v) for v in arr), mode="float")


def from_rationals(values: Sequence[Fraction]) -> Coefficients:
    vals = [Fraction(v) for v in values]
    if not vals:
        raise DomainError("coefficient vector must be nonempty")
    if any(v < 0 for v in vals):
        raise DomainError("coefficients must be nonnegative")
    norm_sq = sum(v * v for v in vals)
    if norm_sq != 1:
        raise DomainError(f"sum of squared coefficients is {norm_sq}, not exactly 1")
    vals.sort()
    return Coefficients(values=tuple(vals), mode="exact")


def equal_weights(n: int) -> Coefficients:
    if n < 1:
        raise DomainError(f"equal_weights requires n >= 1, got {n!r}")
    return from_floats([1.0 / np.sqrt(n)] * n, normalize=True)


def random_unit(rng: np.random.Generator, n: int) -> Coefficients:
    """Absolute normalized standard-normal draws, sorted ascending."""
    while True:
        g = np.abs(rng.standard_normal(n))
        norm = np.linalg.norm(g)
        if norm > 0.0:
            return from_floats(np.sort(g / norm), normalize=True)
