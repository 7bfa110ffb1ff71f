"""Exponential-tilt quantities and the Berry-Esseen composite bound.

Tilting S_n = sum a_i eps_i by exp(x * S_n) makes each coordinate a two-point
law with P(+a_i) = e^{u_i}/(2 cosh u_i), u_i = x * a_i.  The composite bound
N(x) + 2 c_BE B(x) dominates P(S_n >= x) for every x >= 0, where N is the
Gaussian principal term and B carries the Lyapunov ratio of the tilted sum.
N is assembled fully in log space; its Gaussian tail factor would otherwise
underflow beyond arguments around 38.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .coefficients import Coefficients
from .constants import C_BE
from .errors import CapacityError, DomainError
from .gaussian import log_std_normal_tail

IDENTITY_CAP = 16


@dataclass(frozen=True)
class TiltSummary:
    x: float
    u: np.ndarray
    m_x: float
    s_x: float
    L_x: float
    log_mgf: float
    log_N: float
    log_B: float
    N: float
    B: float
    composite: float


def _tilt_arrays(coeffs: Coefficients, x: float):
    u = x * coeffs.as_array()
    tanh_u = np.tanh(u)
    sech_u = 1.0 / np.cosh(u)
    log_mgf = float(np.sum(np.log(np.cosh(u))))
    m = float(np.dot(u, tanh_u)) / x
    s = math.sqrt(float(np.sum((u * sech_u) ** 2))) / x
    return u, tanh_u, sech_u, log_mgf, m, s


def tilt_summary(coeffs: Coefficients, x: float, c_be: float = C_BE) -> TiltSummary:
    """All tilt quantities for (coeffs, x), x > 0."""
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"tilt_summary requires x > 0, got {x!r}")
    u, tanh_u, _, log_mgf, m, s = _tilt_arrays(coeffs, x)
    # L_x = (x s_x)^-3 * sum u_i^3 (1 - tanh^4 u_i)
    lyapunov = float(np.sum(u**3 * (1.0 - tanh_u**4))) / (x * s) ** 3
    log_gamma = log_std_normal_tail((x - m) / s + x * s)
    log_n = log_mgf + 0.5 * (x * s) ** 2 - x * m + log_gamma
    log_b = math.log(lyapunov) - x * x + log_mgf
    # plain-float N and B may underflow for extreme tilts; the log fields do not
    n_term = math.exp(log_n) if log_n > -745.0 else 0.0
    b_term = math.exp(log_b) if log_b > -745.0 else 0.0
    return TiltSummary(
        x=x,
        u=u,
        m_x=m,
        s_x=s,
        L_x=lyapunov,
        log_mgf=log_mgf,
        log_N=log_n,
        log_B=log_b,
        N=n_term,
        B=b_term,
        composite=n_term + 2.0 * c_be * b_term,
    )


def lyapunov_upper(coeffs: Coefficients, x: float) -> tuple[float, float]:
    """(L_x, Jensen-type bound (1/x^3) sum u_i^3 (1 + tanh^2 u_i) cosh u_i)."""
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"lyapunov_upper requires x > 0, got {x!r}")
    u = x * coeffs.as_array()
    tanh_u = np.tanh(u)
    lyap = tilt_summary(coeffs, x).L_x
    bound = float(np.sum(u**3 * (1.0 + tanh_u**2) * np.cosh(u))) / x**3
    return lyap, bound


def nb_bound(coeffs: Coefficients, x: float, c_be: float = C_BE) -> float:
    """The composite bound N(x) + 2 c_BE B(x); returns the vacuous 1 at x = 0."""
    if not (x >= 0.0) or not math.isfinite(x):
        raise DomainError(f"nb_bound requires x >= 0, got {x!r}")
    if x == 0.0:
        return 1.0
    return tilt_summary(coeffs, x, c_be).composite


def _outcome_matrix(n: int) -> np.ndarray:
    # rows: all sign vectors in {-1, +1}^n, lexicographic in the bit pattern
    bits = (np.arange(1 << n)[:, None] >> np.arange(n)[None, :]) & 1
    return 2.0 * bits - 1.0


def tilt_identity_residual(
    coeffs: Coefficients, x: float, event: Callable[[np.ndarray], np.ndarray]
) -> float:
    """|E g(tilted X) - E[e^{xS} g(X)] / E e^{xS}| by brute force over 2^n outcomes.

    ``event`` maps the (2^n, n) matrix of realized values a_i * s_i to a
    vector of g-values (typically an indicator).
    """
    n = coeffs.n
    if n > IDENTITY_CAP:
        raise CapacityError(f"identity check is capped at n <= {IDENTITY_CAP}, got {n}")
    a = coeffs.as_array()
    u = x * a
    signs = _outcome_matrix(n)
    values = signs * a[None, :]
    g = np.asarray(event(values), dtype=np.float64)
    # product tilted law: P(s) = prod_i e^{s_i u_i} / (2 cosh u_i)
    #                          = prod_i 1 / (1 + e^{-2 s_i u_i})
    tilt_probs = np.prod(1.0 / (1.0 + np.exp(-2.0 * signs * u[None, :])), axis=1)
    lhs = float(np.dot(tilt_probs, g))
    weights = np.exp(values.sum(axis=1) * x)
    rhs = float(np.dot(weights, g) / weights.sum())
    return abs(lhs - rhs)
