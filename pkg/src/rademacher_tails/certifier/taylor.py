"""Validated Taylor models on [0, radius] with exact rational coefficients.

A model is  f(u) = P(u) +/- M u^m  for all u in [0, radius], where P has
Fraction coefficients and M bounds the remainder magnitude coefficient.
This representation evaluates cancellation-prone hyperbolic combinations
(e.g. the Wronskian forms, which vanish to 5th..9th order at 0) without the
catastrophic dependency loss of direct interval evaluation: the polynomial
is factored through its leading power before Horner evaluation.

Primitive models (cosh(ku), sinh(ku), ln cosh, tanh, u tanh u) carry
explicit geometric tail bounds; arithmetic propagates remainders in the
standard Taylor-model fashion with outward float rounding.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ._series_data import LNCH_COEFFS, M_MAX, TANH_COEFFS, YCOTH_COEFFS
from .interval import Interval, _up

DEG = 46  # polynomial truncation degree
RADIUS = 0.5


def _up_f(x: float) -> float:
    # generous outward rounding for remainder bookkeeping
    return _up(x * (1.0 + 1e-12), 2)


class TaylorModel:
    __slots__ = ("coeffs", "rem", "rem_pow", "_iv_cache")

    def __init__(self, coeffs: list[Fraction], rem: float, rem_pow: int):
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = coeffs
        self.rem = rem
        self.rem_pow = rem_pow
        self._iv_cache: list[Interval] | None = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_poly(pairs: dict[int, Fraction]) -> "TaylorModel":
        top = max(pairs) if pairs else 0
        coeffs = [Fraction(0)] * (top + 1)
        for k, v in pairs.items():
            coeffs[k] = Fraction(v)
        return TaylorModel(coeffs, 0.0, DEG + 1)

    @staticmethod
    def constant(c) -> "TaylorModel":
        return TaylorModel.from_poly({0: Fraction(c)})

    @staticmethod
    def monomial(k: int, c=1) -> "TaylorModel":
        return TaylorModel.from_poly({k: Fraction(c)})

    @staticmethod
    def cosh_ku(k: int) -> "TaylorModel":
        # sum (k u)^{2m} / (2m)!; geometric tail beyond DEG
        coeffs = [Fraction(0)] * (DEG + 1)
        m = 0
        while 2 * m <= DEG:
            coeffs[2 * m] = Fraction(k ** (2 * m), math.factorial(2 * m))
            m += 1
        n_next = 2 * m
        z = k * RADIUS
        tail_first = z**n_next / math.factorial(n_next)
        q = z * z / ((n_next + 1) * (n_next + 2))
        rem = _up_f(tail_first / (1.0 - q) / RADIUS**n_next)
        return TaylorModel(coeffs, rem, n_next)

    @staticmethod
    def sinh_ku(k: int) -> "TaylorModel":
        coeffs = [Fraction(0)] * (DEG + 1)
        m = 0
        while 2 * m + 1 <= DEG:
            coeffs[2 * m + 1] = Fraction(k ** (2 * m + 1), math.factorial(2 * m + 1))
            m += 1
        n_next = 2 * m + 1
        z = k * RADIUS
        tail_first = z**n_next / math.factorial(n_next)
        q = z * z / ((n_next + 1) * (n_next + 2))
        rem = _up_f(tail_first / (1.0 - q) / RADIUS**n_next)
        return TaylorModel(coeffs, rem, n_next)

    @staticmethod
    def log_cosh() -> "TaylorModel":
        # |a_m| <= (pi^2/6)(4/pi^2)^m / m  gives the geometric tail
        coeffs = [Fraction(0)] * (2 * M_MAX + 1)
        for m in range(1, M_MAX + 1):
            coeffs[2 * m] = LNCH_COEFFS[m - 1]
        ratio = 4.0 / math.pi**2
        q = ratio * RADIUS * RADIUS
        n_next = M_MAX + 1
        rem = _up_f((math.pi**2 / 6.0 / n_next) * ratio**n_next / (1.0 - q))
        return TaylorModel(coeffs, rem, 2 * n_next)

    @staticmethod
    def tanh() -> "TaylorModel":
        # |t_m| <= (pi^2/3)(4/pi^2)^m
        coeffs = [Fraction(0)] * (2 * M_MAX)
        for m in range(1, M_MAX + 1):
            coeffs[2 * m - 1] = TANH_COEFFS[m - 1]
        ratio = 4.0 / math.pi**2
        q = ratio * RADIUS * RADIUS
        n_next = M_MAX + 1
        rem = _up_f((math.pi**2 / 3.0) * ratio**n_next / (1.0 - q))
        return TaylorModel(coeffs, rem, 2 * n_next - 1)

    @staticmethod
    def y_coth_y() -> "TaylorModel":
        # |c_k| <= 2 zeta(2) pi^{-2k}
        coeffs = [Fraction(0)] * (2 * M_MAX + 1)
        for k in range(M_MAX + 1):
            coeffs[2 * k] = YCOTH_COEFFS[k]
        ratio = 1.0 / math.pi**2
        q = ratio * RADIUS * RADIUS
        n_next = M_MAX + 1
        rem = _up_f(2.0 * (math.pi**2 / 6.0) * ratio**n_next / (1.0 - q))
        return TaylorModel(coeffs, rem, 2 * n_next)

    @staticmethod
    def atanh() -> "TaylorModel":
        # atanh t = sum t^{2k+1}/(2k+1); tail <= t^{2N+3}/((2N+3)(1-RADIUS^2))
        coeffs = [Fraction(0)] * (DEG + 1)
        k = 0
        while 2 * k + 1 <= DEG:
            coeffs[2 * k + 1] = Fraction(1, 2 * k + 1)
            k += 1
        n_next = 2 * k + 1
        rem = _up_f(1.0 / (n_next * (1.0 - RADIUS * RADIUS)))
        return TaylorModel(coeffs, rem, n_next)

    # -- helpers ------------------------------------------------------------

    @property
    def lead_pow(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return self.rem_pow

    def _abs_coeff_sum_above(self, k0: int) -> float:
        # sum |c_k| RADIUS^(k - k0) over k >= k0
        total = 0.0
        for k, c in enumerate(self.coeffs):
            if c != 0 and k >= k0:
                total += abs(float(c)) * RADIUS ** (k - k0)
        return total

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other) -> "TaylorModel":
        o = _coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        coeffs = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            coeffs[k] += c
        for k, c in enumerate(o.coeffs):
            coeffs[k] += c
        rem_pow = min(self.rem_pow, o.rem_pow)
        rem = _up_f(
            self.rem * RADIUS ** (self.rem_pow - rem_pow)
            + o.rem * RADIUS ** (o.rem_pow - rem_pow)
        )
        return TaylorModel(coeffs, rem, rem_pow)

    __radd__ = __add__

    def __neg__(self) -> "TaylorModel":
        return TaylorModel([-c for c in self.coeffs], self.rem, self.rem_pow)

    def __sub__(self, other) -> "TaylorModel":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "TaylorModel":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "TaylorModel":
        o = _coerce(other)
        prod: list[Fraction] = [Fraction(0)] * min(
            len(self.coeffs) + len(o.coeffs) - 1, DEG + 1
        ) if self.coeffs and o.coeffs else []
        trunc = 0.0
        trunc_pow = DEG + 1
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b == 0:
                    continue
                k = i + j
                if k <= DEG:
                    prod[k] += a * b
                else:
                    trunc += abs(float(a * b)) * RADIUS ** (k - trunc_pow)
        k_self = self.lead_pow
        k_other = o.lead_pow
        pieces = [(trunc, trunc_pow)]
        if o.rem:
            pieces.append((self._abs_coeff_sum_above(k_self) * o.rem, k_self + o.rem_pow))
        if self.rem:
            pieces.append((o._abs_coeff_sum_above(k_other) * self.rem, k_other + self.rem_pow))
        if self.rem and o.rem:
            pieces.append((self.rem * o.rem, self.rem_pow + o.rem_pow))
        rem_pow = min((p for v, p in pieces if v > 0.0), default=DEG + 1)
        rem = _up_f(sum(v * RADIUS ** (p - rem_pow) for v, p in pieces))
        return TaylorModel(prod, rem, rem_pow)

    __rmul__ = __mul__

    # -- evaluation -----------------------------------------------------------

    def div_monomial(self, k: int) -> "TaylorModel":
        """Exact division by u^k (requires lead_pow >= k and rem_pow >= k)."""
        if self.lead_pow < k or self.rem_pow < k:
            raise ValueError(f"cannot divide this model by u^{k}")
        return TaylorModel(self.coeffs[k:], self.rem, self.rem_pow - k)

    def _iv_coeffs(self) -> list[Interval]:
        if self._iv_cache is None:
            self._iv_cache = [
                Interval.from_fraction(c) if c != 0 else None  # type: ignore[misc]
                for c in self.coeffs
            ]
        return self._iv_cache

    def eval(self, u: Interval) -> Interval:
        """Enclosure of f over [u.lo, u.hi] (subset of [0, RADIUS] required)."""
        if u.lo < 0.0 or u.hi > RADIUS:
            raise ValueError(f"TaylorModel evaluated outside [0, {RADIUS}]: {u!r}")
        k0 = min(self.lead_pow, self.rem_pow)
        ivs = self._iv_coeffs()
        acc = Interval.point(0.0)
        for k in range(len(self.coeffs) - 1, k0 - 1, -1):
            acc = acc * u
            c = ivs[k]
            if c is not None:
                acc = acc + c
        if self.rem:
            acc = acc + Interval(-self.rem, self.rem) * _power(u, self.rem_pow - k0)
        return acc * _power(u, k0)

    def eval_point(self, u: float) -> float:
        """Plain float evaluation (midpoint of the model, remainder ignored)."""
        acc = 0.0
        for k in range(len(self.coeffs) - 1, -1, -1):
            acc = acc * u + float(self.coeffs[k])
        return acc


def _coerce(v) -> TaylorModel:
    if isinstance(v, TaylorModel):
        return v
    if isinstance(v, (int, Fraction)):
        return TaylorModel.constant(v)
    raise TypeError(f"cannot use {v!r} in TaylorModel arithmetic")


def _power(u: Interval, k: int) -> Interval:
    if k == 0:
        return Interval.point(1.0)
    return u**k
