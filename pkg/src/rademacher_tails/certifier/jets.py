"""Univariate interval jets: enclosures of Taylor coefficients over a box.

A jet of order m seeded with the box X holds coefficients c_0..c_m where
c_k contains f^(k)(a)/k! for every a in X.  The arithmetic recurrences are
pointwise Taylor-coefficient identities, so interval evaluation of them
preserves containment.  These drive the boundary-sliver arguments of the
two-dimensional certificates, where plain interval evaluation cannot see
through a fourth- or sixth-order tangency.
"""

from __future__ import annotations

from fractions import Fraction

from .interval import Interval, iv_exp, iv_mills_ratio, iv_sqrt

_ZERO = Interval.point(0.0)
_ONE = Interval.point(1.0)


class Jet:
    __slots__ = ("c",)

    def __init__(self, coeffs: list[Interval]):
        self.c = coeffs

    @property
    def order(self) -> int:
        return len(self.c) - 1

    @staticmethod
    def variable(x: Interval, order: int) -> "Jet":
        c = [x, _ONE] + [_ZERO] * (order - 1)
        return Jet(c[: order + 1])

    @staticmethod
    def constant(x: Interval, order: int) -> "Jet":
        return Jet([x] + [_ZERO] * order)

    def __add__(self, other) -> "Jet":
        o = _coerce(other, self.order)
        return Jet([a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return Jet([-a for a in self.c])

    def __sub__(self, other) -> "Jet":
        o = _coerce(other, self.order)
        return Jet([a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other) -> "Jet":
        return _coerce(other, self.order) - self

    def __mul__(self, other) -> "Jet":
        o = _coerce(other, self.order)
        m = self.order
        out = []
        for k in range(m + 1):
            acc = _ZERO
            for j in range(k + 1):
                acc = acc + self.c[j] * o.c[k - j]
            out.append(acc)
        return Jet(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet":
        o = _coerce(other, self.order)
        m = self.order
        out: list[Interval] = []
        inv0 = 1.0 / o.c[0]
        for k in range(m + 1):
            acc = self.c[k]
            for j in range(k):
                acc = acc - out[j] * o.c[k - j]
            out.append(acc * inv0)
        return Jet(out)

    def __rtruediv__(self, other) -> "Jet":
        return _coerce(other, self.order) / self

    def sqrt(self) -> "Jet":
        m = self.order
        out = [iv_sqrt(self.c[0])]
        half_inv = 0.5 / out[0]
        for k in range(1, m + 1):
            acc = self.c[k]
            for j in range(1, k):
                acc = acc - out[j] * out[k - j]
            out.append(acc * half_inv)
        return Jet(out)

    def exp(self) -> "Jet":
        m = self.order
        out = [iv_exp(self.c[0])]
        for k in range(1, m + 1):
            acc = _ZERO
            for j in range(1, k + 1):
                acc = acc + (Interval.point(float(j)) * self.c[j]) * out[k - j]
            out.append(acc / float(k))
        return Jet(out)


def _coerce(v, order: int) -> Jet:
    if isinstance(v, Jet):
        return v
    if isinstance(v, Interval):
        return Jet.constant(v, order)
    if isinstance(v, (int, float)):
        return Jet.constant(Interval.point(float(v)), order)
    if isinstance(v, Fraction):
        return Jet.constant(Interval.from_fraction(v), order)
    raise TypeError(f"cannot use {v!r} in jet arithmetic")


# -- derivatives of ln Gamma through the Mills ratio ---------------------------
#
# With q(z) = phi(z)/Gamma(z) one has (ln Gamma)' = -q and q' = q^2 - z q, so
# every derivative of ln Gamma is a polynomial in (z, q) with integer
# coefficients.  The polynomials are generated once by formal differentiation.

_LNG_POLYS: list[dict[tuple[int, int], int]] = []


def _gen_lng_polys(max_order: int) -> None:
    # p_1 = -q; p_{k+1} = dp/dz + dp/dq * (q^2 - z q)
    polys: list[dict[tuple[int, int], int]] = [{(0, 1): -1}]
    while len(polys) < max_order:
        p = polys[-1]
        nxt: dict[tuple[int, int], int] = {}

        def add(key, val):
            if val:
                nxt[key] = nxt.get(key, 0) + val
                if nxt[key] == 0:
                    del nxt[key]

        for (i, j), coef in p.items():
            if i > 0:
                add((i - 1, j), coef * i)
            if j > 0:
                add((i, j + 1), coef * j)  # from q^2 term of q'
                add((i + 1, j), -coef * j)  # from -z q term of q'
        polys.append(nxt)
    _LNG_POLYS.clear()
    _LNG_POLYS.extend(polys)


_gen_lng_polys(10)


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def log_gauss_tail_jet(z: Jet, log_at_value: Interval | None = None) -> Jet:
    """Jet of ln Gamma composed with the argument jet ``z`` (z values >= 0.5).

    ``log_at_value`` optionally supplies the order-0 enclosure; when the jet
    is used only through differences (ratios of tails) a zero placeholder is
    acceptable.
    """
    order = z.order
    z0 = z.c[0]
    q0 = 1.0 / iv_mills_ratio(z0)
    # outer Taylor coefficients L_k = (ln Gamma)^{(k)}(z0) / k!
    outer = [log_at_value if log_at_value is not None else _ZERO]
    for k in range(1, order + 1):
        poly = _LNG_POLYS[k - 1]
        acc = _ZERO
        for (i, j), coef in poly.items():
            term = Interval.point(float(coef))
            for _ in range(i):
                term = term * z0
            for _ in range(j):
                term = term * q0
            acc = acc + term
        outer.append(acc / float(_factorial(k)))
    # compose: sum_k outer[k] * delta^k, delta = z with constant term zeroed
    delta = Jet([_ZERO] + z.c[1:])
    result = Jet.constant(outer[order], order)
    for k in range(order - 1, -1, -1):
        result = result * delta + Jet.constant(outer[k], order)
    return result
