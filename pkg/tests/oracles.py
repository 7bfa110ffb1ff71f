"""Independent multi-precision oracles (mpmath, 50 digits) for the test suite.

Everything here is computed from definitions only, never through the package
code paths under test.
"""

import mpmath as mp

mp.mp.dps = 50


def gauss_tail(x) -> mp.mpf:
    return mp.ncdf(-mp.mpf(x))


def gauss_pdf(x) -> mp.mpf:
    return mp.npdf(mp.mpf(x))


def big_c() -> mp.mpf:
    return 5 * mp.sqrt(2 * mp.pi * mp.e) * (1 - 2 * gauss_tail(1))


def c_star() -> mp.mpf:
    return mp.mpf(1) / 4 / gauss_tail(mp.sqrt(2))


def h_fn(x) -> mp.mpf:
    x = mp.mpf(x)
    return big_c() * gauss_pdf(x) / (9 + x**2)


def q_fn(x) -> mp.mpf:
    return gauss_tail(x) + h_fn(x)


def inverse_mills_r(x) -> mp.mpf:
    x = mp.mpf(x)
    return gauss_pdf(x) / (x * gauss_tail(x))


def rel_err(value, oracle) -> float:
    oracle = mp.mpf(oracle)
    if oracle == 0:
        return float(abs(value))
    return float(abs((mp.mpf(value) - oracle) / oracle))
