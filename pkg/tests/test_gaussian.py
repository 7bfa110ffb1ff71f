import math

import numpy as np
import pytest

from rademacher_tails import (
    DomainError,
    inverse_mills_ratio_r,
    log_std_normal_tail,
    mills_ratio,
    std_normal_tail,
)

from .oracles import gauss_tail, inverse_mills_r, rel_err

import mpmath as mp


def test_tail_at_zero_is_half():
    assert std_normal_tail(0.0) == 0.5


def test_tail_at_sqrt2_matches_oracle():
    x = math.sqrt(2.0)
    assert rel_err(std_normal_tail(x), gauss_tail(x)) <= 1e-13


def test_tail_mills_normalization_at_10():
    # v * 10 / phi(10) must sit inside [0.9890, 0.9910]
    v = std_normal_tail(10.0)
    phi10 = float(mp.npdf(10))
    assert 0.9890 <= v * 10.0 / phi10 <= 0.9910


@pytest.mark.parametrize("x", [1e-8, 0.1, 0.5, 1.0, 1.4999, 1.5, 1.6, 2.0, 3.0, 5.0, 8.0, 12.0, 20.0, 30.0, 37.0])
def test_tail_relative_error_grid(x):
    assert rel_err(std_normal_tail(x), gauss_tail(x)) <= 1e-13
    assert rel_err(std_normal_tail(-x), gauss_tail(-x)) <= 1e-13


def test_tail_relative_error_random_grid():
    rng = np.random.default_rng(20240811)
    xs = np.concatenate([rng.uniform(0, 3, 200), rng.uniform(3, 37.5, 200)])
    worst = max(rel_err(std_normal_tail(float(x)), gauss_tail(float(x))) for x in xs)
    assert worst <= 1e-13


def test_tail_symmetry():
    for x in [0.0, 0.3, 1.0, 1.7, 2.5, 5.0, 10.0]:
        assert abs(std_normal_tail(x) + std_normal_tail(-x) - 1.0) <= 1e-14


def test_log_tail_matches_oracle_far_out():
    for x in [1.0, 5.0, 40.0, 100.0, 1e4]:
        oracle = mp.log(gauss_tail(x))
        got = log_std_normal_tail(x)
        assert abs(got - float(oracle)) <= 1e-11 * max(1.0, abs(float(oracle)))


def test_inverse_mills_examples():
    # r(x) ~ phi(0) / (0.5 x) as x -> 0+, so r(0.001) is huge
    assert inverse_mills_ratio_r(0.001) > 100.0
    # asymptotic window at x = 10 from the expansion Gamma ~ (phi/x)(1 - 1/x^2 + 3/x^4)
    assert abs(inverse_mills_ratio_r(10.0) - 1.00985) <= 1e-4


def test_inverse_mills_strictly_decreasing_with_limit():
    xs = np.concatenate([np.linspace(0.01, 5, 400), np.linspace(5.1, 40, 100)])
    vals = [inverse_mills_ratio_r(float(x)) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 1.001
    assert all(v > 1.0 for v in vals)


def test_inverse_mills_matches_oracle():
    for x in [0.05, 0.5, 1.0, 1.0360617602022106, 2.0, 8.0, 25.0]:
        assert rel_err(inverse_mills_ratio_r(x), inverse_mills_r(x)) <= 1e-12


def test_gamma_log_concavity_on_grid():
    # ln Gamma(x) >= (ln Gamma(x-d) + ln Gamma(x+d))/2 - 1e-9
    delta = 1e-3
    for x in np.geomspace(0.01, 39.9, 500):
        mid = log_std_normal_tail(float(x))
        avg = 0.5 * (log_std_normal_tail(float(x) - delta) + log_std_normal_tail(float(x) + delta))
        assert mid >= avg - 1e-9


def test_domain_errors():
    with pytest.raises(DomainError):
        std_normal_tail(float("nan"))
    with pytest.raises(DomainError):
        std_normal_tail(float("inf"))
    with pytest.raises(DomainError):
        inverse_mills_ratio_r(0.0)
    with pytest.raises(DomainError):
        inverse_mills_ratio_r(-1.0)
    with pytest.raises(DomainError):
        mills_ratio(-2.0)
