import math

from rademacher_tails import constants, inverse_mills_ratio_r

from .oracles import big_c, c_star, rel_err


def test_big_c_window_and_oracle():
    c = constants()
    assert 14.10 <= c.C < 14.11
    assert rel_err(c.C, big_c()) <= 1e-13


def test_c_star_window_and_oracle():
    c = constants()
    assert 3.1786 <= c.c_star < 3.1787
    assert rel_err(c.c_star, c_star()) <= 1e-13


def test_exact_rationals():
    c = constants()
    assert c.c_BE == 56.0 / 100.0
    assert c.u_star == 51.0 / 125.0


def test_k_formula():
    c = constants()
    expected = math.log(c.C / (2.0 * math.sqrt(2.0 * math.pi) * c.c_BE))
    assert abs(c.K - expected) <= 1e-15
    assert abs(c.K - 1.614394) <= 1e-6


def test_x_three_halves():
    c = constants()
    assert 1.03 <= c.x_three_halves < 1.04
    assert abs(inverse_mills_ratio_r(c.x_three_halves) - 1.5) <= 1e-10


def test_x_star_window():
    c = constants()
    assert 7.39 <= c.x_star < 7.40


def test_constants_cached_and_immutable():
    assert constants() is constants()
