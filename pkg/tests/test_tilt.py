import math

import numpy as np
import pytest

from rademacher_tails import (
    CapacityError,
    DomainError,
    equal_weights,
    exact_tail,
    from_floats,
    h,
    lyapunov_upper,
    nb_bound,
    random_unit,
    std_normal_tail,
    tilt_identity_residual,
    tilt_summary,
)


def test_single_coefficient_hand_values():
    ts = tilt_summary(from_floats([1.0]), 1.0)
    assert np.allclose(ts.u, [1.0])
    assert abs(ts.m_x - math.tanh(1.0)) <= 1e-15
    assert abs(ts.s_x - 1.0 / math.cosh(1.0)) <= 1e-15
    # closed form at n=1, a=1: L = (1 - tanh^4 x) cosh^3 x
    expected_l = (1.0 - math.tanh(1.0) ** 4) * math.cosh(1.0) ** 3
    assert abs(ts.L_x - expected_l) <= 1e-12


def test_equal_weights_collapse():
    ts = tilt_summary(equal_weights(4), 2.0)
    assert abs(ts.s_x - 1.0 / math.cosh(1.0)) <= 1e-14
    assert abs(ts.m_x - 2.0 * math.tanh(1.0)) <= 1e-14


def test_tilt_domain():
    with pytest.raises(DomainError):
        tilt_summary(from_floats([1.0]), 0.0)
    with pytest.raises(DomainError):
        tilt_summary(from_floats([1.0]), -1.0)


def test_tilted_std_below_one():
    rng = np.random.default_rng(3)
    for _ in range(50):
        coeffs = random_unit(rng, int(rng.integers(1, 10)))
        x = float(rng.uniform(0.05, 4.0))
        ts = tilt_summary(coeffs, x)
        assert 0.0 < ts.s_x < 1.0
        assert ts.m_x > 0.0
        assert ts.L_x > 0.0 and ts.B >= 0.0
        # N itself may underflow float64 for extreme tilts; its log never does
        assert ts.N >= 0.0 and math.isfinite(ts.log_N) and math.isfinite(ts.log_B)


def test_lyapunov_equality_for_single_unit_coefficient():
    for x in [0.3, 1.0, 2.7]:
        lyap, bound = lyapunov_upper(from_floats([1.0]), x)
        assert abs(lyap - bound) <= 1e-12 * max(1.0, bound)


def test_lyapunov_tight_for_equal_weights():
    # both sides collapse to (1 + tanh^2 u) cosh(u) / 2 when all u_i coincide,
    # so equal weights give equality, not strict inequality
    lyap, bound = lyapunov_upper(equal_weights(4), 1.3)
    assert abs(lyap - bound) <= 1e-13


def test_lyapunov_strict_for_unequal_weights():
    lyap, bound = lyapunov_upper(from_floats([0.6, 0.8]), 1.3)
    assert lyap < bound - 1e-6


def test_lyapunov_property_seeded():
    rng = np.random.default_rng(44)
    for _ in range(1000):
        coeffs = random_unit(rng, 8)
        x = float(rng.uniform(0.05, 3.0))
        lyap, bound = lyapunov_upper(coeffs, x)
        assert lyap <= bound + 1e-12


def test_nb_bound_at_zero_is_one():
    assert nb_bound(from_floats([1.0]), 0.0) == 1.0


def test_nb_bound_dominates_exact_small_case():
    coeffs = equal_weights(2)
    assert nb_bound(coeffs, 1.5) >= exact_tail(coeffs, 1.5).probability


def test_nb_bound_dominance_seeded():
    rng = np.random.default_rng(55)
    for _ in range(100):
        coeffs = random_unit(rng, int(rng.integers(1, 13)))
        for x in [0.5, 1.0, 1.5, 2.0, 2.5, 3.0]:
            assert nb_bound(coeffs, x) >= exact_tail(coeffs, x).probability - 1e-12


def test_lemma_bound_combination_concrete():
    # equal weights n = 16 at x = 1.3 keeps every u_i <= u*; composite <= Q
    coeffs = equal_weights(16)
    ts = tilt_summary(coeffs, 1.3)
    assert float(np.max(ts.u)) <= 51.0 / 125.0
    assert ts.composite <= std_normal_tail(1.3) + h(1.3)


def test_n_term_vs_gamma_and_b_term_vs_h():
    # N(x) <= Gamma(x) for x >= x_{3/2}; 2 c_BE B(x) <= h(x) under the u-cap
    rng = np.random.default_rng(66)
    for x in [1.04, 1.3, 2.0, 4.0, 6.0]:
        for _ in range(20):
            coeffs = random_unit(rng, int(rng.integers(1, 13)))
            ts = tilt_summary(coeffs, x)
            assert ts.N <= std_normal_tail(x) + 1e-12
    for x in [1.3, 2.0, 4.0, 6.0]:
        n = 2 * int(math.ceil((x / 0.408) ** 2)) + 8
        jitter = 1.0 + 0.3 * rng.uniform(-1.0, 1.0, n)
        coeffs = from_floats(np.sort(jitter), normalize=True)
        ts = tilt_summary(coeffs, x)
        if float(np.max(ts.u)) <= 51.0 / 125.0:
            assert 2.0 * 0.56 * ts.B <= h(x) + 1e-12


def test_identity_constant_event():
    coeffs = from_floats([0.6, 0.8])
    res = tilt_identity_residual(coeffs, 1.7, lambda vals: np.ones(vals.shape[0]))
    assert res <= 1e-15


def test_identity_tail_event():
    coeffs = from_floats([0.6, 0.8])
    res = tilt_identity_residual(
        coeffs, 1.0, lambda vals: (vals.sum(axis=1) >= 1.0).astype(float)
    )
    assert res <= 1e-12


def test_identity_marginal_event():
    coeffs = equal_weights(8)
    a = coeffs.values[0]
    u = 2.0 * a
    res = tilt_identity_residual(
        coeffs, 2.0, lambda vals: (vals[:, 0] > 0.0).astype(float)
    )
    assert res <= 1e-12
    # the tilted marginal itself: P(first coordinate positive) = e^u/(2 cosh u)
    signs = np.sign
    lhs = math.exp(u) / (2.0 * math.cosh(u))
    values = None  # marginal checked through the residual above
    assert abs(lhs - 1.0 / (1.0 + math.exp(-2.0 * u))) <= 1e-15


def test_identity_capacity():
    with pytest.raises(CapacityError):
        tilt_identity_residual(
            equal_weights(17), 1.0, lambda vals: np.ones(vals.shape[0])
        )


def test_identity_seeded_triples():
    rng = np.random.default_rng(77)
    for _ in range(100):
        n = int(rng.integers(1, 13))
        coeffs = random_unit(rng, n)
        x = float(rng.uniform(0.1, 3.0))
        threshold = float(rng.uniform(-1.0, 1.5))
        res = tilt_identity_residual(
            coeffs, x, lambda vals, t=threshold: (vals.sum(axis=1) >= t).astype(float)
        )
        assert res <= 1e-12
