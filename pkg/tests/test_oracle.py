import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from rademacher_tails import (
    CapacityError,
    DomainError,
    binomial_tail,
    equal_weight_agreement,
    equal_weight_sup,
    equal_weights,
    exact_tail,
    from_floats,
    from_rationals,
    q_bound,
    random_unit,
    verify_comparison_dominance,
    verify_q_bound,
)


def brute_force_tail(values, x):
    # independent oracle: direct itertools enumeration
    n = len(values)
    count = sum(
        1
        for signs in itertools.product((-1.0, 1.0), repeat=n)
        if sum(s * a for s, a in zip(signs, values)) >= x - 1e-12
    )
    return count / 2**n


def test_single_coefficient():
    res = exact_tail(from_floats([1.0]), 0.5)
    assert res.probability == 0.5
    assert res.n_outcomes == 2


def test_two_equal_coefficients_at_sqrt2():
    res = exact_tail(equal_weights(2), math.sqrt(2.0))
    assert res.probability == 0.25
    assert res.atom_mass_at_x == 0.25


def test_three_five_four_five():
    res = exact_tail(from_floats([0.6, 0.8]), 0.2)
    assert res.probability == 0.5
    assert res.atom_mass_at_x == 0.25


def test_matches_itertools_oracle_random():
    rng = np.random.default_rng(7)
    for _ in range(40):
        n = int(rng.integers(1, 9))
        coeffs = random_unit(rng, n)
        x = float(rng.uniform(0.0, 2.5))
        assert exact_tail(coeffs, x).probability == brute_force_tail(coeffs.values, x)


def test_exact_mode_rational():
    coeffs = from_rationals([Fraction(3, 5), Fraction(4, 5)])
    res = exact_tail(coeffs, Fraction(1, 5))
    assert res.probability == Fraction(1, 2)
    assert res.atom_mass_at_x == Fraction(1, 4)
    assert res.probability.denominator in (1, 2, 4)


def test_exact_mode_denominator_divides_power_of_two():
    coeffs = from_rationals(
        [Fraction(1, 9), Fraction(4, 9), Fraction(8, 9)]
    )  # 1 + 16 + 64 = 81
    for x in [Fraction(0), Fraction(1, 3), Fraction(1)]:
        res = exact_tail(coeffs, x)
        assert (1 << 3) % res.probability.denominator == 0


def test_exact_mode_rejects_float_threshold():
    coeffs = from_rationals([Fraction(3, 5), Fraction(4, 5)])
    with pytest.raises(DomainError):
        exact_tail(coeffs, 0.2)


def test_capacity_cap():
    with pytest.raises(CapacityError):
        exact_tail(equal_weights(25), 1.0)


def test_monotone_in_x():
    rng = np.random.default_rng(11)
    coeffs = random_unit(rng, 6)
    xs = np.linspace(-2.5, 2.5, 60)
    vals = [exact_tail(coeffs, float(x)).probability for x in xs]
    assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_symmetry():
    rng = np.random.default_rng(13)
    for _ in range(10):
        coeffs = random_unit(rng, int(rng.integers(1, 8)))
        x = float(rng.uniform(0.0, 2.0))
        p_right = exact_tail(coeffs, x).probability
        # P(S >= x) = P(S <= -x) = 1 - P(S >= -x) + P(S = -x)
        left = exact_tail(coeffs, -x)
        assert abs(p_right - (1.0 - left.probability + left.atom_mass_at_x)) <= 1e-15


def test_binomial_examples():
    assert binomial_tail(2, math.sqrt(2.0)) == Fraction(1, 4)
    assert binomial_tail(4, 1.0) == Fraction(5, 16)
    assert binomial_tail(1, 0.5) == Fraction(1, 2)


def test_binomial_matches_enumeration():
    grid = [0.1 * k for k in range(1, 50)]
    for n in [1, 2, 3, 5, 8, 12, 16, 20]:
        assert equal_weight_agreement(n, grid)


def test_equal_weight_sup_examples():
    assert equal_weight_sup(1.0, 64) == (Fraction(1, 2), 1)
    assert equal_weight_sup(math.sqrt(2.0), 64) == (Fraction(1, 4), 2)
    assert equal_weight_sup(10.0, 64) == (Fraction(0), 1)


def test_equal_weight_sup_domain():
    with pytest.raises(DomainError):
        equal_weight_sup(1.0, 0)
    with pytest.raises(DomainError):
        equal_weight_sup(1.0, 10_001)


def test_holzman_kleitman_strict_tail():
    # P(S_n > 1) <= 5/16 (strict event: subtract the atom at 1)
    rng = np.random.default_rng(17)
    vectors = [random_unit(rng, int(rng.integers(1, 9))) for _ in range(200)]
    vectors += [equal_weights(n) for n in range(1, 13)]
    for coeffs in vectors:
        res = exact_tail(coeffs, 1.0)
        strict = res.probability - res.atom_mass_at_x
        assert strict <= 5.0 / 16.0 + 1e-12


def test_verify_q_bound_trivial_set():
    violations = verify_q_bound([from_floats([1.0])], [0.5, 1.0])
    assert violations == []


def test_verify_q_bound_seeded_sample():
    rng = np.random.default_rng(101)
    vectors = [random_unit(rng, int(rng.integers(1, 9))) for _ in range(300)]
    grid = [0.1 * k for k in range(1, 51)]
    assert verify_q_bound(vectors, grid) == []


def test_verify_q_bound_margin_at_sqrt2():
    q = q_bound(math.sqrt(2.0)).value
    assert q - 0.25 > 0
    assert verify_q_bound([equal_weights(2)], [math.sqrt(2.0)]) == []


def test_comparison_dominance_seeded_sample():
    rng = np.random.default_rng(202)
    vectors = [random_unit(rng, int(rng.integers(1, 9))) for _ in range(150)]
    grid = [0.1 * k for k in range(1, 51)]
    assert verify_comparison_dominance(vectors, grid) == []
