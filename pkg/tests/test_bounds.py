import math

import numpy as np
import pytest

from rademacher_tails import (
    BoundKind,
    DomainError,
    best_bound,
    comparison_bound,
    constants,
    h,
    log_h,
    log_q,
    log_std_normal_tail,
    q_bound,
    qhat_iid_bound,
    ratio_table,
    std_normal_tail,
    student_t_bound,
)

from .oracles import gauss_tail, h_fn, q_fn, rel_err

import mpmath as mp

GRID = np.geomspace(1e-3, 40.0, 10_000)


def test_equality_anchor_remark_one():
    assert abs(q_bound(1.0).value - 0.5) <= 1e-12


def test_h_examples():
    # Gamma(1) + h(1) = 1/2  =>  h(1) = 1/2 - Gamma(1)
    assert abs(h(1.0) - (0.5 - std_normal_tail(1.0))) <= 1e-15
    assert rel_err(h(0.0), h_fn(0)) <= 1e-13
    # C/(9 sqrt(2 pi)) = 0.6253137...
    assert abs(h(0.0) - 0.625314) <= 1e-5
    # h(50) is far below any representable float; check in log space
    assert log_h(50.0) < math.log(1e-300) - 100


def test_h_against_oracle_grid():
    for x in [0.2, 1.0, 2.46, 7.0, 20.0]:
        assert rel_err(h(x), h_fn(x)) <= 1e-13


def test_q_bound_examples():
    near_zero = q_bound(1e-4, clamp=True)
    assert near_zero.value == 1.0 and near_zero.clamped
    raw = q_bound(1e-4).value
    assert rel_err(raw, q_fn(1e-4)) <= 1e-12
    assert abs(raw - 1.12533) <= 1e-4

    ratio = q_bound(2.46).value / std_normal_tail(2.46)
    assert abs(ratio - 3.61) <= 0.01


def test_q_bound_domain():
    for bad in [0.0, -1.0, float("inf")]:
        with pytest.raises(DomainError):
            q_bound(bad)


def test_sandwich_on_log_grid():
    # Gamma(x) < Q(x) < Gamma(x) (1 + C/x), evaluated in log space
    big_c = constants().C
    for x in GRID:
        x = float(x)
        lg = log_std_normal_tail(x)
        lq = log_q(x)
        assert lq > lg
        assert lq < lg + math.log1p(big_c / x)


def test_lemma_h_less_than_c_gamma_over_x_and_monotone():
    big_c = constants().C
    prev = -math.inf
    for x in GRID:
        x = float(x)
        # x h(x) / Gamma(x), strictly increasing from 0 to C
        val = math.exp(math.log(x) + log_h(x) - log_std_normal_tail(x))
        assert val < big_c
        assert val > prev
        prev = val


def test_gamma_plus_h_strictly_decreasing():
    vals = [log_q(float(x)) for x in GRID]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_comparison_bounds_trivial_examples():
    assert comparison_bound(BoundKind.Hoeffding, 0.0).value == 1.0
    bd = comparison_bound(BoundKind.BentkusDzindzalieta, math.sqrt(2.0))
    assert abs(bd.value - 0.25) <= 1e-15
    cs = comparison_bound(BoundKind.PinelisCStar, math.sqrt(2.0))
    assert abs(cs.value - 0.25) <= 1e-12


def test_comparison_bound_formulas():
    x = 1.2
    assert comparison_bound(BoundKind.Hoeffding, x).value == math.exp(-0.5 * x * x)
    assert comparison_bound(BoundKind.ChebyshevSym, x).value == 0.5 / (x * x)
    expected_bd = 0.25 + 0.125 * (1.0 - math.sqrt(2.0 - 2.0 / (x * x)))
    assert comparison_bound(BoundKind.BentkusDzindzalieta, x).value == expected_bd
    assert comparison_bound(BoundKind.SmallXComposite, 0.7).value == 0.5
    assert comparison_bound(BoundKind.SmallXComposite, 1.25).value == 0.5 / 1.25**2
    assert comparison_bound(BoundKind.SmallXComposite, 1.5).value == 3.22 * std_normal_tail(1.5)


def test_comparison_bound_domain_errors():
    cases = [
        (BoundKind.BentkusDzindzalieta, 1.0),
        (BoundKind.BentkusDzindzalieta, 1.5),
        (BoundKind.ChebyshevSym, 1.0),
        (BoundKind.SmallXComposite, 1.8),
        (BoundKind.Hoeffding, -0.5),
    ]
    for kind, x in cases:
        with pytest.raises(DomainError):
            comparison_bound(kind, x)


def test_best_bound_envelope():
    for x in [0.5, 1.2, 1.41, 2.0, 3.5]:
        env = best_bound(x).value
        assert env <= q_bound(x).value + 1e-15
        for kind in BoundKind:
            try:
                assert env <= comparison_bound(kind, x).value + 1e-15
            except DomainError:
                pass


def test_qhat_node_and_midpoint():
    # n = 4: lattice is the integers; x = 2 is a node
    assert abs(qhat_iid_bound(4, 2.0).value - 2.0 * q_bound(2.0).value) <= 1e-14
    # midpoint: 2 * (Q(1) + Q(2))/2 = Q(1) + Q(2)
    expected = q_bound(1.0).value + q_bound(2.0).value
    assert abs(qhat_iid_bound(4, 1.5).value - expected) <= 1e-14
    # n = 1: lattice is the odd integers; 2 Q(1) = 1
    res = qhat_iid_bound(1, 1.0, clamp=True)
    assert res.value == 1.0
    assert abs(qhat_iid_bound(1, 1.0).value - 1.0) <= 1e-12


def test_qhat_matches_q_at_all_lattice_nodes():
    for n in [1, 2, 3, 4, 7, 12]:
        step = 2.0 / math.sqrt(n)
        shift = 0.5 * step if n % 2 else 0.0
        for k in range(0, 8):
            node = shift + k * step
            if node <= 0.0:
                continue
            got = qhat_iid_bound(n, node).value
            expected = 2.0 * q_bound(node).value
            assert abs(got - expected) <= 1e-14


def test_qhat_piecewise_linear_second_differences():
    # inside one cell, second differences of Qhat vanish
    for n in [3, 5, 8]:
        step = 2.0 / math.sqrt(n)
        shift = 0.5 * step if n % 2 else 0.0
        base = shift + 2 * step + 0.1 * step
        xs = [base + i * 0.2 * step for i in range(4)]
        vals = [qhat_iid_bound(n, x).value for x in xs]
        second = [vals[i + 2] - 2 * vals[i + 1] + vals[i] for i in range(2)]
        assert all(abs(d) <= 1e-12 for d in second)


def test_student_examples():
    assert abs(student_t_bound(1.0, 2).value - 0.5) <= 1e-12
    vac = student_t_bound(0.0, 5, clamp=True)
    assert vac.value == 1.0
    res = student_t_bound(10.0, 2)
    x = math.sqrt(2.0) * 10.0 / math.sqrt(101.0)
    assert abs(res.x - x) <= 1e-15
    assert abs(res.value - q_bound(x).value) <= 1e-15


def test_student_nonincreasing_in_t():
    # the raw bound jumps from the vacuous 1 to Q(0+) ~ 1.125 at t = 0+, so
    # monotonicity is a statement about the clamped bound (and about t > 0 raw)
    for n in [2, 3, 10]:
        ts = np.linspace(-1.0, 12.0, 80)
        vals = [student_t_bound(float(t), n, clamp=True).value for t in ts]
        assert all(a >= b - 1e-15 for a, b in zip(vals, vals[1:]))
        raw = [student_t_bound(float(t), n).value for t in np.linspace(0.2, 12.0, 60)]
        assert all(a >= b - 1e-15 for a, b in zip(raw, raw[1:]))


def test_student_domain():
    with pytest.raises(DomainError):
        student_t_bound(1.0, 1)


def test_ratio_table_values():
    [(x, q_ratio, hoeff_ratio, cs)] = ratio_table([0.001])
    # ratio(0.001) = 2.2516253...; the x->0+ limit 1 + 2C/(9 sqrt(2 pi)) = 2.2506274
    limit = 1 + 2 * mp.mpf(str(constants().C)) / (9 * mp.sqrt(2 * mp.pi))
    assert abs(q_ratio - 2.2516253) <= 1e-6
    assert rel_err(q_ratio, q_fn(0.001) / gauss_tail(0.001)) <= 1e-10
    assert abs(float(limit) - 2.2506274) <= 1e-6

    [(_, peak_ratio, _, _)] = ratio_table([2.46])
    assert abs(peak_ratio - 3.61) <= 0.01

    [(_, far_ratio, _, _)] = ratio_table([50.0])
    assert 1.0 < far_ratio < 1.29


def test_ratio_table_unimodal_on_grid():
    xs = [round(0.01 * k, 6) for k in range(1, 501)]
    rows = ratio_table(xs)
    ratios = [r[1] for r in rows]
    peak = max(range(len(ratios)), key=lambda i: ratios[i])
    assert all(ratios[i] <= ratios[i + 1] + 1e-12 for i in range(peak))
    assert all(ratios[i] >= ratios[i + 1] - 1e-12 for i in range(peak, len(ratios) - 1))


def test_ratio_table_domain_errors():
    with pytest.raises(DomainError):
        ratio_table([1.0, 0.5])
    with pytest.raises(DomainError):
        ratio_table([0.0, 1.0])
