"""End-to-end comparisons: exact counts vs the expansion, Log G residuals."""

from __future__ import annotations

import pytest
from mpmath import mp, mpf, mpc

from su3asym.exact_counting import EXACT_LIMIT, r_exact
from su3asym.harness import (
    asymptotic_log_G,
    big_A,
    compare_table,
    expansion_residual,
    log_G_direct,
    r_asymptotic,
)
from su3asym.saddle_expansion import constants

mp.dps = 60


def test_big_A_at_one_is_alternating_constant_sum():
    cst = constants()
    want = cst.A1 - cst.A2 - cst.A3 - cst.A4
    assert abs(big_A(1) - want) < mpf("1e-50")


def test_big_A_input_guard():
    with pytest.raises(ValueError):
        big_A(0)


def test_r_asymptotic_close_to_exact_at_ten_thousand():
    n = 10000
    exact = mpf(r_exact(n)[n])
    approx = r_asymptotic(n, 2)
    assert approx.sign == 1
    ratio = exact / mp.exp(approx.log_abs)
    assert mpf("0.98") < ratio < mpf("1.0")


def test_r_asymptotic_guards():
    with pytest.raises(ValueError):
        r_asymptotic(0, 2)
    with pytest.raises(ValueError):
        r_asymptotic(100, -1)


def test_log_G_direct_matches_partial_sums():
    # At z = 3 the generating series converges fast: 80 terms give ~100 digits
    z = mpf(3)
    vals = r_exact(80)
    partial = sum(mpf(v) * mp.exp(-z * n) for n, v in enumerate(vals))
    assert abs(mp.exp(log_G_direct(z)) - partial) < mpf("1e-55")


def test_log_G_direct_conjugate_symmetry():
    z = mpc("0.5", "0.3")
    a = log_G_direct(z)
    b = log_G_direct(mp.conj(z))
    assert abs(mp.conj(a) - b) < mpf("1e-55")


def test_log_G_direct_requires_positive_real_part():
    with pytest.raises(ValueError):
        log_G_direct(mpf("-0.1"))
    with pytest.raises(ValueError):
        log_G_direct(mpc(0, 1))


def test_asymptotic_log_G_eta_domain():
    z = mpf("0.1")
    for bad in (mpf(0), mpf("-0.5"), mpf("1.5"), mpf("0.4")):
        with pytest.raises(ValueError):
            asymptotic_log_G(z, bad)
    # valid etas on either side of a half-integer give the same truncation
    assert abs(asymptotic_log_G(z, mpf("1.2")) - asymptotic_log_G(z, mpf("1.4"))) == 0


def test_asymptotic_log_G_cone_guard():
    with pytest.raises(ValueError):
        asymptotic_log_G(mpc(1, 2), mpf("1.25"))  # arg z > pi/4


def test_expansion_residual_magnitude():
    res = expansion_residual(mpf("0.1"), mpf("1.25"))
    assert mpf("1e-8") < res < mpf("1e-6")  # the first omitted term is nu_1 z^1.5 ~ 3e-7


def test_expansion_residual_shrinks_with_eta():
    z = mpf("0.05")
    assert expansion_residual(z, mpf("2.25")) < expansion_residual(z, mpf("1.25"))


def test_compare_table_small_run():
    table = compare_table([500, 1000, 2000], 1)
    assert len(table.rows) == 6
    assert set(table.fitted_exponent) == {0, 1}
    for row in table.rows:
        assert row.ratio > 0
    last = [r for r in table.rows if r.n == 2000 and r.L == 1][0]
    assert mpf("0.9") < last.ratio < mpf("1.0")
    # scaled residuals shrink when another correction term is included
    r0 = [r for r in table.rows if r.n == 2000 and r.L == 0][0]
    assert abs(last.residual_scaled) < abs(r0.residual_scaled)


def test_compare_table_exact_cap_guard():
    with pytest.raises(ValueError):
        compare_table([EXACT_LIMIT + 1], 0)


def test_compare_table_fit_needs_three_points():
    table = compare_table([1000, 2000], 0)
    assert table.fitted_exponent[0] is None
