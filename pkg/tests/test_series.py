"""Truncated power series and polynomial-coefficient arithmetic."""

from __future__ import annotations

import math

import pytest
from mpmath import mp, mpf, mpc

from su3asym.series import PowerSeries
from su3asym.xpoly import XPolynomial


def mpf_identity(order):
    return PowerSeries.identity(order, one=mpf(1))


def test_constructor_semantics():
    s = PowerSeries([mpf(2), mpf(3)], valuation=1)
    assert s.valuation == 1
    assert s.order == 3
    assert s.coeff(1) == 2
    assert s.coeff(2) == 3
    assert s.coeff(0) == 0
    with pytest.raises(ValueError):
        s.coeff(3)  # at/beyond truncation order is unknown, not zero


def test_mul_matches_hand_expansion():
    # (1 + x)^2 = 1 + 2x + x^2
    one_plus_x = PowerSeries.from_polynomial([mpf(1), mpf(1)], 5)
    sq = one_plus_x * one_plus_x
    assert [sq.coeff(k) for k in range(3)] == [1, 2, 1]
    assert all(sq.coeff(k) == 0 for k in range(3, sq.order))


def test_mul_valuation_and_order_tracking():
    # x^2 * x^3 = x^5; truncation order of a product is limited by both factors
    a = PowerSeries.from_polynomial([mpf(1)], 6, valuation=2)
    b = PowerSeries.from_polynomial([mpf(1)], 7, valuation=3)
    prod = a * b
    assert prod.coeff(5) == 1
    assert prod.order <= min(a.order + b.valuation, b.order + a.valuation)


def test_division_geometric_series():
    one = PowerSeries.constant(mpf(1), 10)
    one_minus_x = PowerSeries.from_polynomial([mpf(1), mpf(-1)], 10)
    geo = one / one_minus_x
    assert all(abs(geo.coeff(k) - 1) < mpf("1e-55") for k in range(10))


def test_exp_coefficients_are_inverse_factorials():
    e = mpf_identity(12).exp()
    for k in range(12):
        assert abs(e.coeff(k) - mpf(1) / math.factorial(k)) < mpf("1e-50")


def test_exp_of_zero_series_is_one():
    zero = PowerSeries.constant(mpf(0), 6)
    e = zero.exp()
    assert e.coeff(0) == 1
    assert all(e.coeff(k) == 0 for k in range(1, 6))


def test_exp_requires_zero_constant_term():
    with pytest.raises(ValueError):
        PowerSeries.constant(mpf(1), 5).exp()


def test_log_exp_roundtrip():
    f = PowerSeries.from_polynomial([mpf(0), mpf(1), mpf(0), mpf(3)], 12)
    g = f.exp().log()
    for k in range(12):
        assert abs(g.coeff(k) - f.coeff(k)) < mpf("1e-50")


def test_log_requires_unit_constant_term():
    with pytest.raises(ValueError):
        PowerSeries.from_polynomial([mpf(2), mpf(1)], 5).log()


def test_pow_real_binomial_series():
    # (1 + x)^(1/2): coefficients are the generalized binomials C(1/2, k)
    one_plus_x = PowerSeries.from_polynomial([mpf(1), mpf(1)], 8)
    h = one_plus_x.pow_real(mpf(1) / 2)
    expected = [mpf(1), mpf("0.5"), mpf(-1) / 8, mpf(1) / 16, mpf(-5) / 128]
    for k, want in enumerate(expected):
        assert abs(h.coeff(k) - want) < mpf("1e-50")
    # consistency: h * h recovers 1 + x
    sq = h * h
    assert abs(sq.coeff(0) - 1) < mpf("1e-50")
    assert abs(sq.coeff(1) - 1) < mpf("1e-50")
    assert all(abs(sq.coeff(k)) < mpf("1e-50") for k in range(2, sq.order))


def test_differentiate_integrate_roundtrip():
    f = PowerSeries([mpf(3), mpf(1), mpf(4), mpf(1), mpf(5)], order=5)
    g = f.differentiate().integrate()
    for k in range(1, 5):
        assert abs(g.coeff(k) - f.coeff(k)) < mpf("1e-55")
    assert g.coeff(0) == 0


def test_compose_substitutes_inner_series():
    # exp(x) composed with 2x^2 = exp(2x^2): coefficient of x^(2k) is 2^k / k!
    outer = mpf_identity(10).exp()
    inner = PowerSeries.from_polynomial([mpf(2)], 10, valuation=2)
    comp = outer.compose(inner)
    for k in range(5):
        assert abs(comp.coeff(2 * k) - mpf(2) ** k / math.factorial(k)) < mpf("1e-50")
        if 2 * k + 1 < comp.order:
            assert abs(comp.coeff(2 * k + 1)) < mpf("1e-50")


def test_revert_is_compositional_inverse():
    f = PowerSeries.from_polynomial([mpf(0), mpf(1), mpf(1)], 9)  # x + x^2
    g = f.revert()
    ident = f.compose(g)
    assert abs(ident.coeff(1) - 1) < mpf("1e-50")
    for k in range(2, ident.order):
        assert abs(ident.coeff(k)) < mpf("1e-50")


def test_drop_below_and_truncate():
    f = PowerSeries([mpf(1), mpf(2), mpf(3), mpf(4)], valuation=-2, order=2)
    low = f.drop_below(0)
    assert low.valuation >= 0
    assert low.coeff(0) == 3
    assert low.coeff(1) == 4
    t = f.truncate(1)
    assert t.order == 1
    assert t.coeff(-2) == 1
    assert t.coeff(0) == 3
    with pytest.raises(ValueError):
        t.coeff(1)


# -- XPolynomial coefficients --------------------------------------------------------


def test_xpoly_degree_and_arithmetic():
    p = XPolynomial([mpf(1), mpf(0), mpf(2)])  # 1 + 2 x^2
    q = XPolynomial([mpf(0), mpf(3)])  # 3 x
    assert p.degree == 2
    assert q.degree == 1
    prod = p * q
    assert prod.degree == 3
    assert prod.coeff(1) == 3
    assert prod.coeff(3) == 6
    tot = p + q
    assert [tot.coeff(k) for k in range(3)] == [1, 3, 2]


def test_xpoly_effective_degree_ignores_numerical_dust():
    p = XPolynomial([mpf(1), mpf(0), mpf("1e-70")])
    assert p.degree == 2
    assert p.effective_degree(mpf("1e-60")) == 0


def test_series_over_xpoly_ring():
    # (1 + i x z)(1 - i x z) = 1 + x^2 z^2 in the mixed polynomial/series ring
    ix = XPolynomial([mpf(0), mpc(0, 1)])
    one = XPolynomial([mpf(1)])
    f = PowerSeries.from_polynomial([one, ix], 4)
    g = PowerSeries.from_polynomial([one, -ix], 4)
    prod = f * g
    assert prod.coeff(0).coeff(0) == 1
    assert prod.coeff(1).is_zero()
    c2 = prod.coeff(2)
    assert c2.coeff(2) == 1
    assert c2.coeff(0) == 0


def test_series_exp_over_xpoly_ring_keeps_polynomial_coeffs():
    # exp(x z): z^k coefficient is x^k / k!, an XPolynomial of degree k
    x = XPolynomial([mpf(0), mpf(1)])
    f = PowerSeries.from_polynomial([x], 6, valuation=1)
    e = f.exp()
    for k in range(6):
        ck = e.coeff(k)
        assert isinstance(ck, XPolynomial)
        assert abs(ck.coeff(k) - mpf(1) / math.factorial(k)) < mpf("1e-50")
