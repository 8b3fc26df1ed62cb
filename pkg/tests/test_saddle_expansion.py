"""Expansion constants, saddle series, Laurent split, polynomial ladders, C_j."""

from __future__ import annotations

import pytest
from mpmath import mp, mpf, mpc

from su3asym.saddle_expansion import (
    MAX_C_ORDER,
    MAX_LADDER_ORDER,
    MAX_SADDLE_ORDER,
    c_constants,
    c_constants_detail,
    constants,
    expansion_polys,
    laurent_main,
    nu_coeff,
    nu_growth_fit,
    saddle_residual_max,
    saddle_series,
)
from su3asym.special_functions import gamma_complex, zeta_complex

mp.dps = 60
TOL = mpf("1e-50")


def test_constants_defining_closed_forms():
    cst = constants()
    third = mpf(1) / 3
    x_def = (gamma_complex(third) ** 2 * zeta_complex(5 * third) / 9) ** (mpf(3) / 10)
    y_def = -mp.sqrt(mp.pi) * zeta_complex(mpf("0.5")) * zeta_complex(mpf("1.5"))
    assert abs(cst.X - x_def) < TOL
    assert abs(cst.Y - y_def) < TOL


def test_constants_internal_identities():
    cst = constants()
    X, Y = cst.X, cst.Y
    assert abs(cst.A1 - 5 * X**2) < TOL
    assert abs(cst.A2 - Y / X) < TOL
    assert abs(cst.A3 - 3 * Y**2 / (80 * X**4)) < TOL
    assert abs(cst.A4 - 11 * Y**3 / (3200 * X**7)) < TOL
    assert abs(cst.A5 - Y**4 / (2560 * X**10)) < TOL
    c0_def = 2 * mp.sqrt(3 * mp.pi) / mp.sqrt(5) * X ** (mpf(1) / 3) * mp.exp(-cst.A5)
    assert abs(cst.C0 - c0_def) < TOL


def test_saddle_series_closed_form_coefficients():
    cst = constants()
    X, Y = cst.X, cst.Y
    rho = saddle_series(8).rho
    assert abs(rho[0] - 1) < TOL
    assert abs(rho[1] + 3 * Y / (20 * X**3)) < TOL
    assert abs(rho[2] + 3 * Y**2 / (800 * X**6)) < TOL
    assert abs(rho[3] + 11 * Y**3 / (64000 * X**9)) < TOL
    assert abs(rho[4]) < TOL  # this coefficient vanishes
    assert abs(rho[5] - 4959 * Y**5 / (2048000000 * X**15)) < TOL


def test_saddle_series_residual_vanishes():
    assert saddle_residual_max(25) < mpf("1e-80")


def test_saddle_series_order_guard():
    with pytest.raises(ValueError):
        saddle_series(MAX_SADDLE_ORDER + 1)


def test_nu_first_coefficient():
    # nu_0 = sqrt(2 pi) / (16 pi)^3 * (6!/3!) * zeta(1/2) zeta(7/2), a negative number
    want = (
        mp.sqrt(2 * mp.pi)
        / (16 * mp.pi) ** 3
        * 120
        * zeta_complex(mpf("0.5"))
        * zeta_complex(mpf("3.5"))
    )
    got = nu_coeff(0)
    assert got < 0
    assert abs(got - want) < TOL
    assert abs(got + mpf("0.00389709738506")) < mpf("1e-14")


def test_nu_growth_is_cubic_factorial_scale():
    worst, implied = nu_growth_fit(20)
    # |nu_m|^(1/m) / m^3 stays bounded by a small constant: the series is a
    # genuinely divergent asymptotic one, growing like m^(3m) up to geometry
    assert worst < 1
    assert len(implied) == 20


def test_laurent_main_matches_named_constants():
    cst = constants()
    lm = laurent_main(6)
    # z^-4 .. z^-1 coefficients are A1, -A2, -A3, -A4 (x-degree 0 each)
    for exponent, want in ((-4, cst.A1), (-3, -cst.A2), (-2, -cst.A3), (-1, -cst.A4)):
        poly = lm.coeff(exponent)
        assert abs(poly.coeff(0) - want) < TOL
        assert poly.effective_degree(mpf("1e-45")) == 0
    # z^0 coefficient is -A5 - (5 X^2/3) x^2
    z0 = lm.coeff(0)
    assert abs(z0.coeff(0) + cst.A5) < TOL
    assert abs(z0.coeff(1)) < TOL
    assert abs(z0.coeff(2) + 5 * cst.X**2 / 3) < TOL
    assert z0.effective_degree(mpf("1e-45")) == 2


def test_laurent_positive_part_degree_bounds():
    lm = laurent_main(8)
    for ell in range(1, 8):
        assert lm.coeff(ell).effective_degree(mpf("1e-40")) <= (ell + 4) // 2


def test_ladder_shapes_and_units():
    lad = expansion_polys(4)
    assert lad.M == 4
    for seq in (lad.p1, lad.p2, lad.p3, lad.p4):
        assert len(seq) == 5
        unit = seq[0]
        assert abs(unit.coeff(0) - 1) < TOL
        assert unit.effective_degree(mpf("1e-45")) == 0


def test_ladder_product_is_convolution_of_factors():
    lad = expansion_polys(3)
    for m in range(4):
        conv = None
        for a in range(m + 1):
            for b in range(m + 1 - a):
                c = m - a - b
                term = lad.p1[a] * lad.p2[b] * lad.p3[c]
                conv = term if conv is None else conv + term
        top = max(conv.degree, lad.p4[m].degree)
        worst = max(abs(conv.coeff(k) - lad.p4[m].coeff(k)) for k in range(top + 1))
        assert worst < mpf("1e-45")


def test_ladder_order_guard():
    with pytest.raises(ValueError):
        expansion_polys(MAX_LADDER_ORDER + 1)


def test_c_constants_pipeline_head():
    cst = constants()
    cs = c_constants(2)
    assert abs(cs[0] - cst.C0) < TOL
    # regression anchors for the next two correction constants
    assert abs(cs[1] + mpf("0.600851634164368859113838")) < mpf("1e-22")
    assert abs(cs[2] + mpf("0.266043633258136158565969")) < mpf("1e-22")


def test_c_constants_are_real():
    values, dust = c_constants_detail(3)
    assert dust < mpf("1e-45")
    assert len(values) == 4


def test_c_constants_order_guard():
    with pytest.raises(ValueError):
        c_constants(MAX_C_ORDER + 1)
