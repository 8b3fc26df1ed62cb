"""Arbitrary-precision Gamma, zeta, binomials, Bernoulli numbers."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from mpmath import mp, mpf, mpc

from su3asym.special_functions import (
    GammaPoleError,
    ZetaPoleError,
    bernoulli_fraction,
    bernoulli_mpf,
    binom_general,
    gamma_complex,
    zeta_complex,
)

mp.dps = 60
TOL = mpf("1e-55")


def test_gamma_known_values():
    assert abs(gamma_complex(mpf("0.5")) - mp.sqrt(mp.pi)) < TOL
    assert abs(gamma_complex(5) - 24) < TOL
    third = mpf(1) / 3
    prod = gamma_complex(third) * gamma_complex(2 * third)
    assert abs(prod - 2 * mp.pi / mp.sqrt(3)) < TOL


def test_gamma_reflection_formula_complex():
    z = mpc("0.3", "4.0")
    lhs = gamma_complex(z) * gamma_complex(1 - z)
    rhs = mp.pi / mp.sin(mp.pi * z)
    assert abs(lhs - rhs) < TOL * max(1, abs(rhs))


def test_gamma_agrees_with_mpmath_oracle():
    for z in (mpf("20.5"), mpc("2.5", "3.0"), mpc("-1.7", "0.4"), mpc("0.1", "-30")):
        ours = gamma_complex(z)
        ref = mp.gamma(z)
        assert abs(ours - ref) < mpf("1e-52") * max(1, abs(ref))


def test_gamma_poles_raise():
    for bad in (0, -1, -7):
        with pytest.raises(GammaPoleError):
            gamma_complex(bad)


def test_zeta_known_values():
    assert abs(zeta_complex(2) - mp.pi**2 / 6) < TOL
    assert abs(zeta_complex(0) + mpf(1) / 2) < TOL
    assert abs(zeta_complex(-1) + mpf(1) / 12) < TOL
    assert abs(zeta_complex(-2)) < TOL  # trivial zero
    assert abs(zeta_complex(8) - mp.pi**8 / 9450) < TOL


def test_zeta_functional_equation():
    s = mpc("0.3", "2.0")
    lhs = zeta_complex(s)
    rhs = (
        2**s
        * mp.pi ** (s - 1)
        * mp.sin(mp.pi * s / 2)
        * gamma_complex(1 - s)
        * zeta_complex(1 - s)
    )
    assert abs(lhs - rhs) < mpf("1e-52") * max(1, abs(lhs))


def test_zeta_branches_agree():
    s = mpf("-0.4")
    em = zeta_complex(s, force_branch="em")
    refl = zeta_complex(s, force_branch="reflect")
    assert abs(em - refl) < mpf("1e-52")


def test_zeta_agrees_with_mpmath_oracle():
    for s in (mpc("2.5", "10"), mpf("1.001"), mpc("0.5", "14.13")):
        ours = zeta_complex(s)
        ref = mp.zeta(s)
        assert abs(ours - ref) < mpf("1e-50") * max(1, abs(ref))


def test_zeta_pole_raises():
    with pytest.raises(ZetaPoleError):
        zeta_complex(1)


def test_binomials():
    assert abs(binom_general(mpf("0.5"), 2) + mpf(1) / 8) < TOL
    assert binom_general(mpf("3.7"), 0) == 1
    for n in range(8):
        for k in range(n + 1):
            assert abs(binom_general(mpf(n), k) - math.comb(n, k)) < TOL
    assert abs(binom_general(mpf(-1), 3) + 1) < TOL


def test_bernoulli_numbers():
    known = {
        0: Fraction(1),
        1: Fraction(-1, 2),
        2: Fraction(1, 6),
        4: Fraction(-1, 30),
        3: Fraction(0),
        12: Fraction(-691, 2730),
    }
    for n, want in known.items():
        assert bernoulli_fraction(n) == want
        assert abs(bernoulli_mpf(n) - mpf(want.numerator) / want.denominator) < TOL
