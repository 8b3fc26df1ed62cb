"""Saddle-point expansion ingredients for the SU(3) representation counts.

Everything here feeds the asymptotic formula

    r(n)  ~  n^(-3/5) * A(n) * sum_{j >= 0} C_j n^(-j/10),
    A(n) := exp(A1 n^(2/5) - A2 n^(3/10) - A3 n^(1/5) - A4 n^(1/10)),

whose ingredients are computed symbolically to any order:

* ``constants`` -- the base constants built from Gamma- and zeta-values:

      X  = (Gamma(1/3)^2 zeta(5/3) / 9)^(3/10),
      Y  = -sqrt(pi) zeta(1/2) zeta(3/2),
      A1 = 5 X^2,             A2 = Y / X,
      A3 = 3 Y^2 / (80 X^4),  A4 = 11 Y^3 / (3200 X^7),
      A5 = Y^4 / (2560 X^10),
      C0 = (2 sqrt(3 pi) / sqrt(5)) X^(1/3) exp(-A5).

* ``saddle_series`` -- the saddle-point function S(x) = 1 + sum rho(m) x^m
  solving  F(S(x); x) = 0  for  F(z; w) = -2X^2 z^(-5/3) + Y w / (2X z^(3/2))
  + 2X^2, found by Newton iteration on truncated power series.

* ``nu_coeff`` -- the coefficients of the generating-function expansion

      nu_m = sqrt(2 pi) / ((16 pi)^3 (8^5 pi^4)^m) * binom(2m, m)/(m+1)
             * (6m+6)!/(3m+3)! * zeta(m+1/2) * zeta(3m+7/2).

* ``laurent_main`` -- the Laurent expansion in z (coefficients are
  polynomials in x) of

      z^(-4) (3X^2 B^(-2/3) - (Y z / X) B^(-1/2) + 2 X^2 B),
      B := S(z) + i x z^2,

  whose singular part is A1/z^4 - A2/z^3 - A3/z^2 - A4/z - A5 - (5X^2/3)x^2;
  the identity of the z^0 coefficient with -A5 - (5X^2/3)x^2 doubles as a
  hard consistency check of A5 and aborts loudly on mismatch.

* ``expansion_polys`` -- the three polynomial ladders P[1], P[2], P[3]
  (exponential of the nu-terms, exponential of the positive Laurent part,
  and the -1/3 power of B) and their product ladder P[4], as polynomials in
  x indexed by powers of n^(-1/10).

* ``c_constants`` -- the coefficients C_m obtained by integrating P[4]_m
  against the Gaussian exp(-5 X^2 x^2 / 3) using the closed-form even
  moments  integral x^(2k) e^(-b x^2) dx = Gamma(k + 1/2) / b^(k + 1/2).

All numbers are mpmath ``mpf``/``mpc`` values at the working precision of
:mod:`su3asym.precision`; ladders are cached per (order, precision).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .precision import working_digits
from .series import PowerSeries
from .special_functions import gamma_complex, zeta_complex
from .xpoly import XPolynomial

__all__ = [
    "ExpansionConstants",
    "SaddleSeries",
    "LadderPolys",
    "constants",
    "saddle_series",
    "saddle_residual_max",
    "nu_coeff",
    "nu_growth_fit",
    "laurent_main",
    "expansion_polys",
    "c_constants",
    "c_constants_detail",
]

MAX_SADDLE_ORDER = 60
MAX_LADDER_ORDER = 20
MAX_C_ORDER = 18


@dataclass(frozen=True)
class ExpansionConstants:
    """The base constants of the asymptotic expansion (see module docstring)."""

    X: mpf
    Y: mpf
    A1: mpf
    A2: mpf
    A3: mpf
    A4: mpf
    A5: mpf
    C0: mpf


@dataclass(frozen=True)
class SaddleSeries:
    """Coefficients of the saddle-point function S(x) = sum rho[m] x^m.

    ``rho[0] = 1`` and all entries are real ``mpf`` values; ``order`` is the
    largest index carried.
    """

    rho: tuple
    order: int


@dataclass(frozen=True)
class LadderPolys:
    """The four polynomial ladders up to index ``M``.

    ``p1``, ``p2``, ``p3`` and ``p4`` are tuples of length M+1 of
    :class:`XPolynomial`; index 0 holds the unit constant term of each
    ladder (the series all start 1 + ...).  Degree bounds deg(p1[m]) <= m/2,
    deg(p2[m]) <= 2m, deg(p3[m]) <= m/2 are enforced at construction.
    """

    M: int
    p1: tuple
    p2: tuple
    p3: tuple
    p4: tuple


_CONSTANTS_CACHE: dict = {}
_LADDER_CACHE: dict = {}
_LAURENT_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def constants() -> ExpansionConstants:
    """All base constants at the current working precision."""
    prec = working_digits()
    with _CACHE_LOCK:
        hit = _CONSTANTS_CACHE.get(prec)
    if hit is not None:
        return hit
    with mp.workdps(prec + 15):
        third = mpf(1) / 3
        X = (gamma_complex(third) ** 2 * zeta_complex(mpf(5) / 3) / 9) ** (mpf(3) / 10)
        X = mp.re(X)
        Y = -mp.sqrt(mp.pi) * mp.re(zeta_complex(mpf(1) / 2)) * mp.re(zeta_complex(mpf(3) / 2))
        A1 = 5 * X**2
        A2 = Y / X
        A3 = 3 * Y**2 / (80 * X**4)
        A4 = 11 * Y**3 / (3200 * X**7)
        A5 = Y**4 / (2560 * X**10)
        C0 = 2 * mp.sqrt(3 * mp.pi / 5) * X**third * mp.exp(-A5)
        out = ExpansionConstants(
            X=+X, Y=+Y, A1=+A1, A2=+A2, A3=+A3, A4=+A4, A5=+A5, C0=+C0
        )
    with _CACHE_LOCK:
        _CONSTANTS_CACHE[prec] = out
    return out


# -- saddle-point function ---------------------------------------------------------


def _check_saddle_order(order: int) -> None:
    if order < 1:
        raise ValueError("order must be a positive integer")
    if order > MAX_SADDLE_ORDER:
        raise ValueError(
            f"order {order} exceeds {MAX_SADDLE_ORDER}; the Newton iteration "
            "loses roughly one digit per order, so raise the working precision "
            "(set_working_digits / RN_PREC) and lift MAX_SADDLE_ORDER deliberately"
        )


def _saddle_F(g: PowerSeries, x: PowerSeries, X, Y) -> PowerSeries:
    """F(g(x); x) = -2X^2 g^(-5/3) + Y x g^(-3/2) / (2X) + 2X^2."""
    t1 = g.pow_real(mpf(-5) / 3).scalar_mul(-2 * X**2)
    t2 = (g.pow_real(mpf(-3) / 2) * x).scalar_mul(Y / (2 * X))
    return (t1 + t2).truncate(g.order) + 2 * X**2


def _saddle_series_raw(order: int, X, Y) -> PowerSeries:
    """S as a PowerSeries with mpf coefficients, correct through x^order."""
    target = order + 1  # truncation order (exclusive)
    one = mpf(1)
    g = PowerSeries([one], 0, 1)
    m = 0  # correct through exponent m
    while m < order:
        m2 = min(2 * m + 1, order)
        o2 = m2 + 1
        pad = o2 - g.order
        gk = PowerSeries(tuple(g.coeffs) + (mpf(0),) * pad, 0, o2)
        x = PowerSeries.identity(o2, one)
        F = _saddle_F(gk, x, X, Y)
        Fz = gk.pow_real(mpf(-8) / 3).scalar_mul(10 * X**2 / 3) - (
            gk.pow_real(mpf(-5) / 2) * x
        ).scalar_mul(3 * Y / (4 * X))
        # the residual is O(x^(m+1)) analytically; what is stored below that
        # exponent is roundoff dust
        step = (F.drop_below(m + 1) / Fz.truncate(o2)).truncate(o2)
        g = (gk - step).truncate(o2)
        m = m2
    return g.truncate(target)


def saddle_series(order: int) -> SaddleSeries:
    """The saddle-point function S(x) = 1 + sum_{m>=1} rho(m) x^m.

    Solves F(S(x); x) = 0 by Newton iteration on truncated series; the
    residual series of the returned solution vanishes to the requested
    order (see :func:`saddle_residual_max`).
    """
    _check_saddle_order(order)
    prec = working_digits()
    cst = constants()
    with mp.workdps(prec + 15 + order):
        g = _saddle_series_raw(order, cst.X, cst.Y)
        rho = tuple(+mp.re(g.coeff(k)) for k in range(order + 1))
    return SaddleSeries(rho=rho, order=order)


def saddle_residual_max(order: int):
    """max |coefficient| of F(S(x); x) through x^order (should be ~0)."""
    _check_saddle_order(order)
    prec = working_digits()
    cst = constants()
    with mp.workdps(prec + 15 + order):
        g = _saddle_series_raw(order, cst.X, cst.Y)
        x = PowerSeries.identity(g.order, mpf(1))
        F = _saddle_F(g, x, cst.X, cst.Y)
        worst = mpf(0)
        for k in range(F.valuation, F.order):
            worst = max(worst, abs(F.coeff(k)))
    return +worst


# -- nu coefficients ---------------------------------------------------------------


def nu_coeff(m: int):
    """The explicit expansion coefficient nu_m (see module docstring)."""
    if m < 0:
        raise ValueError("m must be a nonnegative integer")
    prec = working_digits()
    with mp.workdps(prec + 15):
        factorial_ratio = math.factorial(6 * m + 6) // math.factorial(3 * m + 3)
        front = mp.sqrt(2 * mp.pi) / ((16 * mp.pi) ** 3 * (mpf(8) ** 5 * mp.pi**4) ** m)
        combinatorial = mpf(math.comb(2 * m, m)) / (m + 1) * factorial_ratio
        zetas = mp.re(zeta_complex(m + mpf(1) / 2)) * mp.re(zeta_complex(3 * m + mpf(7) / 2))
        out = front * combinatorial * zetas
    return +out


def nu_growth_fit(m_max: int = 30):
    """Fit the smallest C with |nu_m| <= C^m m^(3m) for 1 <= m <= m_max.

    Returns (C, implied), where implied[m-1] = (|nu_m| / m^(3m))^(1/m) and
    C is their maximum; boundedness of the implied constants is the growth
    property of the nu_m.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    prec = working_digits()
    implied = []
    with mp.workdps(prec + 15):
        for m in range(1, m_max + 1):
            ratio = abs(nu_coeff(m)) / mpf(m) ** (3 * m)
            implied.append(+(ratio ** (mpf(1) / m)))
    return max(implied), implied


# -- Laurent expansion of the main term --------------------------------------------


def _poly_series_B(order: int, X, Y) -> PowerSeries:
    """B(z) = S(z) + i x z^2 as a series in z with XPolynomial coefficients."""
    g = _saddle_series_raw(order, X, Y)
    coeffs = [XPolynomial([c]) for c in g.coeffs]
    if order >= 2:
        coeffs[2] = coeffs[2] + XPolynomial([0, mpc(0, 1)])
    return PowerSeries(coeffs, 0, order + 1)


def _laurent_main_raw(order: int, X, Y) -> PowerSeries:
    B = _poly_series_B(order + 4, X, Y)
    z = PowerSeries.identity(B.order, XPolynomial([mpf(1)]))
    expr = (
        B.pow_real(mpf(-2) / 3).scalar_mul(3 * X**2)
        + (B.pow_real(mpf(-1) / 2) * z).truncate(B.order).scalar_mul(-Y / X)
        + B.scalar_mul(2 * X**2)
    )
    return expr.shift(-4).truncate(order + 1)


def laurent_main(order: int) -> PowerSeries:
    """Laurent series of z^(-4)(3X^2 B^(-2/3) - (Yz/X) B^(-1/2) + 2X^2 B).

    The returned series has valuation -4 and XPolynomial coefficients; its
    exponents -4..0 carry A1, -A2, -A3, -A4, -A5 - (5X^2/3)x^2, and the
    coefficient of z^l for l >= 1 is the tail polynomial at that order.  The
    z^0 coefficient is checked against A5 = Y^4/(2560 X^10) and the x^2
    coefficient -5X^2/3; any mismatch is a broken build and raises.
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    prec = working_digits()
    key = (order, prec)
    with _CACHE_LOCK:
        hit = _LAURENT_CACHE.get(key)
    if hit is not None:
        return hit
    cst = constants()
    with mp.workdps(prec + 20 + order):
        series = _laurent_main_raw(order, cst.X, cst.Y)
        tol = mpf(10) ** (-(prec + 2))
        expected = [
            ("z^-4", -4, XPolynomial([cst.A1])),
            ("z^-3", -3, XPolynomial([-cst.A2])),
            ("z^-2", -2, XPolynomial([-cst.A3])),
            ("z^-1", -1, XPolynomial([-cst.A4])),
            ("z^0", 0, XPolynomial([-cst.A5, 0, -5 * cst.X**2 / 3])),
        ]
        for label, k, want in expected:
            got = series.coeff(k)
            diff = got - want
            err = max(abs(diff.coeff(j)) for j in range(max(got.degree, want.degree) + 1))
            scale = 1 + max(abs(want.coeff(j)) for j in range(want.degree + 1))
            if err > tol * scale:
                raise RuntimeError(
                    f"Laurent coefficient at {label} deviates from its closed form "
                    f"by {mp.nstr(err, 5)}; the expansion constants and the series "
                    "expansion disagree, so the build is broken"
                )
        # degree bound: the coefficient of z^(l-4) has degree <= floor(l/2)
        for k in range(series.valuation, series.order):
            poly = series.coeff(k)
            scale = 1 + max(abs(poly.coeff(j)) for j in range(poly.degree + 1))
            eff = poly.effective_degree(tol * scale)
            if eff > (k + 4) // 2:
                raise RuntimeError(
                    f"Laurent coefficient at z^{k} has degree {eff}, above the "
                    f"bound {(k + 4) // 2}; the expansion is inconsistent"
                )
    with _CACHE_LOCK:
        _LAURENT_CACHE[key] = series
    return series


# -- polynomial ladders ------------------------------------------------------------


def _as_xpoly(c) -> XPolynomial:
    """Coefficients of degenerate series may collapse to scalars; normalize."""
    return c if isinstance(c, XPolynomial) else XPolynomial([c])


def _poly_dust_degree(poly: XPolynomial, prec: int) -> int:
    scale = 1 + max(abs(poly.coeff(j)) for j in range(poly.degree + 1))
    return poly.effective_degree(scale * mpf(10) ** (-(prec + 2)))


def expansion_polys(M: int) -> LadderPolys:
    """The polynomial ladders P[1..4] up to index M (cached per precision).

    * p2[m]: coefficients of exp(sum_{l>=1} (z^l Laurent tail polynomial)),
    * p1[m]: coefficients of exp(sum_m nu_m (2X^2 B)^(m+1/2) z^(6m+3)),
      including every term with 6m+3 <= M (later terms cannot reach z^M),
    * p3[m]: coefficients of B^(-1/3),
    * p4[m]: coefficients of the product of the three series,

    with B = S(z) + i x z^2 throughout.
    """
    if M < 1:
        raise ValueError("M must be a positive integer")
    if M > MAX_LADDER_ORDER:
        raise ValueError(
            f"M {M} exceeds {MAX_LADDER_ORDER}; raise the working precision "
            "deliberately before extending the ladders"
        )
    prec = working_digits()
    key = (M, prec)
    with _CACHE_LOCK:
        hit = _LADDER_CACHE.get(key)
    if hit is not None:
        return hit
    cst = constants()
    X = cst.X
    order = M + 1
    with mp.workdps(prec + 20 + M):
        tail = laurent_main(M).truncate(order).drop_below(1)
        ladder2 = tail.exp().truncate(order)

        B = _poly_series_B(M, X, cst.Y)
        h_arg = PowerSeries.constant(XPolynomial([mpf(0)]), order)
        m = 0
        while 6 * m + 3 <= M:
            power = B.pow_real(m + mpf(1) / 2).truncate(order - (6 * m + 3))
            amp = nu_coeff(m) * (2 * X**2) ** (m + mpf(1) / 2)
            h_arg = h_arg + power.scalar_mul(amp).shift(6 * m + 3)
            m += 1
        ladder1 = h_arg.truncate(order).exp().truncate(order)

        ladder3 = B.pow_real(mpf(-1) / 3).truncate(order)

        ladder4 = (ladder1 * ladder2 * ladder3).truncate(order)

        bounds = ((ladder1, "p1", 1), (ladder2, "p2", 4), (ladder3, "p3", 1))
        for series, name, slope in bounds:
            for k in range(1, order):
                eff = _poly_dust_degree(_as_xpoly(series.coeff(k)), prec)
                if 2 * eff > slope * k:
                    raise RuntimeError(
                        f"{name}[{k}] has degree {eff}, above the bound "
                        f"{slope * k}/2; the ladder computation is inconsistent"
                    )
        out = LadderPolys(
            M=M,
            p1=tuple(_as_xpoly(ladder1.coeff(k)) for k in range(order)),
            p2=tuple(_as_xpoly(ladder2.coeff(k)) for k in range(order)),
            p3=tuple(_as_xpoly(ladder3.coeff(k)) for k in range(order)),
            p4=tuple(_as_xpoly(ladder4.coeff(k)) for k in range(order)),
        )
    with _CACHE_LOCK:
        _LADDER_CACHE[key] = out
    return out


# -- the constants C_m -------------------------------------------------------------


def c_constants(L: int):
    """[C_0, ..., C_L]: Gaussian integrals of the product ladder.

    C_m = 2 X^(4/3) exp(-A5) * integral of P[4]_m(x) exp(-5X^2 x^2/3) dx,
    evaluated termwise with the closed-form even moments
    integral x^(2k) exp(-b x^2) dx = Gamma(k+1/2) / b^(k+1/2); odd moments
    vanish.  Returns real values; the imaginary dust the odd (i-carrying)
    monomials would contribute is checked to be negligible.
    """
    values, _ = c_constants_detail(L)
    return values


def c_constants_detail(L: int):
    """Like :func:`c_constants`, also returning the largest imaginary dust."""
    if L < 0:
        raise ValueError("L must be a nonnegative integer")
    if L > MAX_C_ORDER:
        raise ValueError(
            f"L {L} exceeds {MAX_C_ORDER}; raise the working precision "
            "deliberately before extending the C ladder"
        )
    prec = working_digits()
    cst = constants()
    ladders = expansion_polys(max(L, 1))
    with mp.workdps(prec + 15):
        b = 5 * cst.X**2 / 3
        prefactor = 2 * cst.X ** (mpf(4) / 3) * mp.exp(-cst.A5)
        # even Gaussian moments Gamma(k+1/2)/b^(k+1/2), built by recurrence
        max_deg = max(p.degree for p in ladders.p4[: L + 1])
        moments = [mp.sqrt(mp.pi / b)]
        for k in range(1, max_deg // 2 + 1):
            moments.append(moments[-1] * (k - mpf(1) / 2) / b)
        values = []
        dust = mpf(0)
        for m in range(L + 1):
            poly = ladders.p4[m]
            total = mpc(0)
            for k in range(0, poly.degree + 1, 2):
                total += poly.coeff(k) * moments[k // 2]
            value = prefactor * total
            dust = max(dust, abs(mp.im(value)))
            values.append(+mp.re(value))
        dust = +dust
    return values, dust
