"""Asymptotics harness: assemble the expansion, compare with exact counts.

The asymptotic formula under test is

    r(n)  ~  n^(-3/5) * (sum_{j=0}^{L} C_j n^(-j/10)) * A(n),
    A(n) := exp(A1 n^(2/5) - A2 n^(3/10) - A3 n^(1/5) - A4 n^(1/10)),

with the constants of :mod:`su3asym.saddle_expansion`.  Because A(n) grows
double-exponentially fast in log n, every huge quantity here is handled as a
logarithm; only ratios and scaled residuals are materialized as plain reals.

Provided operations:

* ``big_A``            -- log A(n).
* ``r_asymptotic``     -- log of the truncated expansion, with its sign.
* ``log_G_direct``     -- Log G(e^(-z)) summed over the dimension spectrum
                          with a certified geometric tail bound.
* ``asymptotic_log_G`` -- the truncated expansion of Log G(e^(-z)):
                          2^(2/3) 3 X^(10/3)/z^(2/3) - sqrt(2) Y/z^(1/2)
                          - (1/3) Log z + (1/3) log(16 pi^3)
                          + z^(1/2) sum_{0 <= m < eta - 1/2} nu_m z^m.
* ``expansion_residual`` -- |log_G_direct - asymptotic_log_G|, the quantity
                          whose O(|z|^eta) decay is the content of the
                          expansion's error bound.
* ``compare_table``    -- rows of exact-vs-asymptotic data with the scaled
                          residuals R_L(n) = r(n) n^(3/5)/A(n)
                          - sum_{j<=L} C_j n^(-j/10) and fitted decay
                          exponents of |R_L| across the sample points.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .exact_counting import EXACT_LIMIT, log_r_float64, r_exact, su3_parts
from .precision import working_digits
from .saddle_expansion import c_constants, constants, nu_coeff
from .special_functions import _to_mp

__all__ = [
    "SignedLog",
    "ComparisonRow",
    "ComparisonTable",
    "big_A",
    "r_asymptotic",
    "log_G_direct",
    "asymptotic_log_G",
    "expansion_residual",
    "compare_table",
]


@dataclass(frozen=True)
class SignedLog:
    """A positive quantity too large to materialize: value = sign * exp(log_abs)."""

    log_abs: mpf
    sign: int


@dataclass(frozen=True)
class ComparisonRow:
    """One (n, L) comparison of exact and asymptotic counts.

    ``ratio`` is r(n) / asymptotic, ``residual_scaled`` is
    R_L(n) = r(n) n^(3/5) / A(n) - sum_{j<=L} C_j n^(-j/10), and
    ``log_r_exact`` comes from the big-integer count (or the float64
    log-domain fallback beyond the exact cap, when requested).
    """

    n: int
    L: int
    log_r_exact: mpf
    log_r_asym: mpf
    ratio: mpf
    residual_scaled: mpf


@dataclass(frozen=True)
class ComparisonTable:
    """All rows plus, per L, the least-squares slope of log|R_L| vs log n.

    ``fitted_exponent[L]`` is None when fewer than three sample points were
    available for the fit.
    """

    rows: tuple
    fitted_exponent: dict


def big_A(n: int):
    """log A(n) = A1 n^(2/5) - A2 n^(3/10) - A3 n^(1/5) - A4 n^(1/10)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    prec = working_digits()
    cst = constants()
    with mp.workdps(prec + 10):
        root = mpf(n) ** (mpf(1) / 10)
        out = (
            cst.A1 * root**4 - cst.A2 * root**3 - cst.A3 * root**2 - cst.A4 * root
        )
    return +out


def r_asymptotic(n: int, L: int) -> SignedLog:
    """The truncated expansion n^(-3/5) (sum_{j<=L} C_j n^(-j/10)) A(n).

    Returned as a :class:`SignedLog` of its (positive) value; if the
    truncated C-sum is not positive the result is not a meaningful count
    approximation and a ValueError is raised.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if L < 0:
        raise ValueError("L must be a nonnegative integer")
    prec = working_digits()
    cs = c_constants(L)
    with mp.workdps(prec + 10):
        root = mpf(n) ** (-mpf(1) / 10)
        csum = mpf(0)
        for j in range(L, -1, -1):
            csum = csum * root + cs[j]
        if csum <= 0:
            raise ValueError("expansion not positive at this n")
        out = big_A(n) - mpf(3) / 5 * mp.log(n) + mp.log(csum)
    return SignedLog(log_abs=+out, sign=1)


# -- Log G(e^{-z}) directly from the dimension spectrum -----------------------------


def log_G_direct(z):
    """Log G(e^(-z)) = -sum_{d} mult(d) Log(1 - e^(-z d)) for Re(z) > 0.

    The dimension spectrum is streamed in doubling blocks until the
    remaining tail is provably below the precision target: multiplicities
    satisfy mult(d) <= 2 d^(1/3) <= d, and |Log(1 - w)| <= |w|/(1 - |w|),
    so the tail beyond D is at most x^(D+1) (D+1) / (1-x)^3 with
    x = e^(-Re z).
    """
    z = _to_mp(z)
    if not mp.re(z) > 0:
        raise ValueError("log_G_direct requires Re(z) > 0")
    prec = working_digits()
    with mp.workdps(prec + 12):
        zz = +z
        sigma = mp.re(zz)
        target = mpf(10) ** (-(prec + 5))
        x = mp.exp(-sigma)
        one_minus_x = -mp.expm1(-sigma)
        total = mpc(0) if isinstance(zz, mpc) else mpf(0)
        done = 0
        limit = 64
        while True:
            for d, mult in su3_parts(limit):
                if d <= done:
                    continue
                total -= mult * mp.log(1 - mp.exp(-zz * d))
            done = limit
            tail = x ** (done + 1) * (done + 1) / one_minus_x**3
            if tail < target:
                break
            limit *= 2
        total = +total
    return total


# -- the truncated expansion of Log G and its residual -------------------------------


_EXCLUDED_LOW = (mpf(-2) / 3, mpf(-1) / 2, mpf(0))


def _validate_eta(eta) -> mpf:
    eta = mpf(eta)
    tol = mpf("1e-12")
    near_half_integer = abs(eta - mpf(1) / 2 - mp.nint(eta - mpf(1) / 2)) < tol
    if any(abs(eta - bad) < tol for bad in _EXCLUDED_LOW) or near_half_integer:
        raise ValueError(
            f"eta = {mp.nstr(eta, 8)} lies in the excluded set "
            "{-2/3, -1/2, 0, 1/2, 3/2, 5/2, ...} where the expansion's error "
            "term is not defined"
        )
    if not eta > mpf(1) / 2:
        raise ValueError("eta must lie in (1/2, oo), off the half-integers")
    return eta


def asymptotic_log_G(z, eta):
    """The expansion of Log G(e^(-z)) truncated with all terms m < eta - 1/2:

    2^(2/3) 3 X^(10/3)/z^(2/3) - sqrt(2) Y/z^(1/2) - (1/3) Log z
    + (1/3) log(16 pi^3) + z^(1/2) sum_{0 <= m < eta-1/2} nu_m z^m.
    """
    z = _to_mp(z)
    eta = _validate_eta(eta)
    if abs(mp.arg(z)) > mp.pi / 4 + mpf("1e-15"):
        raise ValueError("z must lie in the cone |Arg z| <= pi/4")
    prec = working_digits()
    cst = constants()
    with mp.workdps(prec + 10):
        zz = +z
        logz = mp.log(zz)
        out = (
            mpf(2) ** (mpf(2) / 3) * 3 * cst.X ** (mpf(10) / 3) * mp.exp(-mpf(2) / 3 * logz)
            - mp.sqrt(2) * cst.Y * mp.exp(-logz / 2)
            - logz / 3
            + mp.log(16 * mp.pi**3) / 3
        )
        m_top = int(mp.floor(eta - mpf(1) / 2))
        if m_top >= 0:
            tail = mpf(0)
            for m in range(m_top, -1, -1):
                tail = tail * zz + nu_coeff(m)
            out += mp.exp(logz / 2) * tail
        out = +out
    return out


def expansion_residual(z, eta):
    """|log_G_direct(z) - asymptotic_log_G(z, eta)|.

    The defining property of the expansion is that this residual is
    O(|z|^eta) as z -> 0 inside the cone |Arg z| <= pi/4.
    """
    z = _to_mp(z)
    if abs(mp.arg(z)) > mp.pi / 4 + mpf("1e-15"):
        raise ValueError("z must lie in the cone |Arg z| <= pi/4")
    eta = _validate_eta(eta)
    prec = working_digits()
    with mp.workdps(prec + 10):
        out = abs(log_G_direct(z) - asymptotic_log_G(z, eta))
    return +out


# -- exact-vs-asymptotic comparison table --------------------------------------------


def _log_r_values(n_list, approx_beyond_exact: bool):
    """log r(n) for each requested n: exact big-int DP, float64 fallback beyond."""
    exact_ns = [n for n in n_list if n <= EXACT_LIMIT]
    large_ns = [n for n in n_list if n > EXACT_LIMIT]
    if large_ns and not approx_beyond_exact:
        raise ValueError(
            f"n values {large_ns} exceed the exact-count cap {EXACT_LIMIT}; "
            "pass approx_beyond_exact=True to use the float64 log-domain count"
        )
    out = {}
    if exact_ns:
        r = r_exact(max(exact_ns))
        for n in exact_ns:
            out[n] = mp.log(mpf(r[n]))
    if large_ns:
        logs = log_r_float64(max(large_ns))
        for n in large_ns:
            out[n] = mpf(float(logs[n]))
    return out


def compare_table(n_list, L_max: int, approx_beyond_exact: bool = False) -> ComparisonTable:
    """Exact-vs-asymptotic rows for every n in n_list and every L <= L_max.

    Each row carries the log of the exact count, the log of the truncated
    expansion, their ratio, and the scaled residual R_L(n); per L, the
    least-squares slope of log|R_L| against log n over the sample points is
    fitted (None with fewer than three points).
    """
    n_list = sorted(set(int(n) for n in n_list))
    if not n_list:
        raise ValueError("n_list must not be empty")
    if n_list[0] < 1:
        raise ValueError("all n must be positive integers")
    if L_max < 0:
        raise ValueError("L_max must be a nonnegative integer")
    prec = working_digits()
    cs = c_constants(L_max)
    log_r = _log_r_values(n_list, approx_beyond_exact)
    rows = []
    residuals = {L: [] for L in range(L_max + 1)}
    with mp.workdps(prec + 10):
        for n in n_list:
            log_a = big_A(n)
            root = mpf(n) ** (-mpf(1) / 10)
            # r(n) n^(3/5) / A(n), the quantity the C-series approximates
            scaled = mp.exp(log_r[n] + mpf(3) / 5 * mp.log(n) - log_a)
            csum = mpf(0)
            for L in range(L_max + 1):
                csum += cs[L] * root**L
                r_l = scaled - csum
                log_asym = log_a - mpf(3) / 5 * mp.log(n) + mp.log(csum)
                rows.append(
                    ComparisonRow(
                        n=n,
                        L=L,
                        log_r_exact=+log_r[n],
                        log_r_asym=+log_asym,
                        ratio=+mp.exp(log_r[n] - log_asym),
                        residual_scaled=+r_l,
                    )
                )
                residuals[L].append((n, r_l))
    fitted = {}
    for L, pts in residuals.items():
        pts = [(n, r) for n, r in pts if r != 0]
        if len(pts) < 3:
            fitted[L] = None
            continue
        import numpy as np

        xs = np.array([float(mp.log(n)) for n, _ in pts])
        ys = np.array([float(mp.log(abs(r))) for _, r in pts])
        slope, _intercept = np.polyfit(xs, ys, 1)
        fitted[L] = float(slope)
    return ComparisonTable(rows=tuple(rows), fitted_exponent=fitted)
