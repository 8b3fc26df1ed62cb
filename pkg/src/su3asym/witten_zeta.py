"""Witten zeta function of SU(3).

    omega(s) = sum over j, k >= 1 of 1 / (j^s * k^s * (j+k)^s)

The double series converges for Re(s) > 2/3.  The function continues to a
meromorphic function on the plane with simple poles at s = 2/3 and at
s = 1/2 - m for every integer m >= 0, and it vanishes at the negative
integers (the "trivial zeros").

Two independent evaluation routes are provided and cross-checked:

* ``omega_direct`` -- the lattice sum over a finite block, with the two
  one-dimensional tails and the outer corner accelerated by Euler-Maclaurin
  corrections.  All tail integrals reduce to the incomplete-beta-type
  function G2(a; s, w) = integral over t in [a, oo) of t^(-s) (1+t)^(-w) dt,
  evaluated by binomial series.  Valid for Re(s) >= ``direct_sigma_min``.

* ``omega_continued`` -- the Mellin-Barnes continuation

      omega(s) = Gamma(2s-1) Gamma(1-s) zeta(3s-1) / Gamma(s)
               + (1/Gamma(s)) * sum_{k=0}^{M-1} (-1)^k (Gamma(s+k)/k!)
                                 * zeta(2s+k) * zeta(s-k)
               + (1/(2 pi i Gamma(s))) * integral over Re(z) = M - 1/2 of
                                 Gamma(s+z) Gamma(-z) zeta(2s+z) zeta(s-z) dz,

  valid on the strip 3/4 - M/2 < Re(s) < M + 1/2.  The vertical-line
  integral is evaluated by trapezoid quadrature; the integrand inherits the
  e^(-pi t) decay of the Gamma factors, so the trapezoid rule converges
  geometrically in the step size.

``omega`` dispatches between the two routes, ``omega_residue`` returns the
closed-form residues, and ``verify_zeta_identity`` checks the classical
zeta-value convolution identity equivalent to the trivial zeros.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .precision import working_digits
from .series import PowerSeries
from .special_functions import (
    _ln,
    _npow,
    _to_mp,
    bernoulli_mpf,
    gamma_complex,
    zeta_complex,
)

__all__ = [
    "OmegaEvalConfig",
    "OmegaResult",
    "WittenZetaPoleError",
    "ContinuationCollisionError",
    "omega",
    "omega_result",
    "omega_direct",
    "omega_continued",
    "omega_residue",
    "verify_zeta_identity",
    "trivial_zeros",
]


class WittenZetaPoleError(ZeroDivisionError):
    """Raised when s lies within the guard neighbourhood of a pole of omega."""


class ContinuationCollisionError(ValueError):
    """Raised at removable singularities of the continuation formula.

    At integer s individual factors (Gamma(1-s), zeta(s-k), zeta(2s+k),
    Gamma(2s-1)) blow up even though omega itself is finite there.  With
    ``auto_perturb`` disabled the evaluator refuses such points and asks the
    caller to evaluate at a perturbed point instead.
    """


# -- configuration -------------------------------------------------------------


@dataclass(frozen=True)
class OmegaEvalConfig:
    """Tuning knobs for the two omega evaluators.

    M             contour shift of the continuation; None selects
                  max(2, ceil(2*(3/4 - Re s)) + 2) automatically, nudged
                  upward when the contour would pass too close to a pole of
                  the integrand.  The strip condition
                  3/4 - M/2 < Re(s) < M + 1/2 is enforced at evaluation time.
    quad_step     upper bound for the trapezoid step; the effective step is
                  min(quad_step, 2*pi*d / (ln 10 * (Dq + 4))) where d is the
                  analyticity half-width of the integrand around the contour
                  and Dq the quadrature digit target.
    quad_tmax     hard truncation of the contour at |Im z| = quad_tmax; None
                  selects it from the e^(-pi t) decay of the integrand and
                  extends adaptively until the boundary values are below the
                  truncation target.
    direct_cutoff block size P of the direct evaluator: the lattice block
                  j, k <= P is summed exactly and everything beyond it is
                  covered by Euler-Maclaurin tail corrections.
    direct_sigma_min  smallest Re(s) the direct evaluator accepts.
    em_depth      number of Bernoulli correction terms in each
                  Euler-Maclaurin tail.
    auto_perturb  replace an exact removable-singularity input s by
                  s + 10^-(prec/2 + 2) instead of raising
                  ContinuationCollisionError.
    """

    M: int | None = None
    quad_step: float = 0.25
    quad_tmax: float | None = None
    direct_cutoff: int = 128
    direct_sigma_min: float = 1.1
    em_depth: int = 12
    auto_perturb: bool = True


DEFAULT_CONFIG = OmegaEvalConfig()

POLE_NEIGHBORHOOD = mpf("1e-6")
_COLLISION_NEIGHBORHOOD = mpf("1e-8")


@dataclass
class OmegaResult:
    """Value of omega together with evaluation metadata.

    ``s_evaluated`` differs from ``s`` only when a removable singularity of
    the continuation formula forced an epsilon offset; ``est_error`` is the
    estimated absolute error at ``s_evaluated``.
    """

    s: object
    s_evaluated: object
    value: object
    method: str
    est_error: object


# -- pole bookkeeping -----------------------------------------------------------


def _pole_guard(s) -> None:
    """Raise WittenZetaPoleError if s is within 1e-6 of a pole of omega."""
    if abs(s - mpf(2) / 3) < POLE_NEIGHBORHOOD:
        raise WittenZetaPoleError(
            "omega has a simple pole at s = 2/3 and the requested point is "
            "within 1e-6 of it: evaluation near pole is refused"
        )
    m = int(mp.nint(mpf(1) / 2 - mp.re(s)))
    if m >= 0 and abs(s - (mpf(1) / 2 - m)) < POLE_NEIGHBORHOOD:
        raise WittenZetaPoleError(
            f"omega has a simple pole at s = 1/2 - {m} and the requested "
            "point is within 1e-6 of it: evaluation near pole is refused"
        )


# -- the tail integral G2(a; s, w) = int_a^oo t^(-s) (1+t)^(-w) dt ---------------


def _binom_series(alpha, scale, n_terms, one):
    """Coefficients of (1 + scale*u)^alpha through u^(n_terms - 1)."""
    coeffs = [one]
    cur = one
    for q in range(n_terms - 1):
        cur = cur * (alpha - q) / (q + 1) * scale
        coeffs.append(cur)
    return coeffs


def _convolve(a, b, n_terms):
    """First n_terms coefficients of the product of two coefficient lists."""
    out = []
    for q in range(n_terms):
        lo = max(0, q - len(b) + 1)
        hi = min(q, len(a) - 1)
        acc = a[lo] * b[q - lo]
        for i in range(lo + 1, hi + 1):
            acc += a[i] * b[q - i]
        out.append(acc)
    return out


def _g2_tail(a, s, w, tol, max_terms=20000):
    """G2(a; s, w) for a >= 2, by the binomial series in x = 1/a <= 1/2.

    G2(a; s, w) = sum_m binom(-w, m) x^(s+w-1+m) / (s+w-1+m).
    """
    x = 1 / mpf(a)
    xp = mp.exp((s + w - 1) * mp.ln(x))
    b = 1
    den = s + w - 1
    total = mpf(0)
    for m in range(max_terms):
        term = b * xp / den
        total += term
        if m > 8 and abs(term) < tol:
            return total
        b = b * (-w - m) / (m + 1)
        xp *= x
        den += 1
    raise ArithmeticError("G2 tail series did not reach the tolerance")


def _g2_one(s, w, tol):
    """G2(1; s, w) = int_0^1 u^(s+w-2) (1+u)^(-w) du, split at u = 1/2.

    On [0, 1/2] the binomial series integrates termwise; on [1/2, 1] the
    integrand is expanded around u = 3/4 (convergence ratio 1/3) and only the
    even Taylor terms survive the symmetric integration.
    """
    # [0, 1/2]: same series as the tail form evaluated at x = 1/2
    total = _g2_tail(2, s, w, tol)
    # [1/2, 1]: Taylor around mu = 3/4
    one = s * 0 + 1
    mu = mpf(3) / 4
    n_terms = int(mp.dps * math.log(10) / math.log(3)) + 12
    ca = _binom_series(s + w - 2, 1 / mu, n_terms, one)
    cb = _binom_series(-w, 1 / (1 + mu), n_terms, one)
    c = _convolve(ca, cb, n_terms)
    f0 = mp.exp((s + w - 2) * mp.ln(mu) - w * mp.ln(1 + mu))
    quarter = mpf(1) / 4
    vpow = quarter  # (1/4)^(q+1) at q = 0
    part = c[0] * vpow
    for q in range(2, n_terms, 2):
        vpow *= quarter * quarter
        part += c[q] * vpow / (q + 1)
    return total + 2 * f0 * part


def _g2_ladder(s, count, tol):
    """[G2(1; s, s + q) for q = 0..count-1] by the forward recurrence
    G2(1; s, w+1) = ((s + w - 1) G2(1; s, w) - 2^(-w)) / w, with the last
    element validated against direct evaluation (full direct recomputation on
    mismatch)."""
    ladder = [_g2_one(s, s, tol)]
    pw2 = mp.exp(-s * mp.ln(mpf(2)))  # 2^(-w) at w = s
    for q in range(count - 1):
        w = s + q
        ladder.append(((s + w - 1) * ladder[-1] - pw2) / w)
        pw2 /= 2
    if count > 1:
        check = _g2_one(s, s + (count - 1), tol)
        if abs(ladder[-1] - check) > mpf("1e-8") * (1 + abs(check)):
            ladder = [_g2_one(s, s + q, tol) for q in range(count)]
    return ladder


# -- direct evaluation -----------------------------------------------------------


def omega_direct(s, cfg: OmegaEvalConfig | None = None):
    """omega(s) by the Euler-Maclaurin-accelerated lattice sum."""
    return _direct_result(s, cfg or DEFAULT_CONFIG).value


def _direct_result(s, cfg: OmegaEvalConfig) -> OmegaResult:
    prec = working_digits()
    s0 = _to_mp(s)
    sigma = mp.re(s0)
    if sigma < cfg.direct_sigma_min or sigma <= mpf(2) / 3 + mpf("1e-9"):
        raise ValueError(
            f"Re(s) = {mp.nstr(sigma, 8)} is below the direct-summation "
            f"threshold {cfg.direct_sigma_min}; use continuation"
        )
    guard = 10 + max(0, int(2 * math.log10(abs(complex(s0)) + 2)))
    wd = max(30, prec // 2 + 18) + guard
    with mp.workdps(wd):
        value, est = _direct_eval(+s0, cfg)
    return OmegaResult(s=s0, s_evaluated=s0, value=+value, method="direct", est_error=+est)


def _direct_eval(s, cfg: OmegaEvalConfig):
    """Worker for omega_direct at the current working precision.

    Splits the lattice into the exact block {j, k <= P}, two symmetric edge
    strips {j <= P < k} handled row-by-row with Euler-Maclaurin tails in k,
    and the corner {j, k > P} handled by a second Euler-Maclaurin pass over j
    applied to the (analytic in j) inner tail formula.
    """
    P = int(cfg.direct_cutoff)
    R = int(cfg.em_depth)
    if P < 8:
        raise ValueError("direct_cutoff must be at least 8")
    if R < 2 or R > 40:
        raise ValueError("em_depth must lie in 2..40")
    if mp.im(s) == 0:
        s = mp.re(s)  # real arithmetic throughout
    one = s * 0 + 1
    tol = mpf(10) ** (-(mp.dps - 4))
    n_ord = 2 * R + 2

    pw = [None] * (3 * P + 1)
    for n in range(1, 3 * P + 1):
        pw[n] = _npow(n, s)

    # exact block j, k <= P (j <-> k symmetry: twice the strict upper triangle
    # plus the diagonal)
    acc = mpf(0)
    for j in range(1, P + 1):
        pj = pw[j]
        row = 0
        for k in range(j + 1, P + 1):
            row += pw[k] * pw[j + k]
        acc += pj * (2 * row + pj * pw[2 * j])

    bern_over = [None] + [bernoulli_mpf(2 * r) / (2 * r) for r in range(1, R + 1)]
    bern_fact = [None] + [
        bernoulli_mpf(2 * r) / mpf(math.factorial(2 * r)) for r in range(1, R + 1)
    ]
    bern_next = abs(bernoulli_mpf(2 * R + 2) / (2 * R + 2))
    # falling factorials (-s)(-s-1)...(-s-i+1) for i = 0..2R-1
    falling = [one]
    for i in range(2 * R - 1):
        falling.append(falling[-1] * (-s - i))

    # edge strips: for each row j <= P the inner sum over k > P, with the
    # explicit range P < k <= K_j = max(P, 2j) summed directly so that the
    # Euler-Maclaurin cutoff satisfies K_j / j >= 2
    est = mpf(0)
    series_at_P = _binom_series(-s, 1 / mpf(P), n_ord, one)
    for j in range(1, P + 1):
        K = max(P, 2 * j)
        pj = pw[j]
        if K > P:
            expl = 0
            for k in range(P + 1, K + 1):
                expl += pw[k] * pw[j + k]
            acc += 2 * pj * expl
        integral = mp.exp((1 - 2 * s) * _ln(j)) * _g2_tail(mpf(K) / j, s, s, tol)
        base = pw[K] * pw[j + K]
        ca = series_at_P if K == P else _binom_series(-s, 1 / mpf(K), n_ord, one)
        cb = _binom_series(-s, 1 / mpf(j + K), n_ord, one)
        c = _convolve(ca, cb, n_ord)
        corr = 0
        for r in range(1, R + 1):
            corr += bern_over[r] * c[2 * r - 1]
        acc += 2 * pj * (integral - base / 2 - base * corr)
        est += abs(2 * pj * base * bern_next * c[2 * R + 1])

    # corner j, k > P: Euler-Maclaurin over j applied to
    # h(j) = j^(-s) * [tail over k > P of k^(-s) (j+k)^(-s)],
    # itself written through its own Euler-Maclaurin form so that the exact
    # j-integral reduces to the G2(1; s, s + q) ladder.
    ladder = _g2_ladder(s, 2 * R, tol)
    gfrak = ladder[0]
    lnP = _ln(P)
    Pm2 = mpf(P) ** (-2)
    base23 = mp.exp((2 - 3 * s) * lnP)
    integral_h = base23 * 2 * gfrak / (3 * s - 2) - mp.exp((1 - 3 * s) * lnP) * gfrak / 2
    scale = base23
    for r in range(1, R + 1):
        scale *= Pm2
        inner = 0
        for i in range(2 * r):
            inner += (
                math.comb(2 * r - 1, i)
                * falling[i]
                * falling[2 * r - 1 - i]
                * ladder[2 * r - 1 - i]
            )
        integral_h -= bern_fact[r] * scale * inner

    # Taylor series of h(P + u) in u, through u^(2R+1)
    u1 = PowerSeries(tuple(_binom_series(-s, 1 / mpf(P), n_ord, one)), 0, n_ord)
    u3 = PowerSeries(tuple(_binom_series(1 - 3 * s, 1 / mpf(P), n_ord, one)), 0, n_ord)
    # A(delta) = int_0^delta (1+t)^(-s) (2+t)^(-s) dt, then delta = tau(u)
    pa = _binom_series(-s, one, n_ord, one)
    pb = _binom_series(-s, one / 2, n_ord, one)
    integrand = PowerSeries(tuple(_convolve(pa, pb, n_ord)), 0, n_ord)
    a_series = integrand.integrate().truncate(n_ord).scalar_mul(mp.exp(-s * mp.ln(mpf(2))))
    tau = PowerSeries(
        tuple((-1) ** q * mpf(P) ** (-q) * one for q in range(1, n_ord)), 1, n_ord
    )
    a_comp = a_series.compose(tau)
    g_const = PowerSeries.constant(gfrak * one, n_ord)
    piece1 = (u3 * (g_const - a_comp)).scalar_mul(mp.exp((1 - 3 * s) * lnP))
    u4 = [
        PowerSeries(tuple(_binom_series(-s - q, 1 / mpf(2 * P), n_ord, one)), 0, n_ord)
        for q in range(2 * R)
    ]
    piece2 = (u1 * u4[0]).scalar_mul(
        mp.exp(-2 * s * lnP) * mp.exp(-s * mp.ln(mpf(2 * P))) / 2
    )
    mix = PowerSeries.constant(0 * one, n_ord)
    for q in range(2 * R):
        cq = 0
        for r in range((q + 2) // 2, R + 1):
            if 2 * r - 1 < q:
                continue
            cq += (
                bern_fact[r]
                * math.comb(2 * r - 1, q)
                * falling[2 * r - 1 - q]
                * falling[q]
                * mp.exp((-s - (2 * r - 1 - q)) * lnP)
            )
        if cq != 0:
            mix = mix + u4[q].scalar_mul(cq * mp.exp((-s - q) * mp.ln(mpf(2 * P))))
    piece3 = (u1 * mix).scalar_mul(mp.exp(-s * lnP))
    h_series = piece1 - piece2 - piece3
    corner = integral_h - h_series.coeff(0) / 2
    for r in range(1, R + 1):
        corner -= bern_over[r] * h_series.coeff(2 * r - 1)
    est += abs(bern_next * h_series.coeff(2 * R + 1))
    acc += corner

    est += tol * (P + 4)
    return acc, est

# -- grid evaluators along vertical lines ----------------------------------------
#
# The trapezoid quadrature needs Gamma and zeta at hundreds of points
# a0 + i k h along fixed vertical lines.  Both are evaluated with the same
# algorithms as special_functions (Stirling series with argument shift;
# Euler-Maclaurin with Bernoulli corrections) but restructured so that the
# n^(-i k h) phase factors advance multiplicatively from node to node instead
# of being re-exponentiated, which is what makes a thousand-node contour
# affordable at 30+ digits.

_STIRLING_MAX = 64


def _stirling_coeffs(depth):
    """B_{2r} / ((2r)(2r-1)) for r = 1..depth at the current precision."""
    return [bernoulli_mpf(2 * r) / ((2 * r) * (2 * r - 1)) for r in range(1, depth + 1)]


def _gamma_line(a0, h, K, k0=0):
    """[Gamma(a0 + i k h) for k = k0..K].

    Shifts the argument right until Re >= max(24, 2*dps/3) using the product
    Gamma(w) = Gamma(w + c) / (w (w+1) ... (w+c-1)) and applies the Stirling
    series at the shifted point.  Safe whenever the line carries no pole of
    Gamma, i.e. Re(a0) is not a nonpositive integer reached with Im = 0.
    """
    a0 = _to_mp(a0)
    h = mpf(h)
    target = max(24, (2 * mp.dps) // 3)
    shift = max(0, int(math.ceil(target - mp.re(a0))))
    tol = mpf(10) ** (-(mp.dps + 2))
    stirling = _stirling_coeffs(_STIRLING_MAX)
    ln_two_pi_half = mp.ln(2 * mp.pi) / 2
    out = []
    for k in range(k0, K + 1):
        w = a0 + mpc(0, k * h) if k else a0 + 0 * h
        ws = w + shift
        lnws = mp.ln(ws)
        v = 1 / ws
        v2 = v * v
        vp = v
        acc = 0
        for coef in stirling:
            term = coef * vp
            acc += term
            if abs(term) < tol:
                break
            vp *= v2
        else:
            raise ArithmeticError("Stirling series did not converge; raise the shift target")
        value = mp.exp((ws - mpf(1) / 2) * lnws - ws + ln_two_pi_half + acc)
        if shift:
            prod = w
            for i in range(1, shift):
                prod *= w + i
            value = value / prod
        out.append(value)
    return out


def _zeta_line_em(a0, h, K, depth=13):
    """[zeta(a0 + i k h) for k = 0..K] by Euler-Maclaurin with a stepped power
    table; requires Re(a0) > -(2*depth - 1) and is used for Re(a0) >= -1."""
    a0 = _to_mp(a0)
    h = mpf(h)
    im0 = float(mp.im(a0))
    t_extreme = max(abs(im0), abs(im0 + K * float(h)))
    N = max(10, int(1.35 * mp.dps) + 12 + int(0.32 * t_extreme))
    step = [None] * N
    table = [None] * N
    for n in range(1, N):
        table[n] = _npow(n, a0)
        step[n] = mp.exp(mpc(0, -h) * _ln(n))
    pN = _npow(N, a0)
    stepN = mp.exp(mpc(0, -h) * _ln(N))
    invN = 1 / mpf(N)
    invN2 = invN * invN
    bern_fact = [bernoulli_mpf(2 * r) / mpf(math.factorial(2 * r)) for r in range(1, depth + 1)]
    npow_odd = []
    cur = invN
    for _ in range(depth):
        npow_odd.append(cur)
        cur *= invN2
    out = []
    for k in range(K + 1):
        st = a0 + mpc(0, k * h) if k else a0
        partial = mpf(0)
        for n in range(1, N):
            partial += table[n]
        value = partial + pN * N / (st - 1) + pN / 2
        rise = st
        for r in range(depth):
            value += bern_fact[r] * rise * pN * npow_odd[r]
            rise *= (st + 2 * r + 1) * (st + 2 * r + 2)
        out.append(value)
        if k < K:
            if (k + 1) % 256 == 0:  # resync the stepped table against drift
                base = a0 + mpc(0, (k + 1) * h)
                for n in range(1, N):
                    table[n] = _npow(n, base)
                pN = _npow(N, base)
            else:
                for n in range(1, N):
                    table[n] *= step[n]
                pN *= stepN
    return out


def _zeta_line(a0, h, K, depth=13):
    """[zeta(a0 + i k h) for k = 0..K]; reflects through the functional
    equation when Re(a0) < -1 (the direct Euler-Maclaurin partial sum would
    lose ~|Re a0| * log10(N) digits to cancellation there)."""
    a0 = _to_mp(a0)
    if mp.re(a0) >= -1:
        return _zeta_line_em(a0, h, K, depth)
    h = mpf(h)
    inner = _zeta_line_em(1 - a0, -h, K, depth)
    gline = _gamma_line(1 - a0, -h, K)
    x0 = mp.re(a0)
    sin_half = mp.sin(mp.pi * x0 / 2)
    cos_half = mp.cos(mp.pi * x0 / 2)
    e_pos = mp.exp(mp.pi * mp.im(a0) / 2)
    e_neg = 1 / e_pos
    e_step = mp.exp(mp.pi * h / 2)
    e_step_inv = 1 / e_step
    front = mp.exp(a0 * mp.ln(mpf(2)) + (a0 - 1) * mp.ln(mp.pi))  # 2^s pi^(s-1)
    front_step = mp.exp(mpc(0, h) * (mp.ln(mpf(2)) + mp.ln(mp.pi)))
    out = []
    for k in range(K + 1):
        cosh_half = (e_pos + e_neg) / 2
        sinh_half = (e_pos - e_neg) / 2
        sin_factor = sin_half * cosh_half + mpc(0, 1) * cos_half * sinh_half
        out.append(front * sin_factor * gline[k] * inner[k])
        front *= front_step
        e_pos *= e_step
        e_neg *= e_step_inv
    return out


_NEGZ_CACHE: dict = {}
_NEGZ_LOCK = threading.Lock()


def _gamma_negz_line(M, h, K):
    """[Gamma(-z_k) for z_k = (M - 1/2) + i k h, k = 0..K], cached per line.

    Reflection gives Gamma(-z) = (-1)^M pi / (cosh(pi t) Gamma(1 + z)) because
    sin(pi z) = (-1)^(M+1) cosh(pi t) exactly on the half-integer line.
    """
    key = (M, float(h), mp.prec)
    with _NEGZ_LOCK:
        hit = _NEGZ_CACHE.get(key)
        if hit is not None and len(hit) > K:
            return hit[: K + 1]
        c = M - mpf(1) / 2
        start = 0 if hit is None else len(hit)
        dens = _gamma_line(1 + c, h, K, k0=start)
        values = list(hit) if hit is not None else []
        sign = -mp.pi if M % 2 else mp.pi
        e_pos = mp.exp(mp.pi * start * h)
        e_neg = 1 / e_pos
        e_step = mp.exp(mp.pi * h)
        for k in range(start, K + 1):
            cosh_t = (e_pos + e_neg) / 2
            values.append(sign / (cosh_t * dens[k - start]))
            e_pos *= e_step
            e_neg /= e_step
        _NEGZ_CACHE[key] = values
        return values[: K + 1]


# -- Mellin-Barnes continuation ---------------------------------------------------


def _auto_M(re_s: float) -> int:
    """Contour shift: the strip bound plus two for headroom, nudged further
    until the contour Re(z) = M - 1/2 keeps distance >= 0.3 from the poles of
    zeta(s-z) (at z = s-1) and zeta(2s+z) (at z = 1-2s)."""
    M = max(2, math.ceil(2 * (0.75 - re_s)) + 2, math.floor(re_s) + 1)
    while min(M + 0.5 - re_s, M - 1.5 + 2 * re_s) < 0.3:
        M += 1
    return M


def _strip_check(re_s: float, M: int) -> None:
    if not (0.75 - M / 2 < re_s < M + 0.5):
        raise ValueError(
            f"continuation shift M = {M} does not satisfy "
            f"3/4 - M/2 < Re(s) = {re_s} < M + 1/2"
        )


def _mb_integral(s, M: int, cfg: OmegaEvalConfig, digit_target: int):
    """(h/(2 pi)) * trapezoid sum of Gamma(s+z) Gamma(-z) zeta(2s+z) zeta(s-z)
    over the line z = (M - 1/2) + i t, plus a truncation/discretization error
    estimate.  Runs at the caller's working precision."""
    c = M - mpf(1) / 2
    re_s = float(mp.re(s))
    im_s = float(mp.im(s))
    # analyticity half-width around the contour: Gamma(-z) poles sit one half
    # to either side; the zeta poles sit at Re(z) = Re(s) - 1 and 1 - 2 Re(s)
    d_eff = min(0.5, M + 0.5 - re_s, M - 1.5 + 2 * re_s)
    d_use = 0.9 * d_eff
    if d_use <= 0.05:
        raise ValueError("contour passes too close to a pole of the integrand; increase M")
    h = mpf(min(float(cfg.quad_step), 2 * math.pi * d_use / (math.log(10) * (digit_target + 4))))
    if cfg.quad_tmax is not None:
        t_max = float(cfg.quad_tmax)
        adaptive = False
    else:
        # solve pi t = ln10 (Dq + 6) + growth * ln t for the e^(-pi t) decay
        growth = max(2.0, re_s + 2.0)
        t_max = 12.0
        for _ in range(6):
            t_max = (math.log(10) * (digit_target + 6) + growth * max(0.0, math.log(t_max))) / math.pi
        t_max = max(6.0, t_max) + abs(im_s)
        adaptive = True
    real_s = im_s == 0 and isinstance(s, mpf)
    target_abs = mpf(10) ** (-(digit_target + 5))
    for _ in range(4):
        K = int(t_max / float(h)) + 1
        gamma_pos = _gamma_line(s + c, h, K)
        zeta_a_pos = _zeta_line(2 * s + c, h, K)
        zeta_b_pos = _zeta_line(s - c, -h, K)
        gamma_neg_z = _gamma_negz_line(M, h, K)
        q_pos = [
            gamma_pos[k] * gamma_neg_z[k] * zeta_a_pos[k] * zeta_b_pos[k]
            for k in range(K + 1)
        ]
        if real_s:
            # Q(-t) = conj(Q(t)): fold the negative half-line
            total = mpf(0)
            for k in range(K, 0, -1):
                total += mp.re(q_pos[k])
            total = 2 * total + mp.re(q_pos[0])
            tail_mag = abs(q_pos[K])
        else:
            gamma_min = _gamma_line(s + c, -h, K)
            zeta_a_min = _zeta_line(2 * s + c, -h, K)
            zeta_b_min = _zeta_line(s - c, h, K)
            total = mpc(0)
            for k in range(K, 0, -1):
                total += gamma_min[k] * mp.conj(gamma_neg_z[k]) * zeta_a_min[k] * zeta_b_min[k]
            tail_mag = max(
                abs(q_pos[K]),
                abs(gamma_min[K] * gamma_neg_z[K] * zeta_a_min[K] * zeta_b_min[K]),
            )
            for k in range(K + 1):
                total += q_pos[k]
        est_trunc = tail_mag / math.pi
        if not adaptive or est_trunc < target_abs:
            break
        t_max *= 1.4
    value = h * total / (2 * mp.pi)
    est = est_trunc + mpf(10) ** (-(digit_target + 4)) + (K + 1) * mpf(10) ** (-(mp.dps - 2))
    return value, est


def omega_continued(s, cfg: OmegaEvalConfig | None = None):
    """omega(s) by the Mellin-Barnes continuation."""
    return _continued_result(s, cfg or DEFAULT_CONFIG).value


def _continued_result(s, cfg: OmegaEvalConfig) -> OmegaResult:
    prec = working_digits()
    s0 = _to_mp(s)
    _pole_guard(s0)
    # removable singularities: every integer s collides with a pole of some
    # factor of the formula (Gamma(1-s) and zeta(s-k) at positive integers;
    # Gamma(2s-1), zeta(2s+k) and the rising-factorial zeros at the rest)
    eps = mpf(0)
    bump = 0
    nearest = int(mp.nint(mp.re(s0)))
    dist = abs(s0 - nearest)
    if dist == 0:
        if not cfg.auto_perturb:
            raise ContinuationCollisionError(
                f"s = {nearest} is a removable singularity of the continuation "
                "formula: evaluate at perturbed point (or leave auto_perturb on, "
                "which offsets s by 10^-(prec/2 + 2) automatically)"
            )
        eps = mpf(10) ** (-(prec // 2 + 2))
        bump = prec // 2 + 9
    elif dist < _COLLISION_NEIGHBORHOOD:
        bump = int(-mp.log10(dist)) + 6
    re_s = float(mp.re(s0))
    M = cfg.M if cfg.M is not None else _auto_M(re_s)
    _strip_check(re_s, M)
    digit_target = max(10, -(-prec // 3))
    finite_dps = prec + 15 + bump + max(0, int(2 * math.log10(abs(complex(s0)) + 2)))
    quad_dps = digit_target + 14
    with mp.workdps(quad_dps):
        s_quad = +s0 + eps
        integral, integral_est = _mb_integral(s_quad, M, cfg, digit_target)
    with mp.workdps(finite_dps):
        s_ev = +s0 + eps
        first = (
            gamma_complex(2 * s_ev - 1)
            * gamma_complex(1 - s_ev)
            * zeta_complex(3 * s_ev - 1)
            / gamma_complex(s_ev)
        )
        finite_sum = mpf(0)
        coeff = mpf(1)  # (-1)^k (s)_k / k!
        for k in range(M):
            finite_sum += coeff * zeta_complex(2 * s_ev + k) * zeta_complex(s_ev - k)
            coeff = coeff * (s_ev + k) / (-(k + 1))
        gamma_s = gamma_complex(s_ev)
        value = first + finite_sum + integral / gamma_s
        # pre-cancellation magnitudes bound the rounding loss
        big = abs(first) + abs(finite_sum) + abs(integral / gamma_s)
        est = (
            integral_est / abs(gamma_s)
            + (1 + big) * mpf(10) ** (-(finite_dps - 12))
        )
        s_report = +s_ev
    return OmegaResult(s=s0, s_evaluated=s_report, value=+value, method="mb", est_error=+est)


# -- dispatcher and friends -------------------------------------------------------


def omega(s, cfg: OmegaEvalConfig | None = None, method: str = "auto"):
    """omega(s) by the method of choice ("auto", "direct", or "mb")."""
    return omega_result(s, cfg, method).value


def omega_result(s, cfg: OmegaEvalConfig | None = None, method: str = "auto") -> OmegaResult:
    """Like omega() but returns the OmegaResult with metadata."""
    cfg = cfg or DEFAULT_CONFIG
    s0 = _to_mp(s)
    _pole_guard(s0)
    if method == "auto":
        method = "direct" if mp.re(s0) >= cfg.direct_sigma_min else "mb"
    if method == "direct":
        return _direct_result(s0, cfg)
    if method == "mb":
        return _continued_result(s0, cfg)
    raise ValueError(f"unknown method {method!r}; expected auto, direct, or mb")


def omega_residue(kind: str, m: int = 0):
    """Closed-form residue of omega at its poles.

    kind = "two_thirds":     Res at s = 2/3 is Gamma(1/3)^3 / (2 sqrt(3) pi)
                             = Gamma(1/3)^2 / (3 Gamma(2/3)), the coefficient the
                             first continuation term inherits from the pole of
                             zeta(3s-1).
    kind = "half_minus_m":   Res at s = 1/2 - m is
                             (-1)^m / 16^m * binom(2m, m) * zeta(1/2 - 3m).
    """
    prec = working_digits()
    with mp.workdps(prec + 10):
        if kind == "two_thirds":
            value = gamma_complex(mpf(1) / 3) ** 3 / (2 * mp.sqrt(3) * mp.pi)
        elif kind == "half_minus_m":
            if m < 0:
                raise ValueError("m must be a nonnegative integer")
            value = (
                mpf(-1) ** m
                / mpf(16) ** m
                * math.comb(2 * m, m)
                * zeta_complex(mpf(1) / 2 - 3 * m)
            )
        else:
            raise ValueError(f"unknown residue kind {kind!r}")
        value = mp.re(value)
    return +value


def verify_zeta_identity(n: int):
    """Relative residual of the convolution identity

        zeta(6n+2) = 2 (4n+1)! / ((6n+1) ((2n)!)^2)
                     * sum_{k=1}^{n} binom(2n, 2k-1) / binom(6n, 2n+2k-1)
                       * zeta(2n+2k) zeta(4n-2k+2),

    which is equivalent to the vanishing of omega at the negative integers.
    Both sides are evaluated with zeta_complex; the combinatorial factors are
    exact integers.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    prec = working_digits()
    with mp.workdps(prec + 15):
        lhs = zeta_complex(6 * n + 2)
        pref_num = 2 * math.factorial(4 * n + 1)
        pref_den = (6 * n + 1) * math.factorial(2 * n) ** 2
        total = mpf(0)
        for k in range(1, n + 1):
            ratio = mpf(math.comb(2 * n, 2 * k - 1)) / math.comb(6 * n, 2 * n + 2 * k - 1)
            total += ratio * zeta_complex(2 * n + 2 * k) * zeta_complex(4 * n - 2 * k + 2)
        rhs = mpf(pref_num) / pref_den * total
        residual = abs(lhs - rhs) / abs(lhs)
    return +residual


def trivial_zeros(count: int, cfg: OmegaEvalConfig | None = None):
    """[|omega(-n)| for n = 1..count]; each should vanish to working accuracy."""
    return [abs(omega(-n, cfg=cfg)) for n in range(1, count + 1)]
