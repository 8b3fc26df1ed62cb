"""Big-integer counting of SU(3) representations and plain partitions."""

from __future__ import annotations

import pytest
from mpmath import mp, mpf

from su3asym.exact_counting import (
    EXACT_LIMIT,
    euler_product_coeffs,
    hr_estimate,
    log_r_float64,
    p_exact,
    r_exact,
    r_exact_via_exp,
    su3_parts,
)


def brute_force_dimensions(limit):
    """All dimensions jk(j+k)/2 <= limit with multiplicities, by double loop."""
    counts = {}
    j = 1
    while j * (j + 1) // 2 <= limit:  # smallest dimension for this j is at k=1
        k = 1
        while j * k * (j + k) // 2 <= limit:
            d = j * k * (j + k) // 2
            counts[d] = counts.get(d, 0) + 1
            k += 1
        j += 1
    return sorted(counts.items())


def test_su3_parts_small_spectrum():
    assert su3_parts(10) == brute_force_dimensions(10)
    # spelled out: dims 1 (j=k=1), 3 (1,2 and 2,1), 6 (1,3 and 3,1), 8 (2,2), 10 (1,4 and 4,1)
    assert su3_parts(10) == [(1, 1), (3, 2), (6, 2), (8, 1), (10, 2)]


def test_su3_parts_larger_spectrum_matches_brute_force():
    assert su3_parts(500) == brute_force_dimensions(500)


def test_r_exact_first_values():
    assert r_exact(7) == [1, 1, 1, 3, 3, 3, 8, 8]


def test_r_exact_matches_rational_exp_oracle():
    n = 150
    assert r_exact(n) == r_exact_via_exp(n)


def test_r_exact_monotone_from_degree_three():
    vals = r_exact(400)
    assert all(vals[n + 1] >= vals[n] for n in range(2, 400))


def test_r_exact_cap_guard():
    with pytest.raises(ValueError):
        r_exact(EXACT_LIMIT + 1)


def test_growth_bracket_observed():
    # Observed growth scale: log r(n) / n^(2/5) sits in [3, 5] on this range
    # and still increases (the limiting constant A1 = 6.858... is approached
    # from below far beyond desk scale).
    mp.dps = 30
    vals = r_exact(10000)
    samples = []
    for n in (1000, 5000, 10000):
        samples.append(mp.log(mpf(vals[n])) / mpf(n) ** (mpf(2) / 5))
    assert all(mpf(3) < s < mpf(5) for s in samples)
    assert samples[0] < samples[1] < samples[2]


def test_log_r_float64_tracks_exact():
    vals = r_exact(2000)
    logs = log_r_float64(2000)
    mp.dps = 30
    for n in (10, 100, 1000, 2000):
        want = mp.log(mpf(vals[n]))
        assert abs(mpf(logs[n]) - want) / max(1, abs(want)) < mpf("1e-9")


def test_euler_product_coeffs_single_part():
    # One part of size 2: coefficients of 1/(1 - q^2)
    coeffs = euler_product_coeffs([(2, 1)], 7)
    assert coeffs == [1, 0, 1, 0, 1, 0, 1, 0]


def test_p_exact_known_values():
    assert p_exact(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_hr_estimate_brackets_p500():
    mp.dps = 30
    p500 = p_exact(500)[-1]
    ratio = mpf(p500) / hr_estimate(500)
    assert mpf("0.9") < ratio < mpf("1.1")
