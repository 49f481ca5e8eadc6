"""Bessel engine: identities, oracle agreement, asymptotic bands, errors."""

import csv
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from synge_riemann import bessel
from synge_riemann.errors import AccuracyWindowWarning, DomainError

from helpers import DATA, log_grid

GRID = log_grid(1e-6, 1e4, 61)


def test_k0_at_one_matches_oracle():
    k0 = bessel.bessel_k(0, 1.0)
    assert abs(k0 - 0.4210244382) < 1e-9  # printed reference
    oracle = bessel.oracle_quadrature(0, 1.0)
    assert abs(k0 / oracle - 1.0) < 1e-12


def test_oracle_fixture_k1():
    # frozen during fixture generation; the oracle is the reference here
    assert abs(bessel.oracle_quadrature(1, 1.0) - 0.60190723019723457) < 1e-12


def test_recurrence_identity_exact_for_k3():
    for g in GRID:
        k1 = bessel.bessel_k(1, g)
        k2 = bessel.bessel_k(2, g)
        k3 = bessel.bessel_k(3, g)
        assert k3 == 4.0 * k2 / g + k1  # construction route


def test_recurrence_residuals_on_grid():
    for g in GRID:
        k = [bessel.bessel_k(j, g) for j in range(4)]
        if k[3] == 0.0:  # unscaled underflow at the far end
            k = [bessel.bessel_k_scaled(j, g) for j in range(4)]
        for j in (1, 2):
            resid = abs(k[j + 1] - 2.0 * j * k[j] / g - k[j - 1]) / k[j + 1]
            assert resid < 1e-12, (g, j, resid)


def test_derivative_identity_finite_difference():
    # d/dg (K_j / g^j) = -K_{j+1} / g^j to 1e-6 relative
    for g in log_grid(1e-2, 300.0, 13):
        h = 3e-6 * g

        for j in range(3):
            def f(x, j=j):
                return bessel.bessel_k(j, x) / x**j

            lhs = (f(g + h) - f(g - h)) / (2.0 * h)
            rhs = -bessel.bessel_k(j + 1, g) / g**j
            assert abs(lhs / rhs - 1.0) < 1e-6, (g, j)


def test_small_gamma_ratio_limit():
    # K1/K2 -> gamma/2 as gamma -> 0
    for g in (1e-6, 1e-5, 1e-4):
        r = bessel.ratio(bessel.K1_OVER_K2, g)
        assert abs(r / (g / 2.0) - 1.0) < 1e-4, g


def test_ratio_k1k2_tiny_value():
    r = bessel.ratio(bessel.K1_OVER_K2, 1e-6)
    assert abs(r - 5e-7) / 5e-7 < 1e-3


def test_ratio_k0k1_coarse_band_at_4():
    r = bessel.ratio(bessel.K0_OVER_K1, 4.0)
    assert 1.0 - 1.0 / 8.0 <= r <= 1.0 - 1.0 / 8.0 + 3.0 / 128.0 + 3.0 / 1024.0


def test_ratios_below_one_on_grid():
    for g in GRID:
        assert 0.0 < bessel.ratio(bessel.K0_OVER_K1, g) < 1.0
        assert 0.0 < bessel.ratio(bessel.K1_OVER_K2, g) < 1.0


def test_scaled_band_order0_at_100():
    lead = math.sqrt(math.pi / 200.0)
    val = bessel.bessel_k_scaled(0, 100.0)
    slack = bessel.asymptotic_remainder_bound(0, 2, 100.0) / 100.0**2
    lo = lead * (1.0 - 1.0 / 800.0 - slack)
    hi = lead * (1.0 - 1.0 / 800.0 + slack)
    assert lo <= val <= hi


def test_scaled_band_order1_at_100():
    lead = math.sqrt(math.pi / 200.0)
    val = bessel.bessel_k_scaled(1, 100.0)
    slack = bessel.asymptotic_remainder_bound(1, 2, 100.0) / 100.0**2
    assert lead * (1.0 + 3.0 / 800.0 - slack) <= val <= lead * (1.0 + 3.0 / 800.0 + slack)


def test_scaling_definition():
    em1 = math.exp(-1.0)
    for j in range(4):
        assert abs(bessel.bessel_k_scaled(j, 1.0) * em1 / bessel.bessel_k(j, 1.0) - 1.0) < 1e-12


def test_evaluate_consistency():
    ev = bessel.evaluate(2, 3.7)
    assert ev.gamma == 3.7
    assert abs(ev.value - ev.scaled * math.exp(-3.7)) <= 1e-15 * ev.value


def test_asymptotic_remainder_bound_certificate():
    # n-term truncations sit inside the certified remainder band
    for g in (32.0, 50.0, 100.0, 500.0):
        for j in (0, 1):
            exact = math.sqrt(2.0 * g / math.pi) * bessel.bessel_k_scaled(j, g)
            for n in range(1, 6):
                partial = sum(
                    bessel.asymptotic_coefficient(j, m) * g**-m for m in range(n)
                )
                bound = bessel.asymptotic_remainder_bound(j, n, g)
                assert abs(g**n * (exact - partial)) <= bound * (1.0 + 1e-9), (g, j, n)


def test_branch_overlap_agreement():
    # series and asymptotic expansions agree through the switch band
    from synge_riemann._ddcore import _k01_series, _k_asym_scaled

    for g in [16.0 + 0.25 * i for i in range(17)]:
        _, k0s, _, k1s = _k01_series(g)
        assert abs(k0s / _k_asym_scaled(0, g) - 1.0) < 1e-12
        assert abs(k1s / _k_asym_scaled(1, g) - 1.0) < 1e-12


def test_oracle_agreement_sample():
    for g in log_grid(1e-3, 500.0, 21):
        for j in range(4):
            assert abs(bessel.bessel_k(j, g) / bessel.oracle_quadrature(j, g) - 1.0) < 1e-10


def test_oracle_scaled_at_500():
    lhs = bessel.oracle_quadrature(0, 500.0) * math.exp(500.0)
    assert math.isfinite(lhs)
    assert abs(lhs / bessel.bessel_k_scaled(0, 500.0) - 1.0) < 1e-8


def test_frozen_fixtures():
    with open(DATA / "bessel_fixtures.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 192
    for row in rows:
        j = int(row["order"])
        g = float(row["gamma"])
        assert abs(bessel.bessel_k(j, g) / float(row["value"]) - 1.0) < 1e-12
        assert abs(bessel.bessel_k_scaled(j, g) / float(row["scaled"]) - 1.0) < 1e-12
        assert abs(bessel.bessel_k(j, g) / float(row["oracle_value"]) - 1.0) < 1e-10


def test_domain_errors():
    with pytest.raises(DomainError):
        bessel.bessel_k(0, 0.0)
    with pytest.raises(DomainError):
        bessel.bessel_k(0, -1.0)
    with pytest.raises(DomainError):
        bessel.bessel_k(4, 1.0)
    with pytest.raises(DomainError):
        bessel.ratio("K2_over_K3", 1.0)
    with pytest.raises(DomainError):
        bessel.oracle_quadrature(0, -2.0)


def test_window_warning():
    with pytest.warns(AccuracyWindowWarning):
        bessel.bessel_k(0, 1e-8)
    with pytest.warns(AccuracyWindowWarning):
        bessel.bessel_k_scaled(1, 2e4)


@given(st.floats(min_value=1e-6, max_value=1e4))
@settings(max_examples=60, deadline=None)
def test_monotone_decreasing_and_order_increasing(g):
    h = g * (1.0 + 1e-3)
    for j in range(4):
        # strict decrease of the unscaled function via scaled comparison:
        # K(g) > K(h) <=> Ks(g) > Ks(h) e^{g-h}
        assert bessel.bessel_k_scaled(j, g) > bessel.bessel_k_scaled(j, h) * math.exp(g - h)
    for j in range(3):
        assert bessel.bessel_k_scaled(j, g) < bessel.bessel_k_scaled(j + 1, g)


@given(st.floats(min_value=1e-6, max_value=1e4))
@settings(max_examples=60, deadline=None)
def test_holder_inequality(g):
    k0s, k1s, k2s, _ = bessel._k_all_scaled(g)
    assert k1s * k1s <= 3.0 * k0s * k2s * (1.0 + 1e-14)
    u = k0s / k1s
    assert 3.0 * u * u + 6.0 * u / g - 1.0 >= -1e-14
