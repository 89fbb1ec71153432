import math

import numpy as np
import pytest

from ellzeta import kernels
from ellzeta.config import DEFAULT_CONFIG, EvalConfig, QSeriesConfig
from ellzeta.eisenstein import g2_g3, g_big2
from ellzeta.lattice import Lattice, is_infinity
from ellzeta.weierstrass import (
    eta_of,
    eta_pair,
    eta_pair_from_zeta,
    legendre_defect,
    period_integral_wp_power,
    wp,
    wp_prime,
    zeta_general,
    zeta_w,
)

TWO_PI_I = 2j * math.pi


def test_wp_pole_at_lattice_points():
    assert is_infinity(wp(1j, 0))
    assert is_infinity(wp(1j, 1))
    assert is_infinity(wp(0.3 + 1.2j, 2 + 3 * (0.3 + 1.2j)))
    assert is_infinity(wp(1j, 1e-13))  # within the pole tolerance


def test_wp_is_even():
    tau, z = 1.5j, 0.3 + 0.2j
    assert abs(wp(tau, z) - wp(tau, -z)) < 1e-10


def test_wp_against_direct_sum():
    # oracle: square-truncated defining sum, radius 300
    direct = kernels.wp_direct_sum(0.25 + 0j, 1j, 300)
    assert abs(wp(1j, 0.25) - direct) < 1e-3 * (1 + abs(direct))


def test_wp_prime_is_odd():
    tau, z = 1.2j, 0.31 + 0.17j
    assert abs(wp_prime(tau, z) + wp_prime(tau, -z)) < 1e-10


def test_wp_prime_differential_equation():
    tau, z = 1.2j, 0.3 + 0.1j
    g2v, g3v = g2_g3(tau)
    p = wp(tau, z)
    lhs = wp_prime(tau, z) ** 2
    rhs = 4 * p ** 3 - g2v * p - g3v
    assert abs(lhs - rhs) < 1e-7 * abs(rhs)


def test_wp_prime_vanishes_at_half_period():
    assert abs(wp_prime(1.3j, 0.5)) < 1e-9


def test_zeta_is_odd():
    tau, z = 2j, 0.2 + 0.3j
    assert abs(zeta_w(tau, z) + zeta_w(tau, -z)) < 1e-10


def test_zeta_quasi_period_is_g2():
    tau, z = 0.3 + 1.4j, 0.21 + 0.05j
    assert abs(zeta_w(tau, z + 1) - zeta_w(tau, z) - g_big2(tau)) < 1e-9


def test_zeta_against_direct_sum():
    direct = kernels.zeta_direct_sum(0.25 + 0j, 1j, 300)
    assert abs(zeta_w(1j, 0.25) - direct) < 1e-3 * (1 + abs(direct))


def test_zeta_pole():
    assert is_infinity(zeta_w(1j, 0))
    assert is_infinity(zeta_w(1j, 3 + 2j))


def test_quasi_periodicity_grid():
    tau = 0.12 + 1.33j
    z = 0.17 + 0.29 * tau
    pair = eta_pair(tau)
    base = zeta_w(tau, z)
    for m in range(-5, 6):
        for n in range(-5, 6):
            shifted = zeta_w(tau, z + m + n * tau)
            expected = base + m * pair.eta1 + n * pair.eta2
            assert abs(shifted - expected) < 1e-9


def test_zeta_derivative_is_minus_wp():
    rng = np.random.default_rng(5)
    step = 1e-6
    for _ in range(25):
        tau = complex(rng.uniform(-0.4, 0.4), rng.uniform(0.9, 1.8))
        z = rng.uniform(-0.4, 0.4) + rng.uniform(0.15, 0.45) * tau
        fd = (zeta_w(tau, z + step) - zeta_w(tau, z - step)) / (2 * step)
        assert abs(fd + wp(tau, z)) < 1e-5


def test_zeta_general_scaling():
    alpha = 2.0
    lhs = zeta_general(Lattice(alpha, alpha * 1j), alpha * 0.3)
    rhs = zeta_w(1j, 0.3) / alpha
    assert abs(lhs - rhs) < 1e-10


def test_zeta_general_identity_scale():
    assert abs(zeta_general(Lattice(1, 1j), 0.3) - zeta_w(1j, 0.3)) < 1e-14


def test_zeta_general_complex_scale():
    alpha = 1 + 1j
    lhs = zeta_general(Lattice(alpha, alpha * 1j), alpha * 0.3)
    rhs = zeta_w(1j, 0.3) / alpha
    assert abs(lhs - rhs) < 1e-10


def test_zeta_general_changed_basis():
    # same lattice through a unimodular basis change: T-image of (1, tau)
    tau = 0.23 + 1.17j
    z = 0.31 + 0.11j
    lhs = zeta_general(Lattice(1 + tau, tau), z)
    rhs = zeta_w(tau, z)
    assert abs(lhs - rhs) < 1e-9


def test_eta_pair_legendre_by_construction():
    pair = eta_pair(0.4 + 1.6j)
    assert abs(pair.legendre_defect()) < 1e-12


def test_eta_pair_halfperiod_route():
    pair = eta_pair(1.3j)
    assert abs(pair.eta1 - 2 * zeta_w(1.3j, 0.5)) < 1e-8


def test_eta1_large_im_limit():
    assert abs(eta_pair(35j).eta1 - math.pi ** 2 / 3) < 1e-10


def test_eta_against_independent_direct_sums():
    # the normalization pin: quasi-periods measured from the raw lattice
    # sums, with no q-series anywhere in the oracle path
    tau = 1j
    z = 0.31 + 0.21j
    eta1_direct = kernels.zeta_direct_sum(z + 1, tau, 300) - kernels.zeta_direct_sum(
        z, tau, 300
    )
    assert abs(eta1_direct - math.pi) < 2e-3
    assert abs(eta1_direct - g_big2(tau)) < 2e-3
    eta2_direct = kernels.zeta_direct_sum(z + tau, tau, 300) - kernels.zeta_direct_sum(
        z, tau, 300
    )
    assert abs(tau * eta1_direct - eta2_direct - TWO_PI_I) < 5e-3


def test_eta_of_linearity():
    tau = 0.2 + 1.5j
    pair = eta_pair(tau)
    assert eta_of(tau, (0, 0)) == 0
    value = eta_of(tau, (1, 1))
    assert abs(value - (pair.eta1 + pair.eta2)) < 1e-12
    assert abs(value - 2 * zeta_w(tau, (1 + tau) / 2)) < 1e-8


def test_eta_of_general_lattice_scaling():
    alpha = 1 + 1j
    lhs = eta_of(Lattice(alpha, alpha * 1j), (1, 0))
    rhs = eta_of(1j, (1, 0)) / alpha
    assert abs(lhs - rhs) < 1e-12


@pytest.mark.parametrize("tau", [1j, 0.3 + 1.7j, 10j])
def test_legendre_defect_vanishes(tau):
    assert abs(legendre_defect(tau)) < 1e-8


def test_eta_pair_from_zeta_matches_closed_form():
    tau = -0.31 + 1.22j
    a = eta_pair(tau)
    b = eta_pair_from_zeta(tau)
    assert abs(a.eta1 - b.eta1) < 1e-10
    assert abs(a.eta2 - b.eta2) < 1e-10


def test_period_integral_constant():
    tau = 0.4 + 1.3j
    value = period_integral_wp_power(0, tau, (1, 0), 0.25 + 0.25 * tau)
    assert abs(value - 1.0) < 1e-12


def test_period_integral_first_power_gives_minus_eta():
    tau = 0.4 + 1.3j
    pair = eta_pair(tau)
    value = period_integral_wp_power(1, tau, (1, 0), 0.25 + 0.25 * tau)
    assert abs(value + pair.eta1) < 1e-6 * (1 + abs(pair.eta1))


def test_period_integral_second_power_gives_g2_over_12():
    tau = 0.4 + 1.3j
    g2v = g2_g3(tau)[0]
    value = period_integral_wp_power(2, tau, (1, 0), 0.25 + 0.25 * tau)
    assert abs(value - g2v / 12) < 1e-6 * (1 + abs(g2v) / 12)


def test_period_integral_three_term_recurrence():
    # I_{n+1} = (2n-1)/(4(2n+1)) g2 I_{n-1} + (n-1)/(2(2n+1)) g3 I_{n-2}
    tau = 0.17 + 1.21j
    g2v, g3v = g2_g3(tau)
    z0 = 0.25 + 0.25 * tau
    integrals = [
        period_integral_wp_power(k, tau, (0, 1), z0, DEFAULT_CONFIG) for k in range(7)
    ]
    for n in range(1, 6):
        predicted = (2 * n - 1) / (4 * (2 * n + 1)) * g2v * integrals[n - 1]
        predicted += (n - 1) / (2 * (2 * n + 1)) * g3v * integrals[n - 2]
        assert abs(integrals[n + 1] - predicted) < 1e-5 * (1 + abs(predicted))


def test_period_integral_rejects_path_near_pole():
    with pytest.raises(ValueError):
        period_integral_wp_power(1, 1j, (1, 0), 0.0)


def test_cell_boundary_points_converge():
    # arguments on the cell boundary are fine for the series
    tau = 0.3 + 1.1j
    val = zeta_w(tau, 0.5)
    assert abs(2 * val - eta_pair(tau).eta1) < 1e-9


def test_custom_config_quad_points():
    cfg = EvalConfig(qseries=QSeriesConfig(terms=96), quad_points=64)
    tau = 0.4 + 1.3j
    value = period_integral_wp_power(2, tau, (1, 0), 0.25 + 0.25 * tau, cfg)
    assert abs(value - g2_g3(tau)[0] / 12) < 1e-6
