import cmath
import math

import numpy as np
import pytest

from ellzeta import kernels
from ellzeta.config import QSeriesConfig
from ellzeta.eisenstein import (
    EisensteinValues,
    delta,
    e2,
    e2_tail_bound,
    e4,
    e6,
    g2_g3,
    g_big2,
    sigma_divisor,
)
from ellzeta.groups import CongruenceGroup, sample_elements
from ellzeta.lattice import mobius, reduce_to_fundamental


def test_sigma_examples():
    assert sigma_divisor(1, 1) == 1
    assert sigma_divisor(1, 6) == 12
    # sigma_3(4): enumerate divisors directly
    assert sigma_divisor(3, 4) == sum(d ** 3 for d in (1, 2, 4)) == 73


def test_sigma_validation():
    with pytest.raises(ValueError):
        sigma_divisor(0, 5)
    with pytest.raises(ValueError):
        sigma_divisor(1, 0)


def test_e2_constant_term_at_large_im():
    assert abs(e2(50j) - 1.0) < 1e-12


def test_e2_periodicity():
    tau = 0.37 + 1.13j
    assert abs(e2(tau + 1) - e2(tau)) < 1e-12


def test_e2_at_i_against_independent_truncation():
    # independent oracle: plain-python 200-term series
    q = cmath.exp(2j * cmath.pi * 1j)
    acc = 0.0 + 0.0j
    for n in range(1, 201):
        acc += sum(d for d in range(1, n + 1) if n % d == 0) * q ** n
    oracle = 1 - 24 * acc
    assert abs(e2(1j) - oracle) < 1e-12
    assert abs(e2(1j) - 3 / math.pi) < 1e-12


def test_g3_vanishes_at_i():
    assert abs(g2_g3(1j)[1]) < 1e-9


def test_g2_vanishes_at_sixth_root():
    rho = cmath.exp(2j * cmath.pi / 3)
    assert abs(g2_g3(rho)[0]) < 1e-9


def test_g2_ratio_against_direct_lattice_sum():
    # oracle: 60 * truncated sum of w^-4, square radius 200
    direct = {
        tau: 60.0 * kernels.lattice_inv_power_sum(tau, 4, 200) for tau in (1j, 2j)
    }
    series_ratio = g2_g3(2j)[0] / g2_g3(1j)[0]
    oracle_ratio = direct[2j] / direct[1j]
    assert abs(series_ratio / oracle_ratio - 1) < 1e-3


def test_g3_against_direct_lattice_sum():
    tau = 0.3 + 1.2j
    direct = 140.0 * kernels.lattice_inv_power_sum(tau, 6, 200)
    assert abs(g2_g3(tau)[1] / direct - 1) < 1e-3


def test_g_big2_constant_term():
    # eta(1) -> pi^2/3 as Im tau grows, matching E2 -> 1
    assert abs(g_big2(40j) - math.pi ** 2 / 3) < 1e-10


def test_g_big2_at_i():
    # from E2(i) = 3/pi: G2(i) = (pi^2/3)(3/pi) = pi
    assert abs(g_big2(1j) - math.pi) < 1e-12


def test_g_big2_periodicity():
    tau = -0.21 + 0.97j
    assert abs(g_big2(tau + 1) - g_big2(tau)) < 1e-12


def test_delta_leading_coefficient():
    tau = 30j
    q = cmath.exp(2j * cmath.pi * tau)
    assert abs(delta(tau) / q - 1.0) < 1e-12


def test_delta_periodicity():
    tau = 0.11 + 1.31j
    assert abs(delta(tau + 1) / delta(tau) - 1.0) < 1e-12


def test_discriminant_identity():
    vals = EisensteinValues.compute(0.3 + 1.1j)
    assert vals.discriminant_defect() < 1e-8


@pytest.mark.parametrize(
    "evaluator,weight",
    [
        (lambda t: g2_g3(t)[0], 4),
        (lambda t: g2_g3(t)[1], 6),
        (delta, 12),
    ],
)
def test_modular_weight_transforms(evaluator, weight):
    gammas = sample_elements(CongruenceGroup.full(), 25, seed=7)
    rng = np.random.default_rng(11)
    max_defect = 0.0
    for gamma in gammas:
        tau = complex(rng.uniform(-0.45, 0.45), rng.uniform(0.95, 1.9))
        lhs = evaluator(mobius(gamma, tau))
        rhs = (gamma.c * tau + gamma.d) ** weight * evaluator(tau)
        max_defect = max(max_defect, abs(lhs / rhs - 1.0))
    assert max_defect < 1e-7


def test_g_big2_quasi_modularity():
    # the transformation law that makes eta(tau)/eta(1) equivariant
    for tau in (0.2 + 1.1j, 1j, -0.4 + 0.93j):
        lhs = g_big2(-1.0 / tau)
        rhs = tau ** 2 * g_big2(tau) - 2j * math.pi * tau
        assert abs(lhs - rhs) <= 1e-7 * (1 + abs(lhs))


def test_e2_is_logarithmic_derivative_of_delta():
    tau = 0.17 + 1.23j
    step = 1e-5
    delta_prime = (delta(tau + step) - delta(tau - step)) / (2 * step)
    lhs = delta_prime / (2j * math.pi * delta(tau))
    assert abs(lhs / e2(tau) - 1.0) < 1e-7


def test_low_im_evaluation_stays_accurate():
    # adaptive truncation: compare a low point against its reduced twin,
    # using g2(tau') = (c*tau+d)^4 g2(tau) with tau' = gamma(tau)
    tau = 0.3 + 0.02j
    point, gamma = reduce_to_fundamental(tau)
    cocycle = gamma.c * tau + gamma.d
    lhs = g2_g3(tau)[0]
    rhs = g2_g3(point.tau)[0] / cocycle ** 4
    assert abs(lhs / rhs - 1.0) < 1e-9


def test_e2_tail_bound_dominates_truncation():
    tau = 1.0j
    coarse = e2(tau, QSeriesConfig(terms=64))
    fine = e2(tau, QSeriesConfig(terms=400))
    assert abs(coarse - fine) <= e2_tail_bound(tau, 64)
    assert e2_tail_bound(tau, 64) < 1e-12


def test_e4_e6_constant_terms():
    assert abs(e4(45j) - 1.0) < 1e-12
    assert abs(e6(45j) - 1.0) < 1e-12
