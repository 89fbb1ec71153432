import pytest

import ellzeta as ez
from ellzeta import kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger JIT compilation and coefficient caches before any timed test."""
    tau = 0.3 + 1.2j
    ez.zeta_w(tau, 0.21 + 0.13j)
    ez.wp(tau, 0.21 + 0.13j)
    ez.wp_prime(tau, 0.21 + 0.13j)
    ez.delta(tau)
    ez.e2(tau)
    ez.period_integral_wp_power(1, tau, (1, 0), 0.25 + 0.25 * tau)
    kernels.zeta_direct_sum(0.25 + 0.1j, tau, 5)
    kernels.wp_direct_sum(0.25 + 0.1j, tau, 5)
    kernels.lattice_inv_power_sum(tau, 4, 5)
