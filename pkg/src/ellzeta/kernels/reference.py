"""Pure-numpy kernels: the fallback backend.

Every function here has a numba twin in :mod:`ellzeta.kernels.jit` with the
same name and signature.  Series arguments are already reduced to the period
cell (or at least to |Im z / Im tau| < 1) by the callers.
"""

from __future__ import annotations

import numpy as np

TWO_PI_I = 2j * np.pi


def zeta_series(zs: np.ndarray, q: complex, terms: int) -> np.ndarray:
    """Trigonometric part of the Weierstrass zeta function on the cell.

    zeta(z) = G2*z + T(z); this returns T(z) only, the caller adds the
    linear term.
    """
    zs = np.asarray(zs, dtype=np.complex128)
    out = np.empty(zs.shape, dtype=np.complex128)
    n = np.arange(1, terms + 1)
    qn = q ** n
    for i, z in np.ndenumerate(zs):
        u = np.exp(TWO_PI_I * z)
        a = qn / u
        b = qn * u
        acc = np.sum(a / (1.0 - a) - b / (1.0 - b))
        out[i] = 1j * np.pi * (u + 1.0) / (u - 1.0) + TWO_PI_I * acc
    return out


def wp_series(zs: np.ndarray, q: complex, terms: int) -> np.ndarray:
    """Weierstrass p-function on the cell via its q-expansion."""
    zs = np.asarray(zs, dtype=np.complex128)
    out = np.empty(zs.shape, dtype=np.complex128)
    n = np.arange(1, terms + 1)
    qn = q ** n
    const = 1.0 / 12.0 - 2.0 * np.sum(qn / (1.0 - qn) ** 2)
    for i, z in np.ndenumerate(zs):
        u = np.exp(TWO_PI_I * z)
        a = qn * u
        b = qn / u
        acc = np.sum(a / (1.0 - a) ** 2 + b / (1.0 - b) ** 2)
        out[i] = TWO_PI_I ** 2 * (const + u / (1.0 - u) ** 2 + acc)
    return out


def wp_prime_series(zs: np.ndarray, q: complex, terms: int) -> np.ndarray:
    """Derivative of the p-function on the cell."""
    zs = np.asarray(zs, dtype=np.complex128)
    out = np.empty(zs.shape, dtype=np.complex128)
    n = np.arange(1, terms + 1)
    qn = q ** n
    for i, z in np.ndenumerate(zs):
        u = np.exp(TWO_PI_I * z)
        a = qn * u
        b = qn / u
        acc = np.sum(a * (1.0 + a) / (1.0 - a) ** 3 - b * (1.0 + b) / (1.0 - b) ** 3)
        out[i] = TWO_PI_I ** 3 * (u * (1.0 + u) / (1.0 - u) ** 3 + acc)
    return out


def power_series(q: complex, coeffs: np.ndarray) -> complex:
    """Sum of coeffs[n-1] * q^n for n = 1..len(coeffs)."""
    n = np.arange(1, len(coeffs) + 1)
    return complex(np.sum(np.asarray(coeffs) * q ** n))


def delta_product(q: complex, terms: int) -> complex:
    """Truncated discriminant product q * prod_{n<=terms} (1-q^n)^24."""
    n = np.arange(1, terms + 1)
    factors = (1.0 - q ** n) ** 24
    return complex(q * np.prod(factors))


def _lattice_points(tau: complex, radius: int):
    m, n = np.mgrid[-radius : radius + 1, -radius : radius + 1]
    w = m * tau + n
    mask = (m != 0) | (n != 0)
    return w[mask].astype(np.complex128)


def zeta_direct_sum(z: complex, tau: complex, radius: int) -> complex:
    """Oracle: square truncation of the defining zeta lattice sum."""
    w = _lattice_points(tau, radius)
    return complex(1.0 / z + np.sum(1.0 / (z - w) + 1.0 / w + z / w ** 2))


def wp_direct_sum(z: complex, tau: complex, radius: int) -> complex:
    """Oracle: square truncation of the defining p-function lattice sum."""
    w = _lattice_points(tau, radius)
    return complex(1.0 / z ** 2 + np.sum(1.0 / (z - w) ** 2 - 1.0 / w ** 2))


def lattice_inv_power_sum(tau: complex, k: int, radius: int) -> complex:
    """Oracle: square truncation of sum over nonzero m*tau+n of w^-k."""
    w = _lattice_points(tau, radius)
    return complex(np.sum(1.0 / w ** k))
