"""Numba-compiled kernels, the default backend.

Signatures mirror :mod:`ellzeta.kernels.reference` exactly.  All loops run
serially in a fixed order so results are reproducible run to run; integer
powers are spelled out as products, which is markedly faster than complex
``**`` under the JIT.
"""

from __future__ import annotations

import numpy as np
from numba import njit

TWO_PI_I = 2j * np.pi
FOUR_PI_SQ = TWO_PI_I * TWO_PI_I
EIGHT_PI_CUBE_I = TWO_PI_I * TWO_PI_I * TWO_PI_I


@njit(cache=True)
def zeta_series(zs, q, terms):
    out = np.empty(zs.shape, dtype=np.complex128)
    for i in range(zs.size):
        u = np.exp(TWO_PI_I * zs.flat[i])
        uinv = 1.0 / u
        acc = 0.0 + 0.0j
        qn = 1.0 + 0.0j
        for _ in range(terms):
            qn *= q
            a = qn * uinv
            b = qn * u
            acc += a / (1.0 - a) - b / (1.0 - b)
        out.flat[i] = 1j * np.pi * (u + 1.0) / (u - 1.0) + TWO_PI_I * acc
    return out


@njit(cache=True)
def wp_series(zs, q, terms):
    const = 1.0 / 12.0 + 0.0j
    qn = 1.0 + 0.0j
    for _ in range(terms):
        qn *= q
        d = 1.0 - qn
        const -= 2.0 * qn / (d * d)
    out = np.empty(zs.shape, dtype=np.complex128)
    for i in range(zs.size):
        u = np.exp(TWO_PI_I * zs.flat[i])
        uinv = 1.0 / u
        acc = 0.0 + 0.0j
        qn = 1.0 + 0.0j
        for _ in range(terms):
            qn *= q
            a = qn * u
            b = qn * uinv
            da = 1.0 - a
            db = 1.0 - b
            acc += a / (da * da) + b / (db * db)
        du = 1.0 - u
        out.flat[i] = FOUR_PI_SQ * (const + u / (du * du) + acc)
    return out


@njit(cache=True)
def wp_prime_series(zs, q, terms):
    out = np.empty(zs.shape, dtype=np.complex128)
    for i in range(zs.size):
        u = np.exp(TWO_PI_I * zs.flat[i])
        uinv = 1.0 / u
        acc = 0.0 + 0.0j
        qn = 1.0 + 0.0j
        for _ in range(terms):
            qn *= q
            a = qn * u
            b = qn * uinv
            da = 1.0 - a
            db = 1.0 - b
            acc += a * (1.0 + a) / (da * da * da) - b * (1.0 + b) / (db * db * db)
        du = 1.0 - u
        out.flat[i] = EIGHT_PI_CUBE_I * (u * (1.0 + u) / (du * du * du) + acc)
    return out


@njit(cache=True)
def power_series(q, coeffs):
    acc = 0.0 + 0.0j
    qn = 1.0 + 0.0j
    for i in range(len(coeffs)):
        qn *= q
        acc += coeffs[i] * qn
    return acc


@njit(cache=True)
def delta_product(q, terms):
    acc = 1.0 + 0.0j
    qn = 1.0 + 0.0j
    for _ in range(terms):
        qn *= q
        t = 1.0 - qn
        t2 = t * t
        t4 = t2 * t2
        t8 = t4 * t4
        acc *= t8 * t8 * t8  # (1-q^n)^24
    return q * acc


@njit(cache=True)
def zeta_direct_sum(z, tau, radius):
    acc = 1.0 / z
    for m in range(-radius, radius + 1):
        for n in range(-radius, radius + 1):
            if m == 0 and n == 0:
                continue
            w = m * tau + n
            acc += 1.0 / (z - w) + 1.0 / w + z / (w * w)
    return acc


@njit(cache=True)
def wp_direct_sum(z, tau, radius):
    acc = 1.0 / (z * z)
    for m in range(-radius, radius + 1):
        for n in range(-radius, radius + 1):
            if m == 0 and n == 0:
                continue
            w = m * tau + n
            d = z - w
            acc += 1.0 / (d * d) - 1.0 / (w * w)
    return acc


@njit(cache=True)
def lattice_inv_power_sum(tau, k, radius):
    acc = 0.0 + 0.0j
    for m in range(-radius, radius + 1):
        for n in range(-radius, radius + 1):
            if m == 0 and n == 0:
                continue
            winv = 1.0 / (m * tau + n)
            term = winv
            for _ in range(k - 1):
                term *= winv
            acc += term
    return acc
