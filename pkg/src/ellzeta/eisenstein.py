"""q-expansions of the modular quantities: E2, E4, E6, G2, g2, g3, Delta.

Conventions (with q = exp(2*pi*i*tau)):

* E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n,
  E6 = 1 - 504 sum sigma_5(n) q^n.
* G2 = (pi^2/3) E2.  This is the normalization for which the quasi-period
  of the Weierstrass zeta function is eta(1) = G2(tau) and for which
  G2(-1/tau) = tau^2 G2(tau) - 2*pi*i*tau.
* g2 = (4 pi^4 / 3) E4 = 60 sum' w^-4 and g3 = (8 pi^6 / 27) E6
  = 140 sum' w^-6, matching the direct lattice sums over Z + tau*Z.
* Delta = q prod (1 - q^n)^24, with (2 pi)^12 Delta = g2^3 - 27 g3^2.

All series are evaluated at the given tau with no hidden modular
reduction; the truncation order grows automatically as Im(tau) shrinks
(:func:`ellzeta.config.series_terms`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from . import kernels
from .config import DEFAULT_CONFIG, EvalConfig, QSeriesConfig, series_terms
from .lattice import tau_value

TWO_PI_I = 2j * math.pi


def _qseries(cfg: Union[EvalConfig, QSeriesConfig, None]) -> QSeriesConfig:
    if cfg is None:
        return DEFAULT_CONFIG.qseries
    if isinstance(cfg, EvalConfig):
        return cfg.qseries
    return cfg


def sigma_divisor(k: int, n: int) -> int:
    """Divisor power sum sigma_k(n), exact."""
    if k < 1 or n < 1:
        raise ValueError("sigma_divisor requires k >= 1 and n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
        d += 1
    return total


_SIGMA_CACHE: dict[int, np.ndarray] = {}


def _sigma_coeffs(k: int, count: int) -> np.ndarray:
    """First ``count`` values of sigma_k as float64, sieved and cached."""
    cached = _SIGMA_CACHE.get(k)
    if cached is None or len(cached) < count:
        size = max(count, 256)
        table = [0] * (size + 1)
        for d in range(1, size + 1):
            dk = d ** k
            for m in range(d, size + 1, d):
                table[m] += dk
        cached = np.array(table[1:], dtype=np.float64)
        _SIGMA_CACHE[k] = cached
    return cached[:count]


def _nome(tau: complex) -> complex:
    return np.exp(TWO_PI_I * tau)


@lru_cache(maxsize=16384)
def _eisenstein_value(weight: int, tau: complex, terms: int) -> complex:
    q = _nome(tau)
    if weight == 2:
        return 1.0 - 24.0 * kernels.power_series(q, _sigma_coeffs(1, terms))
    if weight == 4:
        return 1.0 + 240.0 * kernels.power_series(q, _sigma_coeffs(3, terms))
    if weight == 6:
        return 1.0 - 504.0 * kernels.power_series(q, _sigma_coeffs(5, terms))
    raise ValueError(f"no Eisenstein series of weight {weight} here")


@lru_cache(maxsize=16384)
def _delta_value(tau: complex, terms: int) -> complex:
    return kernels.delta_product(_nome(tau), terms)


def _terms_for(tau: complex, cfg) -> int:
    return series_terms(_qseries(cfg).terms, tau.imag)


def e2(tau, cfg=None) -> complex:
    """Normalized weight-two Eisenstein series E2 (quasi-modular)."""
    t = tau_value(tau)
    return _eisenstein_value(2, t, _terms_for(t, cfg))


def e4(tau, cfg=None) -> complex:
    t = tau_value(tau)
    return _eisenstein_value(4, t, _terms_for(t, cfg))


def e6(tau, cfg=None) -> complex:
    t = tau_value(tau)
    return _eisenstein_value(6, t, _terms_for(t, cfg))


def g_big2(tau, cfg=None) -> complex:
    """G2(tau) = (pi^2/3) E2(tau); equals the quasi-period eta(1)."""
    return (math.pi ** 2 / 3.0) * e2(tau, cfg)


def g2_g3(tau, cfg=None) -> tuple[complex, complex]:
    """Weierstrass invariants (g2, g3) of the lattice Z + tau*Z."""
    t = tau_value(tau)
    terms = _terms_for(t, cfg)
    g2v = (4.0 * math.pi ** 4 / 3.0) * _eisenstein_value(4, t, terms)
    g3v = (8.0 * math.pi ** 6 / 27.0) * _eisenstein_value(6, t, terms)
    return g2v, g3v


def delta(tau, cfg=None) -> complex:
    """The discriminant cusp form, nonvanishing on the upper half-plane."""
    t = tau_value(tau)
    return _delta_value(t, _terms_for(t, cfg))


def g2_g3_direct_oracle(tau, radius: int = 200) -> tuple[complex, complex]:
    """(60 sum' w^-4, 140 sum' w^-6) by square-truncated lattice sums.

    Oracle only: converges polynomially, so it is held to coarse
    tolerances when cross-checking the q-series route.
    """
    t = tau_value(tau)
    return (
        60.0 * kernels.lattice_inv_power_sum(t, 4, radius),
        140.0 * kernels.lattice_inv_power_sum(t, 6, radius),
    )


def e2_tail_bound(tau, terms: Optional[int] = None, cfg=None) -> float:
    """Rigorous bound 25 * sum_{n>terms} n^2 |q|^n on the E2 truncation error."""
    t = tau_value(tau)
    n_used = terms if terms is not None else _terms_for(t, cfg)
    x = abs(_nome(t))
    m = n_used + 1
    # closed form of sum_{n>=m} n^2 x^n
    tail = x ** m * (m * m - (2 * m * m - 2 * m - 1) * x + (m - 1) ** 2 * x * x)
    tail /= (1.0 - x) ** 3
    return 25.0 * tail


@dataclass(frozen=True)
class EisensteinValues:
    """Bundle of the modular quantities at one point tau."""

    tau: complex
    e2: complex
    g_big2: complex
    g2: complex
    g3: complex
    delta: complex

    @classmethod
    def compute(cls, tau, cfg=None) -> "EisensteinValues":
        t = tau_value(tau)
        g2v, g3v = g2_g3(t, cfg)
        return cls(
            tau=t,
            e2=e2(t, cfg),
            g_big2=g_big2(t, cfg),
            g2=g2v,
            g3=g3v,
            delta=delta(t, cfg),
        )

    def discriminant_defect(self) -> float:
        """Relative defect of (2 pi)^-12 (g2^3 - 27 g3^2) / Delta = 1."""
        lhs = (self.g2 ** 3 - 27.0 * self.g3 ** 2) / (2.0 * math.pi) ** 12
        return abs(lhs / self.delta - 1.0)


__all__ = [
    "sigma_divisor",
    "e2",
    "e4",
    "e6",
    "g_big2",
    "g2_g3",
    "g2_g3_direct_oracle",
    "delta",
    "e2_tail_bound",
    "EisensteinValues",
]
