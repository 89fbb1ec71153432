"""Numeric evaluation of the Weierstrass functions p, p', zeta and the
quasi-period map eta on Z + tau*Z and on general lattices.

Evaluation strategy: an argument z is split as z = z0 + m + n*tau with z0
in the period cell, the cell value comes from the exponentially convergent
trigonometric q-series, and quasi-periodicity restores the rest:

    zeta(z) = zeta(z0) + m*eta(1) + n*eta(tau),
    eta(1) = G2(tau),          eta(tau) = tau*G2(tau) - 2*pi*i.

The quasi-periods satisfy the Legendre relation in the orientation

    tau*eta(1) - eta(tau) = 2*pi*i

for Im(tau) > 0; :func:`legendre_defect` measures the deviation from an
independent half-period route, eta(w) = 2*zeta(w/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

import numpy as np

from . import kernels
from .config import DEFAULT_CONFIG, EvalConfig, series_terms
from .eisenstein import g_big2
from .lattice import (
    INFINITY,
    Lattice,
    Value,
    is_infinity,
    normalize_to_tau,
    tau_value,
)

TWO_PI_I = 2j * math.pi

POLE_EPS = 1e-12
QUAD_POLE_CLEARANCE = 1e-3


@dataclass(frozen=True)
class QuasiPeriodPair:
    """Quasi-periods (eta(1), eta(tau)) of the lattice Z + tau*Z."""

    eta1: complex
    eta2: complex
    tau: complex

    def legendre_defect(self) -> complex:
        return self.tau * self.eta1 - self.eta2 - TWO_PI_I


@dataclass(frozen=True)
class EvalContext:
    """Per-tau series data shared by the evaluators."""

    tau: complex
    q: complex
    terms: int
    eta1: complex
    eta2: complex


def _context(tau, cfg: EvalConfig) -> EvalContext:
    t = tau_value(tau)
    terms = series_terms(cfg.qseries.terms, t.imag)
    g2big = g_big2(t, cfg.qseries)
    return EvalContext(
        tau=t,
        q=np.exp(TWO_PI_I * t),
        terms=terms,
        eta1=g2big,
        eta2=t * g2big - TWO_PI_I,
    )


def _reduce_array(zs: np.ndarray, tau: complex):
    """Vectorized cell reduction; same convention as lattice_reduce_point."""
    zs = np.asarray(zs, dtype=np.complex128)
    y = zs.imag / tau.imag
    x = zs.real - y * tau.real
    m = np.floor(x + 0.5)
    n = np.floor(y + 0.5)
    return zs - m - n * tau, m.astype(np.int64), n.astype(np.int64)


def _pole_distance(z0: np.ndarray, tau: complex) -> np.ndarray:
    """Distance from reduced points to the nearest lattice point."""
    z0 = np.asarray(z0, dtype=np.complex128)
    dist = np.full(z0.shape, np.inf)
    for i in (-1, 0, 1):
        for j in (-1, 0, 1):
            dist = np.minimum(dist, np.abs(z0 - (i + j * tau)))
    return dist


def wp(tau, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> Value:
    """Weierstrass p-function of Z + tau*Z; INFINITY on the lattice."""
    ctx = _context(tau, cfg)
    z0, _, _ = _reduce_array(np.array([z]), ctx.tau)
    if _pole_distance(z0, ctx.tau)[0] < POLE_EPS:
        return INFINITY
    return complex(kernels.wp_series(z0, ctx.q, ctx.terms)[0])


def wp_prime(tau, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> Value:
    """Derivative of the p-function; odd, INFINITY on the lattice."""
    ctx = _context(tau, cfg)
    z0, _, _ = _reduce_array(np.array([z]), ctx.tau)
    if _pole_distance(z0, ctx.tau)[0] < POLE_EPS:
        return INFINITY
    return complex(kernels.wp_prime_series(z0, ctx.q, ctx.terms)[0])


def _zeta_with_context(ctx: EvalContext, z: complex) -> Value:
    z0, m, n = _reduce_array(np.array([z]), ctx.tau)
    if _pole_distance(z0, ctx.tau)[0] < POLE_EPS:
        return INFINITY
    cell = kernels.zeta_series(z0, ctx.q, ctx.terms)[0] + ctx.eta1 * z0[0]
    return complex(cell + int(m[0]) * ctx.eta1 + int(n[0]) * ctx.eta2)


def zeta_w(tau, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> Value:
    """Weierstrass zeta function of Z + tau*Z; INFINITY on the lattice."""
    return _zeta_with_context(_context(tau, cfg), z)


def zeta_general(lat: Lattice, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> Value:
    """zeta on a general lattice via weight -1 homogeneity.

    zeta(w1*(Z+tau*Z), z) = zeta(Z+tau*Z, z/w1) / w1 with tau = w2/w1.
    """
    tau, scale = normalize_to_tau(lat)
    inner = zeta_w(tau, complex(z) / scale, cfg)
    if is_infinity(inner):
        return INFINITY
    return inner / scale


def eta_pair(tau, cfg: EvalConfig = DEFAULT_CONFIG) -> QuasiPeriodPair:
    """Closed-form quasi-periods (G2(tau), tau*G2(tau) - 2*pi*i)."""
    ctx = _context(tau, cfg)
    return QuasiPeriodPair(eta1=ctx.eta1, eta2=ctx.eta2, tau=ctx.tau)


def eta_pair_from_zeta(tau, cfg: EvalConfig = DEFAULT_CONFIG) -> QuasiPeriodPair:
    """Quasi-periods from the half-period values eta(w) = 2*zeta(w/2)."""
    ctx = _context(tau, cfg)
    eta1 = 2.0 * _zeta_with_context(ctx, 0.5)
    eta2 = 2.0 * _zeta_with_context(ctx, 0.5 * ctx.tau)
    return QuasiPeriodPair(eta1=eta1, eta2=eta2, tau=ctx.tau)


def eta_of(
    lat_or_tau: Union[Lattice, complex, "object"],
    omega: Tuple[int, int],
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """eta at the lattice point m*omega1 + n*omega2, by Z-linearity.

    For a bare tau the basis is (1, tau); a general lattice is handled via
    the weight -1 scaling of eta.
    """
    m, n = omega
    if isinstance(lat_or_tau, Lattice):
        tau, scale = normalize_to_tau(lat_or_tau)
        pair = eta_pair(tau, cfg)
        return (m * pair.eta1 + n * pair.eta2) / scale
    pair = eta_pair(lat_or_tau, cfg)
    return m * pair.eta1 + n * pair.eta2


def legendre_defect(tau, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """tau*eta(1) - eta(tau) - 2*pi*i with eta from half-period zeta values.

    Identically zero in exact arithmetic; the residual is this module's
    self-test.
    """
    return eta_pair_from_zeta(tau, cfg).legendre_defect()


def wp_direct_oracle(tau, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Square-truncated defining lattice sum for p; O(1/radius) tail.

    Oracle only: polynomially convergent, held to coarse tolerances.
    """
    return complex(
        kernels.wp_direct_sum(complex(z), tau_value(tau), cfg.direct_sum_radius)
    )


def zeta_direct_oracle(tau, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Square-truncated defining lattice sum for zeta; O(1/radius) tail."""
    return complex(
        kernels.zeta_direct_sum(complex(z), tau_value(tau), cfg.direct_sum_radius)
    )


@lru_cache(maxsize=64)
def _gauss_nodes(points: int):
    """Gauss-Legendre nodes and weights on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(points)
    return 0.5 * (x + 1.0), 0.5 * w


def period_integral_wp_power(
    n: int,
    tau,
    omega: Tuple[int, int],
    z0: complex,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """Gauss-Legendre value of the integral of p^n along z0 .. z0+omega.

    omega is given by integer coordinates (m, k) for m + k*tau.  The
    straight path must stay at least 1e-3 away from every lattice point,
    otherwise ValueError is raised.  Equals Phi_n*omega + Psi_n*eta(omega)
    up to quadrature error, since the elliptic remainder of a primitive of
    p^n integrates to zero over a period.
    """
    if n < 0:
        raise ValueError("the power must be a nonnegative integer")
    ctx = _context(tau, cfg)
    m_co, k_co = omega
    w_omega = m_co + k_co * ctx.tau
    t_nodes, t_weights = _gauss_nodes(cfg.quad_points)
    zs = z0 + t_nodes * w_omega
    reduced, _, _ = _reduce_array(zs, ctx.tau)
    clearance = _pole_distance(reduced, ctx.tau).min()
    if clearance < QUAD_POLE_CLEARANCE:
        raise ValueError(
            f"integration path approaches a lattice point (distance {clearance:.2e})"
        )
    values = kernels.wp_series(reduced, ctx.q, ctx.terms)
    return complex(w_omega * np.sum(t_weights * values ** n))


__all__ = [
    "QuasiPeriodPair",
    "wp",
    "wp_prime",
    "zeta_w",
    "zeta_general",
    "eta_pair",
    "eta_pair_from_zeta",
    "eta_of",
    "legendre_defect",
    "period_integral_wp_power",
    "wp_direct_oracle",
    "zeta_direct_oracle",
    "POLE_EPS",
    "QUAD_POLE_CLEARANCE",
]
