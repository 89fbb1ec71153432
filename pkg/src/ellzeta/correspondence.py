"""The triangle between elliptic zeta functions, weight-2 meromorphic
modular forms, and equivariant functions on the upper half-plane.

An elliptic zeta function is represented by its canonical coefficients
(a weight k together with maps tau -> Phi(tau), tau -> Psi(tau)), i.e. by
Z(z) = Phi*z + Psi*zeta(z) with the elliptic remainder dropped: every
quantity used here (the quasi-periods H, the form Phi/Psi, the equivariant
function H(tau)/H(1)) is insensitive to it.

With eta1 = eta(1), eta2 = eta(tau) and the Legendre relation
tau*eta1 - eta2 = 2*pi*i, the three arrows are

* zeta -> form:          f = Phi/Psi                     (weight 2)
* zeta -> equivariant:   h = H(tau)/H(1)
* form <-> equivariant:  h = (tau*f + eta2)/(f + eta1)   and back,
  a bijection since det [[tau, eta2], [1, eta1]] = 2*pi*i != 0.

The inverse arrow satisfies the cusp relation h - tau = -2*pi*i/(f + eta1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .groups import CongruenceGroup, sample_elements, stock_weight2_form
from .lattice import INFINITY, Value, is_infinity, mobius, tau_value
from .weierstrass import eta_pair, zeta_w
from . import eisenstein
from . import zeta_algebra

TWO_PI_I = 2j * math.pi

FD_STEP = 1e-5
PROBE_ZERO_TOL = 1e-12

# fixed generic points for the "not identically zero" probes; meromorphic
# functions vanishing at all of them are treated as identically zero
PROBE_TAUS = (
    -0.41 + 1.13j,
    0.33 + 0.91j,
    -0.12 + 1.57j,
    0.27 + 1.02j,
    -0.29 + 1.41j,
    0.08 + 0.95j,
    0.44 + 1.23j,
    -0.07 + 1.68j,
)


def values_match(x: Value, y: Value, tol: float) -> bool:
    """Infinity-aware comparison: both infinite, or |x-y| <= tol*(1+|x|)."""
    if is_infinity(x) or is_infinity(y):
        return is_infinity(x) and is_infinity(y)
    return abs(x - y) <= tol * (1.0 + abs(x))


def pair_defect(x: Value, y: Value) -> float:
    """Scaled defect |x-y|/(1+|x|); zero when both are infinite."""
    if is_infinity(x) or is_infinity(y):
        return 0.0 if (is_infinity(x) and is_infinity(y)) else math.inf
    return abs(x - y) / (1.0 + abs(x))


@dataclass
class FormDescriptor:
    """A meromorphic modular form given by evaluators.

    The declared weight is checked by :func:`verify_weight`, never trusted.
    ``derivative`` is an analytic derivative evaluator when one is known;
    otherwise a central finite difference with step 1e-5 is used.
    """

    name: str
    weight: int
    group: CongruenceGroup
    evaluator: Callable[[complex], Value]
    derivative: Optional[Callable[[complex], Value]] = None

    def value(self, tau) -> Value:
        return self.evaluator(tau_value(tau))

    def derivative_value(self, tau) -> Value:
        t = tau_value(tau)
        if self.derivative is not None:
            return self.derivative(t)
        left = self.evaluator(t - FD_STEP)
        right = self.evaluator(t + FD_STEP)
        if is_infinity(left) or is_infinity(right):
            return INFINITY
        return (right - left) / (2.0 * FD_STEP)


@dataclass
class EquivariantFn:
    """A function commuting with the group action, valued in C u {inf}."""

    name: str
    group: CongruenceGroup
    evaluator: Callable[[complex], Value]
    trivial: bool = False

    def value(self, tau) -> Value:
        return self.evaluator(tau_value(tau))


@dataclass
class EllipticZetaSpec:
    """Canonical form of an elliptic zeta function: weight and (Phi, Psi)."""

    weight_k: int
    phi: Callable[[complex], Value]
    psi: Callable[[complex], Value]
    name: str = "zeta-spec"
    group: CongruenceGroup = field(default_factory=CongruenceGroup.full)


class QuasiPeriods(NamedTuple):
    """The pair (H(1), H(tau)) of an elliptic zeta function."""

    h1: Value
    h_tau: Value


def weierstrass_zeta_spec() -> EllipticZetaSpec:
    """The Weierstrass zeta function itself: Phi = 0, Psi = 1, weight -1."""
    return EllipticZetaSpec(
        weight_k=-1,
        phi=lambda t: 0.0 + 0.0j,
        psi=lambda t: 1.0 + 0.0j,
        name="weierstrass",
    )


def identity_zeta_spec() -> EllipticZetaSpec:
    """The identity map z: Phi = 1, Psi = 0, weight 1."""
    return EllipticZetaSpec(
        weight_k=1,
        phi=lambda t: 1.0 + 0.0j,
        psi=lambda t: 0.0 + 0.0j,
        name="identity",
    )


def power_zeta_spec(n: int, cfg: EvalConfig = DEFAULT_CONFIG) -> EllipticZetaSpec:
    """The spec Z_n = Phi_n*z + Psi_n*zeta attached to the primitive of p^n."""
    phi_poly, psi_poly = zeta_algebra.phi_psi(n)

    def phi(t: complex) -> complex:
        return zeta_algebra.eval_whpoly(phi_poly, t, cfg)

    def psi(t: complex) -> complex:
        return zeta_algebra.eval_whpoly(psi_poly, t, cfg)

    return EllipticZetaSpec(weight_k=-2 * n + 1, phi=phi, psi=psi, name=f"Z_{n}")


def zeta_eval(
    spec: EllipticZetaSpec, tau, z: complex, cfg: EvalConfig = DEFAULT_CONFIG
) -> Value:
    """Phi(tau)*z + Psi(tau)*zeta(z) on the lattice Z + tau*Z."""
    t = tau_value(tau)
    phi_v = spec.phi(t)
    psi_v = spec.psi(t)
    if is_infinity(phi_v) or is_infinity(psi_v):
        return INFINITY
    if psi_v == 0:
        return phi_v * z
    zeta_v = zeta_w(t, z, cfg)
    if is_infinity(zeta_v):
        return INFINITY
    return phi_v * z + psi_v * zeta_v


def quasi_periods(
    spec: EllipticZetaSpec, tau, cfg: EvalConfig = DEFAULT_CONFIG
) -> QuasiPeriods:
    """H(w) = Phi*w + Psi*eta(w) at w = 1 and w = tau."""
    t = tau_value(tau)
    phi_v = spec.phi(t)
    psi_v = spec.psi(t)
    if is_infinity(phi_v) or is_infinity(psi_v):
        return QuasiPeriods(INFINITY, INFINITY)
    pair = eta_pair(t, cfg)
    return QuasiPeriods(
        h1=phi_v + psi_v * pair.eta1,
        h_tau=phi_v * t + psi_v * pair.eta2,
    )


def phi_psi_from_H(
    h1: complex, h_tau: complex, tau, cfg: EvalConfig = DEFAULT_CONFIG
) -> tuple[complex, complex]:
    """Invert H(w) = Phi*w + Psi*eta(w) using the Legendre relation.

    Phi = (eta1*H(tau) - eta2*H(1)) / (2*pi*i),
    Psi = (tau*H(1) - H(tau)) / (2*pi*i).
    """
    t = tau_value(tau)
    pair = eta_pair(t, cfg)
    phi = (pair.eta1 * h_tau - pair.eta2 * h1) / TWO_PI_I
    psi = (t * h1 - h_tau) / TWO_PI_I
    return phi, psi


def _probe_identically_zero(fn: Callable[[complex], Value]) -> bool:
    for t in PROBE_TAUS:
        v = fn(t)
        if is_infinity(v) or abs(v) > PROBE_ZERO_TOL:
            return False
    return True


def modular_from_zeta(
    spec: EllipticZetaSpec, cfg: EvalConfig = DEFAULT_CONFIG
) -> FormDescriptor:
    """The weight-2 form Phi/Psi; rejects specs with Psi identically zero."""
    if _probe_identically_zero(spec.psi):
        raise ValueError(f"{spec.name}: Psi vanishes identically, no associated form")

    def evaluator(t: complex) -> Value:
        psi_v = spec.psi(t)
        phi_v = spec.phi(t)
        if is_infinity(phi_v) or is_infinity(psi_v) or psi_v == 0:
            return INFINITY
        return phi_v / psi_v

    return FormDescriptor(
        name=f"form[{spec.name}]",
        weight=2,
        group=spec.group,
        evaluator=evaluator,
    )


def equivariant_from_zeta(
    spec: EllipticZetaSpec, cfg: EvalConfig = DEFAULT_CONFIG
) -> EquivariantFn:
    """h(tau) = H(tau)/H(1); rejects specs with H(1) identically zero."""

    def h1_fn(t: complex) -> Value:
        return quasi_periods(spec, t, cfg).h1

    if _probe_identically_zero(h1_fn):
        raise ValueError(f"{spec.name}: H(1) vanishes identically")

    def evaluator(t: complex) -> Value:
        periods = quasi_periods(spec, t, cfg)
        if is_infinity(periods.h1) or is_infinity(periods.h_tau):
            return INFINITY
        if periods.h1 == 0:
            return INFINITY
        return periods.h_tau / periods.h1

    trivial = all(
        not is_infinity(evaluator(t)) and abs(evaluator(t) - t) <= PROBE_ZERO_TOL
        for t in PROBE_TAUS
    )
    return EquivariantFn(
        name="trivial" if trivial else f"h[{spec.name}]",
        group=spec.group,
        evaluator=evaluator,
        trivial=trivial,
    )


def m_transform(f: FormDescriptor, cfg: EvalConfig = DEFAULT_CONFIG) -> EquivariantFn:
    """h = (tau*f + eta2)/(f + eta1), the bijection M2 -> Eq.

    Satisfies the cusp relation h - tau = -2*pi*i/(f + eta1).
    """

    def evaluator(t: complex) -> Value:
        pair = eta_pair(t, cfg)
        return mobius(((t, pair.eta2), (1.0, pair.eta1)), f.value(t))

    return EquivariantFn(name=f"M[{f.name}]", group=f.group, evaluator=evaluator)


def m_inverse(h: EquivariantFn, cfg: EvalConfig = DEFAULT_CONFIG) -> FormDescriptor:
    """f = (eta1*h - eta2)/(tau - h), inverting :func:`m_transform`.

    The trivial function h = tau is excluded (the matrix inverse applied to
    it is infinite everywhere).
    """
    if h.trivial or _probe_identically_zero(lambda t: h.value(t) - t):
        raise ValueError("the trivial equivariant function tau has no inverse image")

    def evaluator(t: complex) -> Value:
        pair = eta_pair(t, cfg)
        return mobius(((pair.eta1, -pair.eta2), (-1.0, t)), h.value(t))

    return FormDescriptor(
        name=f"Minv[{h.name}]", weight=2, group=h.group, evaluator=evaluator
    )


def h_from_form(f: FormDescriptor, cfg: EvalConfig = DEFAULT_CONFIG) -> EquivariantFn:
    """h_f = tau + k*f/f' for a form of weight k != 0."""
    if f.weight == 0:
        raise ValueError("h_f requires a nonzero weight")

    def evaluator(t: complex) -> Value:
        fv = f.value(t)
        dv = f.derivative_value(t)
        if is_infinity(fv) or is_infinity(dv) or dv == 0:
            return INFINITY
        return t + f.weight * fv / dv

    return EquivariantFn(name=f"h_{f.name}", group=f.group, evaluator=evaluator)


def lift_form_to_zeta(f: FormDescriptor) -> EllipticZetaSpec:
    """The weight -1 spec Z = f(tau)*z + zeta(z) mapping back to f.

    Phi = f and Psi = 1, so the projection to forms returns f identically.
    """
    return EllipticZetaSpec(
        weight_k=-1,
        phi=lambda t: f.value(t),
        psi=lambda t: 1.0 + 0.0j,
        name=f"lift[{f.name}]",
        group=f.group,
    )


@dataclass
class VerificationReport:
    """Outcome of a sampled numeric certification."""

    name: str
    passed: bool
    tol: float
    samples: int
    used: int
    max_defect: float
    worst: Optional[dict] = None
    notes: str = ""
    seconds: float = 0.0

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "passed": self.passed,
            "tol": self.tol,
            "samples": self.samples,
            "used": self.used,
            "max_defect": self.max_defect,
            "seconds": self.seconds,
        }
        if self.worst is not None:
            out["worst"] = self.worst
        if self.notes:
            out["notes"] = self.notes
        return out


def _sample_taus(count: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    re = rng.uniform(-0.45, 0.45, size=count)
    im = rng.uniform(0.9, 1.9, size=count)
    return re + 1j * im


def verify_equivariance(
    h: EquivariantFn,
    samples: int = 50,
    seed: int = 42,
    tol: float = 1e-7,
    cfg: EvalConfig = DEFAULT_CONFIG,
    group: Optional[CongruenceGroup] = None,
) -> VerificationReport:
    """Check h(gamma*tau) = gamma*h(tau) on sampled (gamma, tau) pairs.

    gamma is drawn from the declared group's sampler (or ``group`` when
    given), tau uniformly from a box inside the fundamental domain.  The
    defect is infinity-aware: matching poles count as exact.
    """
    grp = group if group is not None else h.group
    gammas = sample_elements(grp, samples, seed)
    taus = _sample_taus(samples, seed + 1)
    max_defect = 0.0
    worst = None
    for gamma, t in zip(gammas, taus):
        lhs = h.value(mobius(gamma, t))
        rhs = mobius(gamma, h.value(t))
        d = pair_defect(lhs, rhs)
        if d > max_defect or worst is None:
            max_defect = d
            worst = {
                "gamma": gamma.entries(),
                "tau": t,
                "h(gamma tau)": lhs,
                "gamma h(tau)": rhs,
                "defect": d,
            }
    return VerificationReport(
        name=f"equivariance[{h.name}|{grp}]",
        passed=max_defect <= tol,
        tol=tol,
        samples=samples,
        used=samples,
        max_defect=max_defect,
        worst=worst,
    )


def verify_weight(
    f: FormDescriptor,
    samples: int = 50,
    seed: int = 42,
    tol: float = 1e-7,
    cfg: EvalConfig = DEFAULT_CONFIG,
    group: Optional[CongruenceGroup] = None,
) -> VerificationReport:
    """Check f(gamma*tau) = (c*tau+d)^k f(tau) on sampled pairs.

    The defect is relative, |f(gamma*tau)/((c*tau+d)^k f(tau)) - 1|; samples
    where f is zero or infinite are skipped, and a report with no usable
    samples passes vacuously.
    """
    grp = group if group is not None else f.group
    gammas = sample_elements(grp, samples, seed)
    taus = _sample_taus(samples, seed + 1)
    max_defect = 0.0
    used = 0
    worst = None
    for gamma, t in zip(gammas, taus):
        base = f.value(t)
        if is_infinity(base) or abs(base) < 1e-10:
            continue
        cocycle = (gamma.c * t + gamma.d) ** f.weight
        lhs = f.value(mobius(gamma, t))
        if is_infinity(lhs):
            d = math.inf
        else:
            d = abs(lhs / (cocycle * base) - 1.0)
        used += 1
        if d > max_defect or worst is None:
            max_defect = d
            worst = {
                "gamma": gamma.entries(),
                "tau": t,
                "f(gamma tau)": lhs,
                "cocycle*f(tau)": None if is_infinity(lhs) else cocycle * base,
                "defect": d,
            }
    notes = "vacuous: all samples skipped" if used == 0 else ""
    return VerificationReport(
        name=f"weight[{f.name}|{grp}]",
        passed=(used == 0) or max_defect <= tol,
        tol=tol,
        samples=samples,
        used=used,
        max_defect=max_defect,
        worst=worst,
        notes=notes,
    )


def named_form(name: str, cfg: EvalConfig = DEFAULT_CONFIG) -> FormDescriptor:
    """Registry of stock forms exposed to the CLI.

    Names: "zero", "delta", "g2", "g3", "E2", "f_n:<n>", "gamma0_stock:<N>".
    """
    full = CongruenceGroup.full()
    qc = cfg.qseries
    if name == "zero":
        return FormDescriptor(
            "zero", 2, full, lambda t: 0.0 + 0.0j, derivative=lambda t: 0.0 + 0.0j
        )
    if name == "delta":
        return FormDescriptor(
            "delta",
            12,
            full,
            lambda t: eisenstein.delta(t, qc),
            derivative=lambda t: TWO_PI_I
            * eisenstein.e2(t, qc)
            * eisenstein.delta(t, qc),
        )
    if name == "g2":
        return FormDescriptor("g2", 4, full, lambda t: eisenstein.g2_g3(t, qc)[0])
    if name == "g3":
        return FormDescriptor("g3", 6, full, lambda t: eisenstein.g2_g3(t, qc)[1])
    if name == "E2":
        # quasi-modular: declared weight 2 fails verify_weight by design
        return FormDescriptor("E2", 2, full, lambda t: eisenstein.e2(t, qc))
    if name.startswith("f_n:"):
        n = int(name.split(":", 1)[1])
        rational = zeta_algebra.f_n(n)
        if rational is None:
            raise ValueError(f"f_{n} is undefined: Psi_{n} = 0")

        def evaluator(t: complex) -> Value:
            g2v, g3v = eisenstein.g2_g3(t, qc)
            return rational.evaluate(g2v, g3v)

        return FormDescriptor(f"f_n:{n}", 2, full, evaluator)
    if name.startswith("gamma0_stock:"):
        level = int(name.split(":", 1)[1])
        return stock_weight2_form(level, qc)
    raise ValueError(f"unknown form name {name!r}")


def named_equivariant(name: str, cfg: EvalConfig = DEFAULT_CONFIG) -> EquivariantFn:
    """Registry of equivariant functions for the CLI.

    Names: "trivial", "eta_ratio", "h_delta", "h_n:<n>".
    """
    full = CongruenceGroup.full()
    if name == "trivial":
        return EquivariantFn("trivial", full, lambda t: t, trivial=True)
    if name == "eta_ratio":

        def evaluator(t: complex) -> Value:
            pair = eta_pair(t, cfg)
            if pair.eta1 == 0:
                return INFINITY
            return pair.eta2 / pair.eta1

        return EquivariantFn("eta_ratio", full, evaluator)
    if name == "h_delta":
        return h_from_form(named_form("delta", cfg), cfg)
    if name.startswith("h_n:"):
        n = int(name.split(":", 1)[1])
        return EquivariantFn(
            f"h_n:{n}",
            full,
            lambda t: zeta_algebra.h_n_eval(n, t, cfg),
            trivial=zeta_algebra.phi_psi(n)[1].is_zero,
        )
    raise ValueError(f"unknown equivariant name {name!r}")


FORM_NAMES = ("zero", "delta", "g2", "g3", "E2", "f_n:<n>", "gamma0_stock:<N>")
EQUIVARIANT_NAMES = ("trivial", "eta_ratio", "h_delta", "h_n:<n>")

__all__ = [
    "FormDescriptor",
    "EquivariantFn",
    "EllipticZetaSpec",
    "QuasiPeriods",
    "VerificationReport",
    "values_match",
    "pair_defect",
    "weierstrass_zeta_spec",
    "identity_zeta_spec",
    "power_zeta_spec",
    "zeta_eval",
    "quasi_periods",
    "phi_psi_from_H",
    "modular_from_zeta",
    "equivariant_from_zeta",
    "m_transform",
    "m_inverse",
    "h_from_form",
    "lift_form_to_zeta",
    "verify_equivariance",
    "verify_weight",
    "named_form",
    "named_equivariant",
    "FORM_NAMES",
    "EQUIVARIANT_NAMES",
]
