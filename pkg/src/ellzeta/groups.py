"""Congruence subgroups of SL2(Z): membership, sublattices, sampling.

Groups are realized by their congruence conditions, which are exact
integer predicates:

* Gamma0(N):  c = 0 (mod N)
* Gamma1(N):  c = 0, a = d = 1 (mod N)
* Gamma(N):   the matrix is the identity (mod N)
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from typing import List

from .lattice import Lattice, UnimodularMatrix

KINDS = ("full", "gamma0", "gamma1", "gamma_principal")

# sampled matrices stay far below this; it bounds |c*tau+d| so weight
# checks remain well conditioned in double precision
ENTRY_CAP = 10 ** 6

_SPEC_RE = re.compile(r"^(SL2Z|Gamma0\((\d+)\)|Gamma1\((\d+)\)|Gamma\((\d+)\))$")


class UnsupportedGroupError(ValueError):
    """Raised for operations a group kind does not support."""


@dataclass(frozen=True)
class CongruenceGroup:
    kind: str
    level: int = 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.level < 1:
            raise ValueError("level must be >= 1")
        if self.kind == "full":
            object.__setattr__(self, "level", 1)

    @classmethod
    def full(cls) -> "CongruenceGroup":
        return cls("full")

    @classmethod
    def gamma0(cls, level: int) -> "CongruenceGroup":
        return cls("gamma0", level)

    @classmethod
    def gamma1(cls, level: int) -> "CongruenceGroup":
        return cls("gamma1", level)

    @classmethod
    def principal(cls, level: int) -> "CongruenceGroup":
        return cls("gamma_principal", level)

    @classmethod
    def parse(cls, spec: str) -> "CongruenceGroup":
        """Parse "SL2Z", "Gamma0(N)", "Gamma1(N)" or "Gamma(N)"."""
        m = _SPEC_RE.match(spec.strip())
        if not m:
            raise ValueError(f"cannot parse group spec {spec!r}")
        if m.group(1) == "SL2Z":
            return cls.full()
        if m.group(2) is not None:
            return cls.gamma0(int(m.group(2)))
        if m.group(3) is not None:
            return cls.gamma1(int(m.group(3)))
        return cls.principal(int(m.group(4)))

    def __str__(self) -> str:
        if self.kind == "full":
            return "SL2Z"
        if self.kind == "gamma0":
            return f"Gamma0({self.level})"
        if self.kind == "gamma1":
            return f"Gamma1({self.level})"
        return f"Gamma({self.level})"


def contains(group: CongruenceGroup, gamma: UnimodularMatrix) -> bool:
    """Exact congruence membership test."""
    if group.kind == "full":
        return True
    n = group.level
    if group.kind == "gamma0":
        return gamma.c % n == 0
    if group.kind == "gamma1":
        return gamma.c % n == 0 and gamma.a % n == 1 % n and gamma.d % n == 1 % n
    return (
        gamma.c % n == 0
        and gamma.b % n == 0
        and gamma.a % n == 1 % n
        and gamma.d % n == 1 % n
    )


@dataclass(frozen=True)
class SublatticeDescriptor:
    """The sublattice a congruence group stabilizes, with its index."""

    group: CongruenceGroup
    index: int
    basis_rule: str
    sublattice: Lattice


def sublattice_of(group: CongruenceGroup, lat: Lattice) -> SublatticeDescriptor:
    """Stabilized sublattice: N*L for Gamma(N), omega1*Z + N*omega2*Z for
    Gamma0(N).  Gamma1(N) has no such rule here and is rejected."""
    n = group.level
    if group.kind == "full":
        return SublatticeDescriptor(group, 1, "omega1*Z + omega2*Z", lat)
    if group.kind == "gamma_principal":
        sub = Lattice(n * lat.omega1, n * lat.omega2)
        return SublatticeDescriptor(group, n * n, f"{n}*omega1*Z + {n}*omega2*Z", sub)
    if group.kind == "gamma0":
        sub = Lattice(lat.omega1, n * lat.omega2)
        return SublatticeDescriptor(group, n, f"omega1*Z + {n}*omega2*Z", sub)
    raise UnsupportedGroupError(f"no sublattice rule for {group}")


_WORD_GENERATORS = (
    UnimodularMatrix.inversion(),
    UnimodularMatrix.translation(1),
    UnimodularMatrix.translation(-1),
)


def _sample_full(rng: random.Random) -> UnimodularMatrix:
    word = UnimodularMatrix.identity()
    for _ in range(rng.randint(0, 12)):
        word = word @ rng.choice(_WORD_GENERATORS)
    return word


def _sample_congruence(group: CongruenceGroup, rng: random.Random) -> UnimodularMatrix:
    n = group.level
    restricted = group.kind in ("gamma1", "gamma_principal")
    while True:
        c = n * rng.randint(-4, 4)
        a = 1 + n * rng.randint(-3, 3) if restricted else rng.randint(-8, 8)
        if c == 0:
            if abs(a) != 1:
                continue
            b = rng.randint(-6, 6)
            if group.kind == "gamma_principal":
                b *= n
            return UnimodularMatrix(a, b, c, a)
        if a == 0 or math.gcd(a, c) != 1:
            continue
        # a*d0 + c*(-b0) = 1 from the extended Euclidean identity
        g, x, y = _extended_gcd(a, c)
        d0, b0 = x, -y
        if group.kind == "gamma_principal":
            # b = b0 + t*a = 0 (mod N) with a = 1 (mod N)
            t_base = (-b0) % n
            candidates = [t_base + n * j for j in range(-3, 4)]
        else:
            t_opt = round(-d0 / c)
            candidates = [t_opt + j for j in range(-3, 4)]
        best = min(
            candidates,
            key=lambda t: max(abs(b0 + t * a), abs(d0 + t * c)),
        )
        return UnimodularMatrix(a, b0 + best * a, c, d0 + best * c)


def _extended_gcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def sample_elements(
    group: CongruenceGroup, count: int, seed: int = 42
) -> List[UnimodularMatrix]:
    """Deterministic pseudo-random elements of the group.

    The full group is sampled as short words in S and T so that |c*tau+d|
    stays moderate; congruence groups are sampled constructively from
    their congruence shape.  Every output satisfies :func:`contains`.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        gamma = (
            _sample_full(rng)
            if group.kind == "full"
            else _sample_congruence(group, rng)
        )
        if not contains(group, gamma):
            raise RuntimeError(f"sampler produced {gamma} outside {group}")
        if gamma.max_abs_entry() > ENTRY_CAP:
            raise RuntimeError("sampled entries exceeded the documented cap")
        out.append(gamma)
    return out


def stock_weight2_form(level: int, cfg=None):
    """The weight-2 form E2(tau) - N*E2(N*tau) on Gamma0(N), N >= 2.

    The quasi-modular defects of the two E2 values cancel exactly when
    c = 0 (mod N), which makes this the standard stock example for
    exercising the Gamma0(N) correspondence.
    """
    if level < 2:
        raise ValueError("the stock form needs level >= 2")
    from .correspondence import FormDescriptor  # deferred: avoids an import cycle
    from .eisenstein import e2

    def evaluator(tau: complex) -> complex:
        return e2(tau, cfg) - level * e2(level * tau, cfg)

    return FormDescriptor(
        name=f"gamma0_stock:{level}",
        weight=2,
        group=CongruenceGroup.gamma0(level),
        evaluator=evaluator,
    )


__all__ = [
    "CongruenceGroup",
    "SublatticeDescriptor",
    "UnsupportedGroupError",
    "contains",
    "sublattice_of",
    "sample_elements",
    "stock_weight2_form",
    "ENTRY_CAP",
]
