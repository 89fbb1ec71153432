"""Lattices, SL2(Z) matrices, Mobius maps and reduction utilities.

Values live in C together with a tagged point at infinity (:data:`INFINITY`),
never encoded as NaN, so that poles of equivariant functions compare equal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union


class PointAtInfinity:
    """Singleton sentinel for the point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __eq__(self, other) -> bool:
        return isinstance(other, PointAtInfinity)

    def __hash__(self) -> int:
        return hash("ellzeta.INFINITY")


INFINITY = PointAtInfinity()

Value = Union[complex, PointAtInfinity]


def is_infinity(x) -> bool:
    return isinstance(x, PointAtInfinity)


@dataclass(frozen=True)
class UnimodularMatrix:
    """Integer 2x2 matrix [[a, b], [c, d]] with determinant one.

    Entries are Python integers, so reduction words of long translations
    never overflow.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for entry in (self.a, self.b, self.c, self.d):
            if not isinstance(entry, int):
                raise TypeError("matrix entries must be integers")
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant must be 1")

    @classmethod
    def identity(cls) -> "UnimodularMatrix":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, n: int) -> "UnimodularMatrix":
        """The power T^n of the translation generator T = [[1,1],[0,1]]."""
        return cls(1, n, 0, 1)

    @classmethod
    def inversion(cls) -> "UnimodularMatrix":
        """The generator S = [[0,-1],[1,0]] acting as z -> -1/z."""
        return cls(0, -1, 1, 0)

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "UnimodularMatrix":
        return UnimodularMatrix(self.d, -self.b, -self.c, self.a)

    def entries(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def max_abs_entry(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))


@dataclass(frozen=True)
class ModularPoint:
    """A point tau of the upper half-plane."""

    tau: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", complex(self.tau))
        if not self.tau.imag > 0:
            raise ValueError(f"Im(tau) must be positive, got {self.tau}")


@dataclass(frozen=True)
class Lattice:
    """An oriented lattice basis (omega1, omega2) with Im(omega2/omega1) > 0."""

    omega1: complex
    omega2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "omega1", complex(self.omega1))
        object.__setattr__(self, "omega2", complex(self.omega2))
        if self.omega1 == 0:
            raise ValueError("omega1 must be nonzero")
        if not (self.omega2 / self.omega1).imag > 0:
            raise ValueError("basis must satisfy Im(omega2/omega1) > 0")


def tau_value(tau: Union[ModularPoint, complex, float]) -> complex:
    """Coerce a ModularPoint or a bare number to a point of H."""
    if isinstance(tau, ModularPoint):
        return tau.tau
    t = complex(tau)
    if not t.imag > 0:
        raise ValueError(f"Im(tau) must be positive, got {t}")
    return t


def _matrix_coefficients(gamma) -> Tuple[complex, complex, complex, complex]:
    if isinstance(gamma, UnimodularMatrix):
        return gamma.a, gamma.b, gamma.c, gamma.d
    (a, b), (c, d) = gamma
    return complex(a), complex(b), complex(c), complex(d)


def mobius(gamma, z: Value) -> Value:
    """Linear fractional action (az+b)/(cz+d), total on C u {infinity}.

    ``gamma`` is a :class:`UnimodularMatrix` or any 2x2 nested sequence of
    complex coefficients with nonzero determinant.
    """
    a, b, c, d = _matrix_coefficients(gamma)
    if is_infinity(z):
        if c == 0:
            return INFINITY
        return a / c
    z = complex(z)
    den = c * z + d
    if den == 0:
        return INFINITY
    return (a * z + b) / den


def act_on_basis(gamma: UnimodularMatrix, lat: Lattice) -> Lattice:
    """Change of basis (omega1', omega2') = (omega1, omega2) gamma^t.

    The new basis spans the same lattice and keeps its orientation.
    """
    w1 = gamma.a * lat.omega1 + gamma.b * lat.omega2
    w2 = gamma.c * lat.omega1 + gamma.d * lat.omega2
    return Lattice(w1, w2)


def normalize_to_tau(lat: Lattice) -> Tuple[ModularPoint, complex]:
    """Write the lattice as scale*(Z + tau*Z) with tau in H, scale = omega1."""
    tau = lat.omega2 / lat.omega1
    return ModularPoint(tau), lat.omega1


_MAX_REDUCTION_STEPS = 10_000


def reduce_to_fundamental(
    tau: Union[ModularPoint, complex],
) -> Tuple[ModularPoint, UnimodularMatrix]:
    """Move tau into the standard fundamental domain of SL2(Z).

    Returns (tau', gamma) with tau' = gamma(tau), Re(tau') in [-1/2, 1/2),
    |tau'| >= 1, and Re(tau') <= 0 on the unit circle, which makes the
    reduction deterministic on the domain boundary.
    """
    t = tau_value(tau)
    gamma = UnimodularMatrix.identity()
    for _ in range(_MAX_REDUCTION_STEPS):
        shift = math.floor(t.real + 0.5)
        if shift != 0:
            t -= shift
            gamma = UnimodularMatrix.translation(-shift) @ gamma
        norm2 = t.real * t.real + t.imag * t.imag
        if norm2 < 1.0:
            t = -1.0 / t
            gamma = UnimodularMatrix.inversion() @ gamma
        else:
            if norm2 == 1.0 and t.real > 0:
                t = -1.0 / t
                gamma = UnimodularMatrix.inversion() @ gamma
                shift = math.floor(t.real + 0.5)
                if shift != 0:
                    t -= shift
                    gamma = UnimodularMatrix.translation(-shift) @ gamma
            return ModularPoint(t), gamma
    raise RuntimeError(f"fundamental-domain reduction did not terminate for {tau}")


def lattice_reduce_point(
    z: complex, tau: Union[ModularPoint, complex]
) -> Tuple[complex, int, int]:
    """Split z = z0 + m + n*tau with cell coordinates in [-1/2, 1/2).

    Half-integer coordinates land on the lower cell boundary, so the cells
    partition C.
    """
    t = tau_value(tau)
    z = complex(z)
    y = z.imag / t.imag
    x = z.real - y * t.real
    m = math.floor(x + 0.5)
    n = math.floor(y + 0.5)
    z0 = z - m - n * t
    return z0, m, n
