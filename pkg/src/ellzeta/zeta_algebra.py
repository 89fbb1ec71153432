"""Exact weighted-homogeneous polynomial algebra in (g2, g3) and the
three-term recurrence behind the quasi-period coefficients of powers of
the Weierstrass p-function.

The primitive of p^n has the shape Phi_n*z + Psi_n*zeta(z) + elliptic, and
the coefficient pairs obey

    u_{n+1} = (2n-1)/(4(2n+1)) * g2 * u_{n-1} + (n-1)/(2(2n+1)) * g3 * u_{n-2}

with Phi_{-1} = Psi_{-1} = 0, Phi_0 = 1, Psi_0 = 0, Phi_1 = 0, Psi_1 = -1.
All coefficients are exact rationals; g2 carries weight 4, g3 weight 6, so
Phi_n is weighted homogeneous of weight 2n and Psi_n of weight 2(n-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple, Union

from .config import DEFAULT_CONFIG, EvalConfig
from .eisenstein import g2_g3
from .lattice import INFINITY, Value, tau_value
from .weierstrass import eta_pair

Scalar = Union[int, Fraction]
Exponents = Tuple[int, int]


class WHPoly:
    """Sparse polynomial in g2, g3 with exact rational coefficients.

    Keys are exponent pairs (a, b) meaning g2^a * g3^b; zero coefficients
    are never stored.  The weight of a monomial is 4a + 6b.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Dict[Exponents, Scalar]] = None):
        clean: Dict[Exponents, Fraction] = {}
        if coeffs:
            for (a, b), c in coeffs.items():
                if a < 0 or b < 0:
                    raise ValueError("exponents must be nonnegative")
                frac = Fraction(c)
                if frac != 0:
                    clean[(int(a), int(b))] = frac
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "WHPoly":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "WHPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, c: Scalar, a: int, b: int) -> "WHPoly":
        return cls({(a, b): Fraction(c)})

    @classmethod
    def g2(cls) -> "WHPoly":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def g3(cls) -> "WHPoly":
        return cls({(0, 1): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def weight(self) -> Optional[int]:
        """Common weight 4a+6b of all monomials, or None if mixed/zero."""
        weights = {4 * a + 6 * b for a, b in self.coeffs}
        if len(weights) == 1:
            return weights.pop()
        return None

    def terms(self) -> Iterator[Tuple[Exponents, Fraction]]:
        """Terms sorted by descending g2 exponent, then g3."""
        for key in sorted(self.coeffs, key=lambda ab: (-ab[0], -ab[1])):
            yield key, self.coeffs[key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, WHPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __neg__(self) -> "WHPoly":
        return WHPoly({k: -c for k, c in self.coeffs.items()})

    def __add__(self, other: "WHPoly") -> "WHPoly":
        if not isinstance(other, WHPoly):
            return NotImplemented
        merged = dict(self.coeffs)
        for k, c in other.coeffs.items():
            merged[k] = merged.get(k, Fraction(0)) + c
        return WHPoly(merged)

    def __sub__(self, other: "WHPoly") -> "WHPoly":
        return self + (-other)

    def __mul__(self, other: Union["WHPoly", Scalar]) -> "WHPoly":
        if isinstance(other, WHPoly):
            prod: Dict[Exponents, Fraction] = {}
            for (a1, b1), c1 in self.coeffs.items():
                for (a2, b2), c2 in other.coeffs.items():
                    key = (a1 + a2, b1 + b2)
                    prod[key] = prod.get(key, Fraction(0)) + c1 * c2
            return WHPoly(prod)
        return WHPoly({k: c * Fraction(other) for k, c in self.coeffs.items()})

    def __rmul__(self, other: Scalar) -> "WHPoly":
        return self.__mul__(other)

    def evaluate(self, g2_val: complex, g3_val: complex) -> complex:
        """Substitute numeric invariants; rationals become floats last."""
        total = 0.0 + 0.0j
        for (a, b), c in self.terms():
            total += float(c) * g2_val ** a * g3_val ** b
        return total

    def format(self, latex: bool = False) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for (a, b), c in self.terms():
            parts.append((c, _monomial_str(a, b, latex)))
        return _join_terms(parts, latex)

    def __repr__(self) -> str:
        return f"WHPoly({self.format()})"


def _monomial_str(a: int, b: int, latex: bool) -> str:
    """Render g2^a g3^b, allowing negative exponents as a quotient."""
    head = "g_2" if latex else "g2"
    tail = "g_3" if latex else "g3"

    def power(sym: str, e: int) -> str:
        if e == 1:
            return sym
        return f"{sym}^{{{e}}}" if latex else f"{sym}^{e}"

    num = [power(s, e) for s, e in ((head, a), (tail, b)) if e > 0]
    den = [power(s, -e) for s, e in ((head, a), (tail, b)) if e < 0]
    num_str = " ".join(num)
    den_str = " ".join(den)
    if den:
        if latex:
            return f"\\frac{{{num_str or '1'}}}{{{den_str}}}"
        return f"{num_str or '1'}/{den_str}"
    return num_str


def _coeff_str(c: Fraction, latex: bool) -> str:
    if latex and c.denominator != 1:
        sign = "-" if c < 0 else ""
        return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return str(c)


def _join_terms(parts, latex: bool) -> str:
    chunks = []
    for i, (c, mono) in enumerate(parts):
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{_coeff_str(mag, latex)} {mono}"
        else:
            body = _coeff_str(mag, latex)
        if i == 0:
            chunks.append(f"-{body}" if c < 0 else body)
        else:
            chunks.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(chunks)


@dataclass(frozen=True)
class RationalFn:
    """Quotient of two WHPoly; equality is exact cross-multiplication."""

    numerator: WHPoly
    denominator: WHPoly

    def __post_init__(self) -> None:
        if self.denominator.is_zero:
            raise ZeroDivisionError("denominator polynomial is zero")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def evaluate(self, g2_val: complex, g3_val: complex) -> Value:
        den = self.denominator.evaluate(g2_val, g3_val)
        num = self.numerator.evaluate(g2_val, g3_val)
        if den == 0:
            return INFINITY
        return num / den

    def format(self, latex: bool = False) -> str:
        """Laurent form when the denominator is a monomial, else a quotient."""
        if self.numerator.is_zero:
            return "0"
        if self.denominator.is_monomial:
            ((da, db), dc) = next(iter(self.denominator.coeffs.items()))
            parts = []
            for (a, b), c in self.numerator.terms():
                parts.append((c / dc, _monomial_str(a - da, b - db, latex)))
            return _join_terms(parts, latex)
        if latex:
            return (
                f"\\frac{{{self.numerator.format(latex=True)}}}"
                f"{{{self.denominator.format(latex=True)}}}"
            )
        return f"({self.numerator.format()}) / ({self.denominator.format()})"

    def __repr__(self) -> str:
        return f"RationalFn({self.format()})"


_G2 = WHPoly.g2()
_G3 = WHPoly.g3()

# memo for the recurrence; filling is idempotent, so concurrent first use
# is harmless
_PHI_PSI: Dict[int, Tuple[WHPoly, WHPoly]] = {
    -1: (WHPoly.zero(), WHPoly.zero()),
    0: (WHPoly.constant(1), WHPoly.zero()),
    1: (WHPoly.zero(), WHPoly.constant(-1)),
}
_PHI_PSI_FILLED = 1


def phi_psi(n: int) -> Tuple[WHPoly, WHPoly]:
    """Exact (Phi_n, Psi_n) for n >= -1, memoized."""
    global _PHI_PSI_FILLED
    if n < -1:
        raise ValueError("the recurrence is defined for n >= -1")
    if n not in _PHI_PSI:
        for m in range(_PHI_PSI_FILLED, n):
            # produces u_{m+1} from u_{m-1} and u_{m-2}
            a_coef = Fraction(2 * m - 1, 4 * (2 * m + 1))
            b_coef = Fraction(m - 1, 2 * (2 * m + 1))
            phi_prev, psi_prev = _PHI_PSI[m - 1]
            phi_prev2, psi_prev2 = _PHI_PSI[m - 2]
            _PHI_PSI[m + 1] = (
                a_coef * _G2 * phi_prev + b_coef * _G3 * phi_prev2,
                a_coef * _G2 * psi_prev + b_coef * _G3 * psi_prev2,
            )
        _PHI_PSI_FILLED = max(_PHI_PSI_FILLED, n)
    return _PHI_PSI[n]


def f_n(n: int) -> Optional[RationalFn]:
    """Phi_n / Psi_n as an exact rational function; None when Psi_n = 0."""
    if n < 1:
        raise ValueError("f_n is defined for n >= 1")
    phi, psi = phi_psi(n)
    if psi.is_zero:
        return None
    return RationalFn(phi, psi)


@dataclass(frozen=True)
class ZetaTableRow:
    """One row of the exact coefficient table."""

    n: int
    phi: WHPoly
    psi: WHPoly
    f: Optional[RationalFn]
    weight_phi: int
    weight_psi: int


def table_rows(max_n: int) -> list[ZetaTableRow]:
    """Rows n = 1..max_n with declared weights 2n and 2(n-1)."""
    rows = []
    for n in range(1, max_n + 1):
        phi, psi = phi_psi(n)
        rows.append(
            ZetaTableRow(
                n=n,
                phi=phi,
                psi=psi,
                f=f_n(n),
                weight_phi=2 * n,
                weight_psi=2 * (n - 1),
            )
        )
    return rows


def eval_whpoly(poly: WHPoly, tau, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Numeric value of a polynomial at the invariants of Z + tau*Z."""
    g2_val, g3_val = g2_g3(tau_value(tau), cfg)
    return poly.evaluate(g2_val, g3_val)


def h_n_eval(n: int, tau, cfg: EvalConfig = DEFAULT_CONFIG) -> Value:
    """The equivariant function h_n = H_n(tau)/H_n(1) of the n-th row.

    H_n(w) = Phi_n*w + Psi_n*eta(w).  When Psi_n = 0 the quasi-period map
    is proportional to the identity and h_n(tau) = tau exactly; a vanishing
    denominator H_n(1) yields INFINITY.
    """
    if n < 1:
        raise ValueError("h_n is defined for n >= 1")
    t = tau_value(tau)
    phi, psi = phi_psi(n)
    if psi.is_zero:
        return t
    g2_val, g3_val = g2_g3(t, cfg)
    phi_v = phi.evaluate(g2_val, g3_val)
    psi_v = psi.evaluate(g2_val, g3_val)
    pair = eta_pair(t, cfg)
    den = phi_v + psi_v * pair.eta1
    if den == 0:
        return INFINITY
    return (phi_v * t + psi_v * pair.eta2) / den


__all__ = [
    "WHPoly",
    "RationalFn",
    "ZetaTableRow",
    "phi_psi",
    "f_n",
    "table_rows",
    "eval_whpoly",
    "h_n_eval",
]
