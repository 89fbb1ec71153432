import math
from fractions import Fraction

import numpy as np
import pytest

from ellzeta.eisenstein import g2_g3
from ellzeta.groups import CongruenceGroup, sample_elements
from ellzeta.lattice import mobius
from ellzeta.weierstrass import eta_pair
from ellzeta.zeta_algebra import (
    RationalFn,
    WHPoly,
    eval_whpoly,
    f_n,
    h_n_eval,
    phi_psi,
    table_rows,
)

G2 = WHPoly.g2()
G3 = WHPoly.g3()


def frac(p, q=1):
    return Fraction(p, q)


def test_product_weight():
    prod = G2 * G3
    assert prod.coeffs == {(1, 1): frac(1)}
    assert prod.weight() == 10


def test_cancellation_gives_zero():
    poly = WHPoly.monomial(frac(1, 12), 1, 0) + WHPoly.monomial(frac(-1, 12), 1, 0)
    assert poly.is_zero
    assert poly.coeffs == {}


def test_square_of_scaled_monomial():
    poly = WHPoly.monomial(frac(1, 12), 1, 0)
    assert (poly * poly).coeffs == {(2, 0): frac(1, 144)}


def test_mixed_weight_sum_drops_homogeneity():
    assert (G2 + G3).weight() is None
    assert G2.weight() == 4 and G3.weight() == 6


def test_scalar_multiplication():
    assert (3 * G2).coeffs == {(1, 0): frac(3)}
    assert (G2 * frac(1, 2)).coeffs == {(1, 0): frac(1, 2)}


EXPECTED = {
    1: ({}, {(0, 0): frac(-1)}),
    2: ({(1, 0): frac(1, 12)}, {}),
    3: ({(0, 1): frac(1, 10)}, {(1, 0): frac(-3, 20)}),
    4: ({(2, 0): frac(5, 336)}, {(0, 1): frac(-1, 7)}),
    5: ({(1, 1): frac(1, 30)}, {(2, 0): frac(-7, 240)}),
    6: (
        {(3, 0): frac(15, 4928), (0, 2): frac(1, 55)},
        {(1, 1): frac(-87, 1540)},
    ),
}


@pytest.mark.parametrize("n", sorted(EXPECTED))
def test_recurrence_matches_closed_forms(n):
    phi, psi = phi_psi(n)
    assert phi.coeffs == EXPECTED[n][0]
    assert psi.coeffs == EXPECTED[n][1]


def test_initial_conditions():
    assert phi_psi(-1) == (WHPoly.zero(), WHPoly.zero())
    assert phi_psi(0) == (WHPoly.constant(1), WHPoly.zero())
    assert phi_psi(1) == (WHPoly.zero(), WHPoly.constant(-1))
    with pytest.raises(ValueError):
        phi_psi(-2)


def test_f3_exact():
    expected = RationalFn(WHPoly.monomial(frac(-2, 3), 0, 1), G2)
    assert f_n(3) == expected


def test_f2_undefined():
    assert f_n(2) is None


def test_f6_exact_cross_multiplication():
    expected = RationalFn(
        WHPoly.monomial(frac(-25, 464), 3, 0) + WHPoly.monomial(frac(-28, 87), 0, 2),
        G2 * G3,
    )
    assert f_n(6) == expected


def test_rationalfn_equality_is_projective():
    a = RationalFn(WHPoly.monomial(2, 0, 1), WHPoly.monomial(4, 1, 0))
    b = RationalFn(WHPoly.monomial(1, 0, 1), WHPoly.monomial(2, 1, 0))
    assert a == b
    assert a != RationalFn(G3, G2)


def test_weight_bookkeeping_to_n12():
    for n in range(1, 13):
        phi, psi = phi_psi(n)
        if not phi.is_zero:
            assert phi.weight() == 2 * n
        if not psi.is_zero:
            assert psi.weight() == 2 * (n - 1)


def test_memo_is_order_independent():
    a = phi_psi(9)
    b = phi_psi(4)
    assert phi_psi(9) == a and phi_psi(4) == b


def test_eval_constant():
    assert eval_whpoly(WHPoly.constant(1), 1j) == 1.0


def test_eval_monomial():
    g2v = g2_g3(1j)[0]
    assert abs(eval_whpoly(WHPoly.monomial(frac(1, 12), 1, 0), 1j) - g2v / 12) < 1e-12


def test_eval_phi3_vanishes_at_i():
    # Phi_3 = g3/10 and g3(i) = 0
    assert abs(eval_whpoly(phi_psi(3)[0], 1j)) < 1e-9


def test_h2_is_tau_exactly():
    tau = 0.1 + 1.2j
    assert h_n_eval(2, tau) == tau


def test_h1_is_eta_ratio():
    tau = 0.27 + 1.33j
    pair = eta_pair(tau)
    assert abs(h_n_eval(1, tau) - pair.eta2 / pair.eta1) < 1e-12


def test_h3_two_evaluation_routes_agree():
    tau = 1.1j
    pair = eta_pair(tau)
    g2v, g3v = g2_g3(tau)
    phi_v = eval_whpoly(phi_psi(3)[0], tau)
    psi_v = eval_whpoly(phi_psi(3)[1], tau)
    ratio = (phi_v * tau + psi_v * pair.eta2) / (phi_v + psi_v * pair.eta1)
    assert abs(h_n_eval(3, tau) - ratio) < 1e-9
    # closed form via the cusp relation h - tau = -2*pi*i/(f + eta1)
    closed = tau - 6j * math.pi * g2v / (-2 * g3v + 3 * g2v * pair.eta1)
    assert abs(h_n_eval(3, tau) - closed) < 1e-9


def test_fn_weight_two_spot_check():
    rational = f_n(3)
    gammas = sample_elements(CongruenceGroup.full(), 20, seed=3)
    rng = np.random.default_rng(4)
    for gamma in gammas:
        tau = complex(rng.uniform(-0.4, 0.4), rng.uniform(0.95, 1.8))
        lhs = rational.evaluate(*g2_g3(mobius(gamma, tau)))
        rhs = (gamma.c * tau + gamma.d) ** 2 * rational.evaluate(*g2_g3(tau))
        assert abs(lhs / rhs - 1.0) < 1e-6


def test_format_strings():
    rows = {r.n: r for r in table_rows(6)}
    assert rows[4].phi.format() == "5/336 g2^2"
    assert rows[4].psi.format() == "-1/7 g3"
    assert rows[6].phi.format() == "15/4928 g2^3 + 1/55 g3^2"
    assert rows[6].f.format() == "-25/464 g2^2/g3 - 28/87 g3/g2"
    assert rows[1].f.format() == "0"
    assert rows[2].f is None
    assert WHPoly.zero().format() == "0"


def test_latex_format():
    assert phi_psi(2)[0].format(latex=True) == "\\frac{1}{12} g_2"


def test_table_row_weights():
    for row in table_rows(6):
        assert row.weight_phi == 2 * row.n
        assert row.weight_psi == 2 * (row.n - 1)


def test_f_n_validation():
    with pytest.raises(ValueError):
        f_n(0)
    with pytest.raises(ValueError):
        h_n_eval(0, 1j)
