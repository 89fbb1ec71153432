import pytest

from ellzeta.correspondence import verify_equivariance, verify_weight, m_transform
from ellzeta.groups import (
    ENTRY_CAP,
    CongruenceGroup,
    UnsupportedGroupError,
    contains,
    sample_elements,
    stock_weight2_form,
    sublattice_of,
)
from ellzeta.lattice import Lattice, UnimodularMatrix, mobius

S = UnimodularMatrix.inversion()
I2 = UnimodularMatrix.identity()

ALL_GROUPS = [
    CongruenceGroup.full(),
    CongruenceGroup.gamma0(2),
    CongruenceGroup.gamma0(5),
    CongruenceGroup.gamma1(3),
    CongruenceGroup.principal(2),
    CongruenceGroup.principal(3),
]


@pytest.mark.parametrize("group", ALL_GROUPS, ids=str)
def test_identity_in_every_group(group):
    assert contains(group, I2)


def test_membership_witnesses():
    t = UnimodularMatrix(1, 1, 0, 1)
    assert contains(CongruenceGroup.gamma0(2), t)
    assert not contains(CongruenceGroup.principal(2), t)  # b odd
    assert not contains(CongruenceGroup.gamma0(2), UnimodularMatrix(2, 1, 1, 1))
    assert contains(CongruenceGroup.principal(2), UnimodularMatrix(1, 0, 2, 1))
    assert not contains(CongruenceGroup.gamma1(3), UnimodularMatrix(2, 1, 3, 2))


def test_group_parse_roundtrip():
    for spec in ("SL2Z", "Gamma0(4)", "Gamma1(2)", "Gamma(3)"):
        assert str(CongruenceGroup.parse(spec)) == spec
    with pytest.raises(ValueError):
        CongruenceGroup.parse("PSL2Z")
    with pytest.raises(ValueError):
        CongruenceGroup("gamma0", 0)


@pytest.mark.parametrize("group", ALL_GROUPS, ids=str)
def test_membership_is_group_closed(group):
    elements = sample_elements(group, 20, seed=13)
    pairs = zip(elements, reversed(elements))
    for count, (a, b) in enumerate(pairs):
        assert contains(group, a @ b)
        assert contains(group, a.inverse())
        if count >= 200:
            break


def test_sublattice_principal():
    desc = sublattice_of(CongruenceGroup.principal(3), Lattice(1, 1j))
    assert desc.index == 9
    assert desc.sublattice == Lattice(3, 3j)


def test_sublattice_gamma0():
    tau = 0.2 + 1.1j
    desc = sublattice_of(CongruenceGroup.gamma0(5), Lattice(1, tau))
    assert desc.index == 5
    assert desc.sublattice == Lattice(1, 5 * tau)


def test_sublattice_level_one_is_trivial():
    lat = Lattice(1, 1j)
    desc = sublattice_of(CongruenceGroup.principal(1), lat)
    assert desc.index == 1 and desc.sublattice == lat


def test_sublattice_gamma1_unsupported():
    with pytest.raises(UnsupportedGroupError):
        sublattice_of(CongruenceGroup.gamma1(2), Lattice(1, 1j))


def test_sampler_reproducible():
    a = sample_elements(CongruenceGroup.full(), 30, seed=99)
    b = sample_elements(CongruenceGroup.full(), 30, seed=99)
    assert a == b
    c = sample_elements(CongruenceGroup.full(), 30, seed=100)
    assert a != c


def test_sampler_gamma0_congruence():
    for gamma in sample_elements(CongruenceGroup.gamma0(4), 100, seed=1):
        assert gamma.c % 4 == 0
        assert gamma.a * gamma.d - gamma.b * gamma.c == 1


def test_sampler_principal_congruence():
    for gamma in sample_elements(CongruenceGroup.principal(2), 100, seed=2):
        assert gamma.a % 2 == 1 and gamma.d % 2 == 1
        assert gamma.b % 2 == 0 and gamma.c % 2 == 0


@pytest.mark.parametrize("group", ALL_GROUPS, ids=str)
def test_sampler_outputs_contained_and_bounded(group):
    for gamma in sample_elements(group, 50, seed=3):
        assert contains(group, gamma)
        assert gamma.max_abs_entry() <= ENTRY_CAP


def test_sampler_hits_nontrivial_elements():
    elements = sample_elements(CongruenceGroup.gamma0(3), 50, seed=7)
    assert any(g.c != 0 for g in elements)
    assert any(g.c == 0 for g in elements)


def test_stock_form_requires_level_two():
    with pytest.raises(ValueError):
        stock_weight2_form(1)


def test_stock_form_cusp_value():
    form = stock_weight2_form(2)
    assert abs(form.value(40j) - (1 - 2)) < 1e-10
    form3 = stock_weight2_form(3)
    assert abs(form3.value(40j) - (1 - 3)) < 1e-10


def test_stock_form_weight_two_on_gamma0():
    form = stock_weight2_form(2)
    report = verify_weight(form, samples=50, seed=21, tol=1e-6)
    assert report.passed, report


def test_stock_form_breaks_under_s():
    form = stock_weight2_form(2)
    tau = 0.21 + 1.12j
    lhs = form.value(mobius(S, tau))
    rhs = (S.c * tau + S.d) ** 2 * form.value(tau)
    assert abs(lhs / rhs - 1.0) > 1e-3


def test_stock_form_m_image_equivariant_on_gamma0_only():
    form = stock_weight2_form(2)
    h = m_transform(form)
    assert verify_equivariance(h, samples=40, seed=5, tol=1e-6).passed
    full = verify_equivariance(
        h, samples=40, seed=5, tol=1e-6, group=CongruenceGroup.full()
    )
    assert not full.passed
    assert full.worst is not None
