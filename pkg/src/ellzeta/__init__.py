"""ellzeta: elliptic zeta functions, Weierstrass quasi-periods, weight-2
modular forms and equivariant functions on the upper half-plane.

The package evaluates the Weierstrass functions and the Eisenstein layer
numerically (numba-accelerated kernels with a numpy fallback selected by
the ELLZETA_BACKEND environment variable), reproduces the quasi-period
coefficient table of powers of the p-function in exact rational
arithmetic, and implements the correspondences between the three families
of objects named above.
"""

from .config import DEFAULT_CONFIG, EvalConfig, QSeriesConfig
from .lattice import (
    INFINITY,
    Lattice,
    ModularPoint,
    PointAtInfinity,
    UnimodularMatrix,
    act_on_basis,
    is_infinity,
    lattice_reduce_point,
    mobius,
    normalize_to_tau,
    reduce_to_fundamental,
)
from .eisenstein import (
    EisensteinValues,
    delta,
    e2,
    e4,
    e6,
    g2_g3,
    g_big2,
    sigma_divisor,
)
from .weierstrass import (
    QuasiPeriodPair,
    eta_of,
    eta_pair,
    eta_pair_from_zeta,
    legendre_defect,
    period_integral_wp_power,
    wp,
    wp_prime,
    zeta_general,
    zeta_w,
)
from .zeta_algebra import (
    RationalFn,
    WHPoly,
    ZetaTableRow,
    eval_whpoly,
    f_n,
    h_n_eval,
    phi_psi,
    table_rows,
)
from .groups import (
    CongruenceGroup,
    SublatticeDescriptor,
    UnsupportedGroupError,
    contains,
    sample_elements,
    stock_weight2_form,
    sublattice_of,
)
from .correspondence import (
    EllipticZetaSpec,
    EquivariantFn,
    FormDescriptor,
    QuasiPeriods,
    VerificationReport,
    equivariant_from_zeta,
    h_from_form,
    identity_zeta_spec,
    lift_form_to_zeta,
    m_inverse,
    m_transform,
    modular_from_zeta,
    named_equivariant,
    named_form,
    pair_defect,
    phi_psi_from_H,
    power_zeta_spec,
    quasi_periods,
    values_match,
    verify_equivariance,
    verify_weight,
    weierstrass_zeta_spec,
    zeta_eval,
)
from .kernels import active_backend

__version__ = "0.1.0"
