"""Backend selection for the hot numeric kernels.

The environment variable ``ELLZETA_BACKEND`` picks the implementation:

* ``numba`` -- require the JIT backend (ImportError if numba is missing),
* ``numpy`` -- force the pure-numpy fallback,
* ``auto`` (default) -- numba when importable, numpy otherwise.

Both backends expose the same functions; see ``reference.py`` for the
shared signatures.  ``python -m ellzeta.benchmarks`` times one against the
other.
"""

from __future__ import annotations

import os

_KERNEL_NAMES = [
    "zeta_series",
    "wp_series",
    "wp_prime_series",
    "power_series",
    "delta_product",
    "zeta_direct_sum",
    "wp_direct_sum",
    "lattice_inv_power_sum",
]

_requested = os.environ.get("ELLZETA_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"ELLZETA_BACKEND must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import reference as _impl

    _BACKEND = "numpy"
else:
    try:
        from . import jit as _impl

        _BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import reference as _impl

        _BACKEND = "numpy"


def active_backend() -> str:
    """Name of the backend selected at import time."""
    return _BACKEND


zeta_series = _impl.zeta_series
wp_series = _impl.wp_series
wp_prime_series = _impl.wp_prime_series
power_series = _impl.power_series
delta_product = _impl.delta_product
zeta_direct_sum = _impl.zeta_direct_sum
wp_direct_sum = _impl.wp_direct_sum
lattice_inv_power_sum = _impl.lattice_inv_power_sum

__all__ = _KERNEL_NAMES + ["active_backend"]
