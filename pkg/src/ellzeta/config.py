"""Evaluation configuration shared across the numeric modules."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

# Hard cap on the number of retained q-powers; beyond this the nome is so
# close to |q|=1 that double precision cannot resolve the series anyway.
MAX_SERIES_TERMS = 40_000


@dataclass(frozen=True)
class QSeriesConfig:
    """Truncation control for the exponentially convergent q-series.

    ``terms`` is the minimum number of retained q-powers.  Evaluators may
    retain more when Im(tau) is small, so that accuracy does not collapse
    off the fundamental domain; see :func:`series_terms`.
    """

    terms: int = 64

    def __post_init__(self) -> None:
        if self.terms < 1:
            raise ValueError("terms must be >= 1")


@dataclass(frozen=True)
class EvalConfig:
    """Knobs for series truncation, oracle sums and quadrature."""

    qseries: QSeriesConfig = field(default_factory=QSeriesConfig)
    direct_sum_radius: int = 200
    quad_points: int = 128

    def __post_init__(self) -> None:
        if self.direct_sum_radius < 1:
            raise ValueError("direct_sum_radius must be >= 1")
        if self.quad_points < 2:
            raise ValueError("quad_points must be >= 2")


DEFAULT_CONFIG = EvalConfig()


def series_terms(cfg_terms: int, im_tau: float) -> int:
    """Effective truncation order for a q-series at height ``im_tau``.

    With N = 16/Im(tau) the tail is bounded by |q|^N = e^{-32*pi} ~ 2e-44
    times slowly growing divisor sums, comfortably below double roundoff.
    """
    if im_tau <= 0:
        raise ValueError("tau must lie in the upper half-plane")
    adaptive = int(math.ceil(16.0 / im_tau)) + 8
    return max(cfg_terms, min(adaptive, MAX_SERIES_TERMS))
