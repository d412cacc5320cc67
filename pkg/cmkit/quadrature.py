"""Adaptive Gauss-Legendre quadrature shared by the integral oracles.

Panels of a fixed Gauss-Legendre order are bisected until the difference
between a panel and its two halves falls below a share of the global
tolerance proportional to the panel width. The integral of ``|f|`` is
accumulated with the same nodes so that callers can use it as the magnitude
scale for sign tests.
"""

import math
from dataclasses import dataclass
from functools import cache
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss
from pydantic import BaseModel, ConfigDict, Field

from cmkit.config import (
    DEFAULT_ABS_TOL,
    DEFAULT_MAX_NODES,
    DEFAULT_PANEL_ORDER,
    DEFAULT_REL_TOL,
)
from cmkit.exceptions import ParameterInvalidError, QuadratureError
from cmkit.utils.logger import get_logger

logger = get_logger('quadrature')

Integrand = Callable[[np.ndarray], np.ndarray]


class QuadratureSpec(BaseModel):
    """Tolerances and node budget for one integral oracle call."""

    model_config = ConfigDict(frozen=True)

    rel_tol: float = Field(default=DEFAULT_REL_TOL, ge=1e-14)
    abs_tol: float = Field(default=DEFAULT_ABS_TOL, gt=0.0)
    max_nodes: int = Field(default=DEFAULT_MAX_NODES, gt=0)
    # None: pick T per call from the integrand's exponential decay bound
    outer_truncation: float | None = Field(default=None, gt=0.0)
    panel_order: int = Field(default=DEFAULT_PANEL_ORDER, ge=2, le=200)


DEFAULT_QUADRATURE = QuadratureSpec()


@dataclass(frozen=True)
class QuadratureResult:
    """Value of an integral together with its magnitude and error estimate."""

    value: float
    abs_value: float
    error: float
    nodes: int


@cache
def _legendre_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = leggauss(order)
    return nodes, weights


def integrate(
    func: Integrand,
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> QuadratureResult:
    """Integrate a vectorised ``func`` over ``[a, b]``.

    Args:
        func: Maps an array of nodes to an array of integrand values.
        a: Lower limit.
        b: Upper limit, ``b > a``.
        spec: Tolerances and node budget.

    Returns:
        The integral, the integral of ``|func|``, the accumulated error
        estimate and the number of integrand evaluations.

    Raises:
        QuadratureError: If the integrand is not finite or the tolerance is
            not met within ``spec.max_nodes`` evaluations.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or b <= a:
        raise ParameterInvalidError(
            'interval', (a, b), 'Limits must be finite with a < b.'
        )
    nodes, weights = _legendre_rule(spec.panel_order)
    order = spec.panel_order
    width = b - a

    def panel(lo: float, hi: float) -> tuple[float, float]:
        half = 0.5 * (hi - lo)
        values = np.asarray(func(0.5 * (hi + lo) + half * nodes), dtype=float)
        if not np.all(np.isfinite(values)):
            raise QuadratureError(used, math.inf, spec.abs_tol)
        return half * float(weights @ values), half * float(weights @ np.abs(values))

    used = 0
    whole, whole_abs = panel(a, b)
    used += order
    scale = whole_abs

    accepted_values: list[float] = []
    accepted_abs: list[float] = []
    accepted_errors: list[float] = []
    stack = [(a, b, whole, whole_abs)]
    while stack:
        lo, hi, estimate, _ = stack.pop()
        mid = 0.5 * (lo + hi)
        left, left_abs = panel(lo, mid)
        right, right_abs = panel(mid, hi)
        used += 2 * order
        refined = left + right
        error = abs(refined - estimate)
        tolerance = max(spec.abs_tol, spec.rel_tol * scale) * (hi - lo) / width
        if error <= tolerance or mid in (lo, hi):
            accepted_values.append(refined)
            accepted_abs.append(left_abs + right_abs)
            accepted_errors.append(error)
            scale = max(scale, math.fsum(accepted_abs))
            continue
        if used > spec.max_nodes:
            raise QuadratureError(
                used,
                math.fsum(accepted_errors) + error,
                max(spec.abs_tol, spec.rel_tol * scale),
            )
        # right half first so the stack unwinds left to right
        stack.append((mid, hi, right, right_abs))
        stack.append((lo, mid, left, left_abs))

    result = QuadratureResult(
        value=math.fsum(accepted_values),
        abs_value=math.fsum(accepted_abs),
        error=math.fsum(accepted_errors),
        nodes=used,
    )
    logger.debug(
        f'Integrated over [{a:g}, {b:g}] with {len(accepted_values)} panels, '
        f'{used} nodes, error {result.error:.2e}'
    )
    return result
