"""Polygamma values by direct quadrature of their Laplace-type integrals.

psi(x) = -gamma + int_0^inf (e^-t - e^-xt) / (1 - e^-t) dt
(-1)^(n+1) psi^(n)(x) = int_0^inf e^-xt t^n / (1 - e^-t) dt,  n >= 1

This path shares nothing with the recurrence/asymptotic engine and is used to
cross-check it.
"""

import math

import numpy as np

from cmkit.quadrature import DEFAULT_QUADRATURE, Integrand, QuadratureSpec, integrate

from .engine import DEFAULT_ENGINE, EngineConfig, check_argument, check_order

_SMALL_T = 1e-6


def _polygamma_integrand(n: int, x: float) -> Integrand:
    def integrand(t: np.ndarray) -> np.ndarray:
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            direct = np.exp(-x * t) * t**n / -np.expm1(-t)
        # t^n / (1 - e^-t) = t^(n-1) (1 + t/2 + O(t^2))
        series = np.exp(-x * t) * t ** (n - 1) * (1.0 + 0.5 * t)
        return np.where(t < _SMALL_T, series, direct)

    return integrand


def _digamma_integrand(x: float) -> Integrand:
    def integrand(t: np.ndarray) -> np.ndarray:
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            near = np.exp(-t) * -np.expm1(-(x - 1.0) * t) / -np.expm1(-t)
            far = (np.exp(-t) - np.exp(-x * t)) / -np.expm1(-t)
        series = (x - 1.0) * (1.0 - 0.5 * x * t)
        return np.where(t < _SMALL_T, series, np.where(t <= 1.0, near, far))

    return integrand


def half_line_integral(
    integrand: Integrand, rate: float, spec: QuadratureSpec
) -> float:
    """Integrate over [0, inf) as [0, 1] plus [1, inf) mapped by t = 1 - ln(u)/rate.

    ``rate`` should be at most half the slowest exponential decay rate of the
    integrand so that the mapped integrand vanishes at u = 0.
    """
    head = integrate(integrand, 0.0, 1.0, spec)

    def mapped(u: np.ndarray) -> np.ndarray:
        t = 1.0 - np.log(u) / rate
        return integrand(t) / (rate * u)

    tail = integrate(mapped, 0.0, 1.0, spec)
    return math.fsum([head.value, tail.value])


def integral_representation_oracle(
    n: int,
    x: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    config: EngineConfig = DEFAULT_ENGINE,
) -> float:
    """psi(x) (n = 0) or psi^(n)(x) (n >= 1) by quadrature.

    Raises:
        QuadratureError: If the tolerance is not met within the node budget.
    """
    n = check_order(n, 0, config)
    x = check_argument(x)
    rate = 0.5 * min(1.0, x)
    if n == 0:
        return -config.gamma_constant + half_line_integral(
            _digamma_integrand(x), rate, spec
        )
    sign = 1.0 if n % 2 == 1 else -1.0
    return sign * half_line_integral(_polygamma_integrand(n, x), rate, spec)
