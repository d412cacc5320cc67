"""Laplace-side reconstruction of F and the convolution kernels it rests on.

For c > 0 every factor (-1)^j Delta psi^(j)(x; c), j >= 0, is the Laplace
transform of t^j h_c(t) / c, so

    F(x; s; c) = c^-2 int_0^inf e^{-xt} g(t) dt

where g is the convolution kernel below (q >= 1) or its q = 0 variant, in
which the second product collapses to a single transform. The outer integral
is truncated where the exponential has crushed the polynomial growth of g.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from cmkit.exceptions import DomainError, InvalidIndexError, ParameterInvalidError
from cmkit.family.index import FamilyIndex, FamilyParams, alpha, enumerate_indices
from cmkit.quadrature import DEFAULT_QUADRATURE, QuadratureSpec, integrate
from cmkit.utils.logger import get_logger

from .functions import a_values, h_values, u_values

logger = get_logger('kernels')


@dataclass(frozen=True)
class KernelSample:
    """g(t) with the integral of |integrand| at the same t as its magnitude."""

    t: float
    value: float
    scale: float


@dataclass(frozen=True)
class IdentityResidual:
    label: str
    value: float
    exact: float

    @property
    def residual(self) -> float:
        return abs(self.value - self.exact)


def _check_positive(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(name, value, 'Expected a finite positive real number.')
    return value


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(name, value, 'Expected a finite real number.')
    return value


def _sample(
    integrand: Callable[[np.ndarray], np.ndarray],
    t: float,
    prefactor: float,
    spec: QuadratureSpec,
) -> KernelSample:
    inner = integrate(integrand, 0.0, 1.0, spec)
    return KernelSample(t=t, value=prefactor * inner.value, scale=prefactor * inner.abs_value)


def _convolution_sample(
    index: FamilyIndex, s: float, c: float, t: float, spec: QuadratureSpec
) -> KernelSample:
    p, m, n, q = index.as_tuple()

    def integrand(sigma: np.ndarray) -> np.ndarray:
        rest = 1.0 - sigma
        weight = rest ** (m - 1) * sigma ** (n - 1) - s * rest ** (p - 1) * sigma ** (q - 1)
        return weight * h_values(c, t * rest) * h_values(c, t * sigma)

    return _sample(integrand, t, t ** (m + n - 1), spec)


def _zero_sample(
    index: FamilyIndex, s: float, c: float, t: float, spec: QuadratureSpec
) -> KernelSample:
    _, m, n, _ = index.as_tuple()
    # s * c * t^(p-1) h_c(t), spread over the beta weight that integrates to alpha
    subtracted = s * c / float(alpha(index)) * float(h_values(c, t))

    def integrand(sigma: np.ndarray) -> np.ndarray:
        rest = 1.0 - sigma
        weight = rest ** (m - 1) * sigma ** (n - 1)
        return weight * (h_values(c, t * rest) * h_values(c, t * sigma) - subtracted)

    return _sample(integrand, t, t ** (m + n - 1), spec)


def _recast_sample(
    index: FamilyIndex, s: float, c: float, t: float, spec: QuadratureSpec
) -> KernelSample:
    p, m, n, q = index.as_tuple()
    half = 0.5 * t

    def integrand(sigma: np.ndarray) -> np.ndarray:
        rest = 1.0 - sigma
        polynomial = a_values((1.0 + sigma) / rest, p - q, n - q, s)
        weight = (1.0 - sigma * sigma) ** (q - 1) * rest ** (p - q)
        return polynomial * weight * u_values(sigma, half, c)

    return _sample(integrand, t, half ** (m + n - 1), spec)


def kernel_sample(
    params: FamilyParams, t: float, spec: QuadratureSpec = DEFAULT_QUADRATURE
) -> KernelSample:
    """g(t) for any index: the convolution kernel for q >= 1, its q = 0 variant otherwise."""
    c = _check_positive('c', params.c)
    t = _check_positive('t', t)
    if params.index.q == 0:
        return _zero_sample(params.index, params.s, c, t, spec)
    return _convolution_sample(params.index, params.s, c, t, spec)


def g_kernel(
    index: FamilyIndex,
    s: float,
    c: float,
    t: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """t^{m+n-1} int_0^1 [(1-σ)^{m-1}σ^{n-1} - s(1-σ)^{p-1}σ^{q-1}] h_c(t(1-σ)) h_c(tσ) dσ.

    Raises:
        InvalidIndexError: If q = 0.
        QuadratureError: If the inner integral does not converge.
    """
    if index.q < 1:
        raise InvalidIndexError(index.as_tuple(), 'q≥1 (use g_kernel_zero for q=0)')
    return _convolution_sample(
        index, _check_finite('s', s), _check_positive('c', c), _check_positive('t', t), spec
    ).value


def g_kernel_zero(
    index: FamilyIndex,
    s: float,
    c: float,
    t: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """t^{m+n-1} int_0^1 (1-σ)^{m-1}σ^{n-1} [h_c(t(1-σ)) h_c(tσ) - (s c/alpha) h_c(t)] dσ for q = 0."""
    if index.q != 0:
        raise InvalidIndexError(index.as_tuple(), 'q=0 (use g_kernel for q≥1)')
    return _zero_sample(
        index, _check_finite('s', s), _check_positive('c', c), _check_positive('t', t), spec
    ).value


def g_kernel_recast(
    index: FamilyIndex,
    s: float,
    c: float,
    t: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """The q >= 1 kernel folded about σ = 1/2.

    (t/2)^{m+n-1} int_0^1 a((1+σ)/(1-σ); p-q, n-q, s) (1-σ²)^{q-1} (1-σ)^{p-q} u(σ; t/2, c) dσ,
    equal to ``g_kernel`` at the same arguments.
    """
    if index.q < 1:
        raise InvalidIndexError(index.as_tuple(), 'q≥1 (the recast kernel needs q≥1)')
    return _recast_sample(
        index, _check_finite('s', s), _check_positive('c', c), _check_positive('t', t), spec
    ).value


def g_sign_table(
    params: FamilyParams,
    t_values: np.ndarray,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> list[KernelSample]:
    return [kernel_sample(params, float(t), spec) for t in t_values]


def outer_truncation(params: FamilyParams, x: float, spec: QuadratureSpec) -> float:
    """Smallest power-of-two T with growth * e^{-xT} T^{m+n-1} / x below abs_tol."""
    index = params.index
    power = index.m + index.n - 1
    # |g(t)| <= growth * t^(m+n-1) for every index
    growth = max(1.0, params.c) ** 2 * (1.0 + abs(params.s) / float(alpha(index)))
    log_target = math.log(spec.abs_tol * x / growth)
    upper = 1.0
    while -x * upper + power * math.log(upper) >= log_target:
        upper *= 2.0
    return upper


def laplace_oracle_F(
    params: FamilyParams, x: float, spec: QuadratureSpec = DEFAULT_QUADRATURE
) -> float:
    """F(x; s; c) rebuilt as c^-2 int_0^T e^{-xt} g(t) dt, for c > 0.

    Raises:
        DomainError: If c or x is not positive.
        QuadratureError: If the inner or outer integral does not converge.
    """
    c = _check_positive('c', params.c)
    x = _check_positive('x', x)
    upper = spec.outer_truncation or outer_truncation(params, x, spec)

    def outer(t: np.ndarray) -> np.ndarray:
        kernel = np.array([kernel_sample(params, float(node), spec).value for node in t])
        return np.exp(-x * t) * kernel

    result = integrate(outer, 0.0, upper, spec)
    logger.debug(
        f'Laplace oracle for {params.index} s={params.s} c={c} at x={x}: '
        f'T={upper:g}, {result.nodes} outer nodes'
    )
    return result.value / c**2


def beta_integral(x: float, y: float, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """int_0^1 σ^{x-1} (1-σ)^{y-1} dσ for x, y >= 1."""
    for name, value in (('x', x), ('y', y)):
        if not math.isfinite(value) or value < 1.0:
            raise DomainError(name, value, 'Expected a finite real number >= 1.')

    def integrand(sigma: np.ndarray) -> np.ndarray:
        return sigma ** (x - 1.0) * (1.0 - sigma) ** (y - 1.0)

    return integrate(integrand, 0.0, 1.0, spec).value


def beta_identity_residuals(
    max_arg: int, spec: QuadratureSpec = DEFAULT_QUADRATURE
) -> list[IdentityResidual]:
    """Quadrature against (x-1)!(y-1)!/(x+y-1)! for integers 1 <= x, y <= max_arg."""
    if max_arg < 1:
        raise ParameterInvalidError('max_arg', max_arg, 'Expected max_arg >= 1.')
    rows = []
    for x in range(1, max_arg + 1):
        for y in range(1, max_arg + 1):
            exact = Fraction(
                math.factorial(x - 1) * math.factorial(y - 1), math.factorial(x + y - 1)
            )
            rows.append(
                IdentityResidual(
                    label=f'B({x},{y})',
                    value=beta_integral(float(x), float(y), spec),
                    exact=float(exact),
                )
            )
    return rows


def zero_integral_residuals(
    max_p: int, spec: QuadratureSpec = DEFAULT_QUADRATURE
) -> list[IdentityResidual]:
    """The kernel weight integrates to zero at s = alpha.

    For q >= 1 this is int_0^1 [(1-σ)^{m-1}σ^{n-1} - alpha (1-σ)^{p-1}σ^{q-1}] dσ;
    for q = 0 the second product is a single transform and the identity
    reads int_0^1 (1-σ)^{m-1}σ^{n-1} dσ - alpha.
    """
    rows = []
    for index in enumerate_indices(max_p):
        p, m, n, q = index.as_tuple()
        level = float(alpha(index))

        def integrand(sigma: np.ndarray, p=p, m=m, n=n, q=q, level=level) -> np.ndarray:
            rest = 1.0 - sigma
            weight = rest ** (m - 1) * sigma ** (n - 1)
            if q == 0:
                return weight
            return weight - level * rest ** (p - 1) * sigma ** (q - 1)

        value = integrate(integrand, 0.0, 1.0, spec).value
        if q == 0:
            value -= level
        rows.append(IdentityResidual(label=str(index), value=value, exact=0.0))
    return rows
