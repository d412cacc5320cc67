"""Forward differences of the polygamma functions.

Delta psi^(j)(x; c) = (psi^(j)(x+c) - psi^(j)(x)) / c with psi^(0) = psi and
psi^(-1)(x) = -x, so the j = -1 entry is the constant -1. At c = 0 the
difference becomes psi^(j+1)(x), and the j = -1 entry stays -1.

For small c relative to x the quotient is summed from its Taylor series
sum_{i>=1} psi^(j+i)(x) c^(i-1)/i!, which avoids the cancellation of the direct
quotient and makes the c -> 0 limit continuous to working precision.
"""

import math
from dataclasses import dataclass
from typing import Callable

from cmkit.config import SERIES_SWITCH
from cmkit.exceptions import DomainError, ParameterInvalidError, UnsupportedOrderError
from cmkit.polygamma.engine import (
    DEFAULT_ENGINE,
    EngineConfig,
    check_argument,
    digamma,
    polygamma,
    polygamma_table,
)

_SERIES_STOP = 1e-17


@dataclass(frozen=True)
class DeltaTable:
    """Delta psi^(j)(x; c) for j = -1 .. j_max at one (x, c)."""

    x: float
    c: float
    values: tuple[float, ...]

    @property
    def j_max(self) -> int:
        return len(self.values) - 2

    def value(self, j: int) -> float:
        return self.values[j + 1]

    def derivative(self, j: int, i: int) -> float:
        """i-th x-derivative of Delta psi^(j); the j = -1 factor is constant."""
        if j == -1:
            return -1.0 if i == 0 else 0.0
        return self.values[j + i + 1]


def check_step(c: float) -> float:
    value = float(c)
    if not math.isfinite(value) or value < 0.0:
        raise DomainError('c', c, 'Expected a finite step c >= 0.')
    return value


def _series_quotient(
    j: int, c: float, psi: Callable[[int], float], config: EngineConfig
) -> float | None:
    terms: list[float] = []
    partial = 0.0
    coefficient = 1.0
    for i in range(1, config.max_order - j + 1):
        if i > 1:
            coefficient *= c / i
        term = psi(j + i) * coefficient
        terms.append(term)
        partial += term
        if abs(term) <= _SERIES_STOP * abs(partial):
            return math.fsum(terms)
    return None


def _direct_quotient(j: int, x: float, c: float, config: EngineConfig) -> float:
    if j == 0:
        return (digamma(x + c, config) - digamma(x, config)) / c
    return (polygamma(j, x + c, config) - polygamma(j, x, config)) / c


def delta_table(
    j_max: int, x: float, c: float, config: EngineConfig = DEFAULT_ENGINE
) -> DeltaTable:
    """Build Delta psi^(j)(x; c) for every j in [-1, j_max].

    Raises:
        DomainError: If x <= 0 or c < 0.
        UnsupportedOrderError: If a needed polygamma order exceeds the engine maximum.
    """
    x = check_argument(x)
    c = check_step(c)
    if j_max < -1:
        raise ParameterInvalidError('j_max', j_max, 'Expected j_max >= -1.')
    needed = j_max + 1 if c == 0.0 else j_max
    if needed > config.max_order:
        raise UnsupportedOrderError(needed, config.max_order)

    values = [-1.0]
    if j_max < 0:
        return DeltaTable(x=x, c=c, values=tuple(values))

    if c == 0.0:
        psi_values = polygamma_table(j_max + 1, x, config)
        values.extend(psi_values[1:])
    elif c <= SERIES_SWITCH * x:
        cache: dict[int, float] = {}

        def psi(order: int) -> float:
            if order not in cache:
                cache[order] = polygamma(order, x, config)
            return cache[order]

        for j in range(j_max + 1):
            quotient = _series_quotient(j, c, psi, config)
            if quotient is None:
                quotient = _direct_quotient(j, x, c, config)
            values.append(quotient)
    else:
        lower = polygamma_table(j_max, x, config)
        upper = polygamma_table(j_max, x + c, config)
        values.extend((hi - lo) / c for lo, hi in zip(lower, upper))
    return DeltaTable(x=x, c=c, values=tuple(values))


def delta_psi(j: int, x: float, c: float, config: EngineConfig = DEFAULT_ENGINE) -> float:
    """Delta psi^(j)(x; c) for j >= -1, x > 0 and c >= 0."""
    if j < -1:
        raise ParameterInvalidError('j', j, 'Expected j >= -1.')
    return delta_table(j, x, c, config).value(j)
