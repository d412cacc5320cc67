"""Digamma and polygamma functions for positive real arguments.

The argument is raised by the recurrence psi^(n)(x+1) = psi^(n)(x) + (-1)^n n!/x^(n+1)
until it reaches ``shift_threshold + n``, where the Bernoulli asymptotic series
is summed. Every term of the shifted sum for n >= 1 carries the same sign, so
the only cancellation left is the one inherent in digamma near its zero.
"""

import math
import operator

from pydantic import BaseModel, ConfigDict, Field, field_validator

from cmkit.config import (
    DEFAULT_ASYMPTOTIC_TERMS,
    DEFAULT_SHIFT_THRESHOLD,
    EULER_GAMMA,
    MAX_ASYMPTOTIC_TERMS,
    MAX_POLYGAMMA_ORDER,
)
from cmkit.exceptions import (
    DomainError,
    EvaluationOverflowError,
    ParameterInvalidError,
    UnsupportedOrderError,
)

from .bernoulli import even_bernoulli_table

# exp() overflows past ~709.78; stay clear of the edge for direct powers
_DIRECT_POWER_LOG_LIMIT = 650.0
_LOG_FLOAT_MAX = math.log(1.7976931348623157e308)


class EngineConfig(BaseModel):
    """Immutable settings of the polygamma engine."""

    model_config = ConfigDict(frozen=True)

    shift_threshold: float = Field(default=DEFAULT_SHIFT_THRESHOLD, ge=10.0)
    asymptotic_terms: int = Field(
        default=DEFAULT_ASYMPTOTIC_TERMS, ge=4, le=MAX_ASYMPTOTIC_TERMS
    )
    gamma_constant: float = EULER_GAMMA
    max_order: int = Field(default=MAX_POLYGAMMA_ORDER, ge=1, le=MAX_POLYGAMMA_ORDER)

    @field_validator('gamma_constant')
    @classmethod
    def _agrees_with_euler_gamma(cls, value: float) -> float:
        if math.floor(value * 1e5) != 57721:
            raise ValueError(
                f'gamma_constant {value} does not agree with 0.57721 to five digits'
            )
        return value


DEFAULT_ENGINE = EngineConfig()


def check_argument(x: float, name: str = 'x') -> float:
    """Return ``x`` as a float, rejecting non-positive and non-finite values."""
    value = float(x)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(name, x, 'Expected a finite positive real number.')
    return value


def check_order(n: int, minimum: int, config: EngineConfig) -> int:
    try:
        order = operator.index(n)
    except TypeError:
        raise ParameterInvalidError('n', n, 'Expected an integer order.')
    if order < minimum:
        raise ParameterInvalidError('n', n, f'Expected an order >= {minimum}.')
    if order > config.max_order:
        raise UnsupportedOrderError(order, config.max_order)
    return order


def inverse_power(coefficient: int, base: float, exponent: int) -> float:
    """``coefficient / base**exponent`` without spurious overflow or underflow."""
    log_base = math.log(base)
    if abs(exponent * log_base) < _DIRECT_POWER_LOG_LIMIT and coefficient < 1e300:
        return coefficient / base**exponent
    log_value = math.log(coefficient) - exponent * log_base
    if log_value > _LOG_FLOAT_MAX:
        raise EvaluationOverflowError(
            f'{coefficient}/{base}^{exponent}', 'result exceeds binary64 range'
        )
    return math.exp(log_value)


def _shift_count(x: float, target: float) -> int:
    return max(0, math.ceil(target - x))


def digamma(x: float, config: EngineConfig = DEFAULT_ENGINE) -> float:
    """psi(x) for x > 0."""
    x = check_argument(x)
    shift = _shift_count(x, config.shift_threshold)
    y = x + shift
    inv_square = 1.0 / (y * y)
    terms = [math.log(y), -0.5 / y]
    power = 1.0
    bernoulli = even_bernoulli_table()[: config.asymptotic_terms]
    for k, b in enumerate(bernoulli, start=1):
        power *= inv_square
        terms.append(-b / (2 * k) * power)
    terms.extend(-1.0 / (x + i) for i in range(shift))
    return math.fsum(terms)


def _alternating_magnitude(n: int, x: float, config: EngineConfig) -> float:
    """(-1)^(n+1) psi^(n)(x) for n >= 1, which is positive."""
    shift = _shift_count(x, config.shift_threshold + n)
    y = x + shift
    inv_square = 1.0 / (y * y)
    # series relative to its leading term (n-1)!/y^n
    relative = [1.0, n / (2.0 * y)]
    power = 1.0
    bernoulli = even_bernoulli_table()[: config.asymptotic_terms]
    for k, b in enumerate(bernoulli, start=1):
        power *= inv_square
        relative.append(b * math.comb(2 * k + n - 1, 2 * k) * power)
    asymptotic = inverse_power(math.factorial(n - 1), y, n) * math.fsum(relative)

    factorial = math.factorial(n)
    terms = [asymptotic]
    terms.extend(inverse_power(factorial, x + i, n + 1) for i in range(shift))
    total = math.fsum(terms)
    if not math.isfinite(total):
        raise EvaluationOverflowError(f'psi^({n})({x})')
    return total


def polygamma(n: int, x: float, config: EngineConfig = DEFAULT_ENGINE) -> float:
    """psi^(n)(x) for n >= 1 and x > 0.

    Raises:
        DomainError: If x is not a finite positive number.
        UnsupportedOrderError: If n exceeds ``config.max_order``.
    """
    n = check_order(n, 1, config)
    x = check_argument(x)
    sign = 1.0 if n % 2 == 1 else -1.0
    return sign * _alternating_magnitude(n, x, config)


def polygamma_table(
    n_max: int, x: float, config: EngineConfig = DEFAULT_ENGINE
) -> list[float]:
    """[psi(x), psi'(x), ..., psi^(n_max)(x)]."""
    n_max = check_order(n_max, 0, config)
    x = check_argument(x)
    table = [digamma(x, config)]
    for n in range(1, n_max + 1):
        sign = 1.0 if n % 2 == 1 else -1.0
        table.append(sign * _alternating_magnitude(n, x, config))
    return table


def polygamma_asymptotic_leading(n: int, x: float) -> float:
    """The two leading terms (n-1)!/x^n + n!/(2x^(n+1)) of |psi^(n)(x)|."""
    n = check_order(n, 1, DEFAULT_ENGINE)
    x = check_argument(x)
    total = inverse_power(math.factorial(n - 1), x, n) + 0.5 * inverse_power(
        math.factorial(n), x, n + 1
    )
    if not math.isfinite(total):
        raise EvaluationOverflowError(f'asymptotic leading terms of psi^({n})({x})')
    return total
