"""Closed-form values and x-derivatives of F_{p,m,n,q}(x; s; c).

F = (-1)^(m+n) D(m-1) D(n-1) - s (-1)^(p+q) D(p-1) D(q-1), where D(j) is the
forward difference Delta psi^(j)(x; c). Since d/dx D(j) = D(j+1) for j >= 0 and
D(-1) is the constant -1, the k-th derivative of each product is a finite
Leibniz sum over one shared ``DeltaTable``.
"""

import math
import operator
from dataclasses import dataclass

from cmkit.exceptions import (
    DomainError,
    EvaluationOverflowError,
    InvalidIndexError,
    NearZeroDenominatorError,
    ParameterInvalidError,
    UnsupportedOrderError,
)
from cmkit.polygamma.engine import DEFAULT_ENGINE, EngineConfig

from .delta import DeltaTable, check_step, delta_table
from .index import FamilyIndex, FamilyParams

_DENOMINATOR_FLOOR = 1e-300


@dataclass(frozen=True)
class LeibnizTerms:
    """k-th derivatives of the two products of F at one point.

    ``first`` is the derivative of (-1)^(m+n) D(m-1) D(n-1) and ``second`` that
    of (-1)^(p+q) D(p-1) D(q-1), so F^(k) = first - s * second.
    """

    k: int
    x: float
    first: float
    second: float

    def value(self, s: float) -> float:
        return self.first - s * self.second

    def scale(self, s: float) -> float:
        """Magnitude against which sign tests on F^(k) are made."""
        return abs(self.first) + abs(s * self.second)


def _check_derivative_order(k: int) -> int:
    try:
        order = operator.index(k)
    except TypeError:
        raise ParameterInvalidError('k', k, 'Expected an integer derivative order.')
    if order < 0:
        raise ParameterInvalidError('k', k, 'Expected a derivative order k >= 0.')
    return order


def _table_for(
    index: FamilyIndex, max_order: int, x: float, c: float, config: EngineConfig
) -> DeltaTable:
    needed = index.p - 1 + max_order + (1 if c == 0.0 else 0)
    if needed > config.max_order:
        raise UnsupportedOrderError(needed, config.max_order)
    return delta_table(index.p - 1 + max_order, x, c, config)


def _product_derivative(table: DeltaTable, left: int, right: int, k: int) -> float:
    return math.fsum(
        math.comb(k, i) * table.derivative(left, i) * table.derivative(right, k - i)
        for i in range(k + 1)
    )


def _terms_from_table(index: FamilyIndex, k: int, table: DeltaTable) -> LeibnizTerms:
    sign_first = -1.0 if (index.m + index.n) % 2 else 1.0
    sign_second = -1.0 if (index.p + index.q) % 2 else 1.0
    first = sign_first * _product_derivative(table, index.m - 1, index.n - 1, k)
    second = sign_second * _product_derivative(table, index.p - 1, index.q - 1, k)
    if not (math.isfinite(first) and math.isfinite(second)):
        raise EvaluationOverflowError(
            f'F^({k}) for index {index} at x={table.x}, c={table.c}',
            'Leibniz products exceed binary64 range',
        )
    return LeibnizTerms(k=k, x=table.x, first=first, second=second)


def derivative_profile(
    index: FamilyIndex,
    c: float,
    max_order: int,
    x: float,
    config: EngineConfig = DEFAULT_ENGINE,
) -> list[LeibnizTerms]:
    """Leibniz terms of F^(k)(x) for k = 0 .. max_order from one difference table."""
    max_order = _check_derivative_order(max_order)
    table = _table_for(index, max_order, x, check_step(c), config)
    return [_terms_from_table(index, k, table) for k in range(max_order + 1)]


def leibniz_terms(
    params: FamilyParams, k: int, x: float, config: EngineConfig = DEFAULT_ENGINE
) -> LeibnizTerms:
    k = _check_derivative_order(k)
    table = _table_for(params.index, k, x, params.c, config)
    return _terms_from_table(params.index, k, table)


def f_derivative(
    params: FamilyParams, k: int, x: float, config: EngineConfig = DEFAULT_ENGINE
) -> float:
    """k-th x-derivative of F(x; s; c).

    Raises:
        DomainError: If x is not a finite positive number.
        UnsupportedOrderError: If p - 1 + k exceeds the engine's order cap.
        EvaluationOverflowError: If a Leibniz product leaves binary64 range.
    """
    return leibniz_terms(params, k, x, config).value(params.s)


def f_eval(params: FamilyParams, x: float, config: EngineConfig = DEFAULT_ENGINE) -> float:
    return f_derivative(params, 0, x, config)


def _ratio(index: FamilyIndex, c: float, x: float, config: EngineConfig) -> float:
    terms = _terms_from_table(index, 0, _table_for(index, 0, x, c, config))
    if abs(terms.second) < _DENOMINATOR_FLOOR:
        raise NearZeroDenominatorError(abs(terms.second))
    return terms.first / terms.second


def ratio_infinity(
    index: FamilyIndex, c: float, x: float, config: EngineConfig = DEFAULT_ENGINE
) -> float:
    """Ratio of the two products of F at x; tends to alpha as x grows.

    c = 0 is accepted and gives the ratio of the derivative family.
    """
    return _ratio(index, check_step(c), x, config)


def ratio_zero(
    index: FamilyIndex, c: float, x: float, config: EngineConfig = DEFAULT_ENGINE
) -> float:
    """Same ratio as ``ratio_infinity`` for q = 0; tends to alpha/c as x -> 0+."""
    if index.q != 0:
        raise InvalidIndexError(index.as_tuple(), 'q=0 (the x->0+ limit needs q=0)')
    c = check_step(c)
    if c == 0.0:
        raise DomainError('c', c, 'The x->0+ limit alpha/c needs c > 0.')
    return _ratio(index, c, x, config)
