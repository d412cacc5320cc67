import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from cmkit.config import DEFAULT_GRID_POINTS, DEFAULT_GRID_X_MAX, DEFAULT_GRID_X_MIN
from cmkit.exceptions import DomainError
from cmkit.family.index import FamilyIndex, FamilyParams

Sign = Literal['plus', 'minus']
Verdict = Literal['pass', 'fail', 'inconclusive']
Direction = Literal['above', 'below']
LimitKind = Literal['infinity', 'zero']
Clause = Literal[
    'alpha_plus', 'alpha_minus', 'scaled_alpha_minus', 'scaled_alpha_plus', 'beta_minus'
]


class GridSpec(BaseModel):
    """x-grid on which derivative signs are sampled."""

    model_config = ConfigDict(frozen=True)

    x_min: float = DEFAULT_GRID_X_MIN
    x_max: float = DEFAULT_GRID_X_MAX
    points: int = Field(default=DEFAULT_GRID_POINTS, ge=2)
    spacing: Literal['log', 'linear'] = 'log'

    @model_validator(mode='after')
    def _ordered_positive(self) -> 'GridSpec':
        if not (math.isfinite(self.x_min) and self.x_min > 0.0):
            raise DomainError('x_min', self.x_min, 'Expected a finite x_min > 0.')
        if not (math.isfinite(self.x_max) and self.x_max > self.x_min):
            raise DomainError('x_max', self.x_max, f'Expected a finite x_max > x_min={self.x_min}.')
        return self

    def values(self) -> np.ndarray:
        if self.spacing == 'log':
            return np.geomspace(self.x_min, self.x_max, self.points)
        return np.linspace(self.x_min, self.x_max, self.points)


DEFAULT_GRID = GridSpec()


class CMCell(BaseModel):
    """sign * (-1)^k F^(k)(x) with its magnitude scale."""

    model_config = ConfigDict(frozen=True)

    k: int
    x: float
    value: float
    scale: float

    @property
    def relative(self) -> float:
        return self.value / self.scale if self.scale > 0.0 else 0.0

    def passes(self, tol: float) -> bool:
        return self.value >= -tol * self.scale


class CMReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: FamilyParams
    sign: Sign
    clause: Clause | None = None
    max_order: int
    tol: float
    grid: GridSpec
    verdict: Verdict
    worst: CMCell | None = None
    witness: CMCell | None = None
    error: str | None = None
    oracle_agreement: float | None = None
    cells: list[CMCell] = Field(default_factory=list, exclude=True)

    @model_validator(mode='after')
    def _witness_iff_fail(self) -> 'CMReport':
        if (self.verdict == 'fail') != (self.witness is not None):
            raise ValueError('A CM report carries a witness exactly when it fails')
        return self

    @property
    def passed(self) -> bool:
        return self.verdict == 'pass'


class SharpnessResult(BaseModel):
    """A point where the perturbed family breaks the sign its clause requires."""

    model_config = ConfigDict(frozen=True)

    params: FamilyParams
    direction: Direction
    epsilon: float
    threshold: float
    sign: Sign
    witness_x: float
    witness_value: float
    witness_scale: float
    searched_range: tuple[float, float]


class LimitRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float
    ratio: float
    gap: float


class LimitTable(BaseModel):
    """Ratio of the two products of F approaching its limit."""

    model_config = ConfigDict(frozen=True)

    index: FamilyIndex
    c: float
    kind: LimitKind
    target: float
    rows: list[LimitRow]
    tolerance: float

    @property
    def final_gap(self) -> float:
        return self.rows[-1].gap

    @property
    def within_tolerance(self) -> bool:
        return self.final_gap <= self.tolerance * self.target
