import json
import math
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from cmkit.config import (
    DEFAULT_ABS_TOL,
    DEFAULT_GRID_POINTS,
    DEFAULT_GRID_X_MAX,
    DEFAULT_GRID_X_MIN,
    DEFAULT_MAX_NODES,
    DEFAULT_MAX_ORDER,
    DEFAULT_REL_TOL,
    DEFAULT_TOLERANCE,
)
from cmkit.exceptions import ParameterInvalidError
from cmkit.quadrature import QuadratureSpec
from cmkit.verifier.models import GridSpec

Command = Literal['verify', 'sharpness']
OutputFormatName = Literal['json', 'csv']

DEFAULT_C_LIST = (0.25, 0.5, 1.0, 2.0, 4.0)


class RunConfig(BaseModel):
    """Flat configuration of one verify or sharpness run, as read from JSON or flags."""

    model_config = ConfigDict(extra='forbid', frozen=True)

    command: Command = 'verify'

    # suite
    max_index: int = Field(default=4, ge=2, le=8)
    c: list[float] = Field(default_factory=lambda: list(DEFAULT_C_LIST), min_length=1)
    max_order: int = Field(default=DEFAULT_MAX_ORDER, ge=0)
    tol: float = Field(default=DEFAULT_TOLERANCE, ge=0.0)
    s_scale: float = 1.0
    cross_check: bool = False

    # grid
    x_min: float = DEFAULT_GRID_X_MIN
    x_max: float = DEFAULT_GRID_X_MAX
    points: int = Field(default=DEFAULT_GRID_POINTS, ge=2)
    spacing: Literal['log', 'linear'] = 'log'

    # quadrature
    rel_tol: float = Field(default=DEFAULT_REL_TOL, ge=1e-14)
    abs_tol: float = Field(default=DEFAULT_ABS_TOL, gt=0.0)
    max_nodes: int = Field(default=DEFAULT_MAX_NODES, gt=0)

    # sharpness
    p: int | None = None
    m: int | None = None
    n: int | None = None
    q: int | None = None
    epsilon: float = 0.02
    direction: Literal['above', 'below'] = 'above'
    x_lo: float | None = None
    x_hi: float | None = None

    format: OutputFormatName = 'json'
    out: str = '-'

    @field_validator('c')
    @classmethod
    def _non_negative_steps(cls, values: list[float]) -> list[float]:
        for value in values:
            if not (math.isfinite(value) and value >= 0.0):
                raise ValueError(f'c values must be finite and >= 0, got {value}')
        return values

    def grid(self) -> GridSpec:
        return GridSpec(
            x_min=self.x_min, x_max=self.x_max, points=self.points, spacing=self.spacing
        )

    def quadrature(self) -> QuadratureSpec:
        return QuadratureSpec(
            rel_tol=self.rel_tol, abs_tol=self.abs_tol, max_nodes=self.max_nodes
        )

    def search_range(self) -> tuple[float, float] | None:
        if self.x_lo is None and self.x_hi is None:
            return None
        if self.x_lo is None or self.x_hi is None:
            raise ParameterInvalidError(
                'x_lo, x_hi', (self.x_lo, self.x_hi), 'Give both ends of the search range.'
            )
        return (self.x_lo, self.x_hi)


def _is_given(value: Any) -> bool:
    return value is not None and not (isinstance(value, (list, tuple)) and not value)


def load_run_config(path: Path | None, **overrides: Any) -> RunConfig:
    """Merge a JSON config file with explicit flag values; flags win.

    The file may be a flat object of ``RunConfig`` fields or a complete
    report, whose ``config`` block is used.

    Raises:
        ParameterInvalidError: If the file cannot be read or is not a JSON object.
        pydantic.ValidationError: If a field is unknown or out of range.
    """
    data: dict[str, Any] = {}
    if path is not None:
        try:
            raw = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise ParameterInvalidError('config', str(path), f'Cannot read JSON: {e}')
        if isinstance(raw, dict) and isinstance(raw.get('config'), dict) and 'results' in raw:
            raw = raw['config']
        if not isinstance(raw, dict):
            raise ParameterInvalidError('config', str(path), 'Expected a JSON object.')
        data.update(raw)
    data.update({key: value for key, value in overrides.items() if _is_given(value)})
    return RunConfig(**data)
