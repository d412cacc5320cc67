import operator

from cmkit.config import DEFAULT_MAX_ORDER, DEFAULT_TOLERANCE
from cmkit.exceptions import CMKitError, ParameterInvalidError, UnsupportedOrderError
from cmkit.family.evaluate import derivative_profile
from cmkit.family.index import FamilyParams
from cmkit.polygamma.engine import DEFAULT_ENGINE, EngineConfig
from cmkit.utils.logger import get_logger

from .models import DEFAULT_GRID, CMCell, CMReport, Clause, GridSpec, Sign

logger = get_logger('verifier')


def check_order_cap(params: FamilyParams, max_order: int, config: EngineConfig) -> int:
    """Validate ``max_order`` against the polygamma orders it will need."""
    try:
        max_order = operator.index(max_order)
    except TypeError:
        raise ParameterInvalidError('max_order', max_order, 'Expected an integer.')
    if max_order < 0:
        raise ParameterInvalidError('max_order', max_order, 'Expected max_order >= 0.')
    needed = params.index.p - 1 + max_order + (1 if params.c == 0.0 else 0)
    if needed > config.max_order:
        raise UnsupportedOrderError(needed, config.max_order)
    return max_order


def check_cm(
    params: FamilyParams,
    sign: Sign,
    grid: GridSpec = DEFAULT_GRID,
    max_order: int = DEFAULT_MAX_ORDER,
    tol: float = DEFAULT_TOLERANCE,
    config: EngineConfig = DEFAULT_ENGINE,
    keep_cells: bool = False,
    clause: Clause | None = None,
) -> CMReport:
    """Sample sign * (-1)^k F^(k)(x) for k <= max_order over the grid.

    A cell passes when its value is at least -tol times the Leibniz scale at
    the same (k, x). The report fails when any cell does and then carries the
    worst cell as witness. If a cell cannot be evaluated the scan stops and
    the verdict is inconclusive unless a witness was already found.

    Raises:
        ParameterInvalidError: If max_order or tol is invalid.
        UnsupportedOrderError: If the grid needs orders beyond the engine cap.
    """
    max_order = check_order_cap(params, max_order, config)
    if not tol >= 0.0:
        raise ParameterInvalidError('tol', tol, 'Expected a tolerance >= 0.')
    orientation = 1.0 if sign == 'plus' else -1.0

    worst: CMCell | None = None
    cells: list[CMCell] = []
    error: str | None = None
    for x in grid.values():
        try:
            profile = derivative_profile(params.index, params.c, max_order, float(x), config)
        except CMKitError as e:
            error = f'x={float(x)!r}: {e.message}'
            logger.warning(f'CM check for {params.index} s={params.s} c={params.c} stopped at {error}')
            break
        for terms in profile:
            parity = -1.0 if terms.k % 2 else 1.0
            cell = CMCell(
                k=terms.k,
                x=terms.x,
                value=orientation * parity * terms.value(params.s),
                scale=terms.scale(params.s),
            )
            if keep_cells:
                cells.append(cell)
            if worst is None or cell.relative < worst.relative:
                worst = cell

    failed = worst is not None and not worst.passes(tol)
    if failed:
        verdict = 'fail'
    elif error is not None:
        verdict = 'inconclusive'
    else:
        verdict = 'pass'
    report = CMReport(
        params=params,
        sign=sign,
        clause=clause,
        max_order=max_order,
        tol=tol,
        grid=grid,
        verdict=verdict,
        worst=worst,
        witness=worst if failed else None,
        error=error,
        cells=cells,
    )
    logger.debug(
        f'CM check {params.index} s={params.s} c={params.c} sign={sign}: {verdict}'
    )
    return report
