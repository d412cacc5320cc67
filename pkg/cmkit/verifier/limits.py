from cmkit.exceptions import LimitDivergenceError, ParameterInvalidError
from cmkit.family.evaluate import ratio_infinity, ratio_zero
from cmkit.family.index import FamilyIndex, alpha
from cmkit.polygamma.engine import DEFAULT_ENGINE, EngineConfig
from cmkit.utils.logger import get_logger

from .models import LimitKind, LimitRow, LimitTable

logger = get_logger('verifier')

INFINITY_POINTS = (1e1, 1e2, 1e3, 1e4)
ZERO_POINTS = (1e-2, 1e-3, 1e-4, 1e-5, 1e-6)
INFINITY_TOLERANCE = 5e-4
ZERO_TOLERANCE = 1e-3
# gaps at this level relative to the target are rounding, not a trend
NOISE_FLOOR = 1e-12


def limit_check(
    index: FamilyIndex,
    c: float,
    kind: LimitKind,
    config: EngineConfig = DEFAULT_ENGINE,
    tolerance: float | None = None,
) -> LimitTable:
    """Tabulate the product ratio of F towards its x -> inf or x -> 0+ limit.

    The target is alpha at infinity and alpha/c at zero (q = 0 only). The last
    gap must be within ``tolerance * target``; the tolerance defaults to
    ``INFINITY_TOLERANCE`` or ``ZERO_TOLERANCE``.

    Raises:
        InvalidIndexError: If kind is ``zero`` and q != 0.
        LimitDivergenceError: If a gap grows from one row to the next, or the
            final gap exceeds the tolerance.
    """
    level = float(alpha(index))
    if kind == 'infinity':
        points, default, target = INFINITY_POINTS, INFINITY_TOLERANCE, level
        ratio = ratio_infinity
    elif kind == 'zero':
        if not c > 0.0:
            raise ParameterInvalidError('c', c, 'The x->0+ limit needs c > 0.')
        points, default, target = ZERO_POINTS, ZERO_TOLERANCE, level / c
        ratio = ratio_zero
    else:
        raise ParameterInvalidError('kind', kind, "Expected 'infinity' or 'zero'.")
    if tolerance is None:
        tolerance = default
    elif not tolerance > 0.0:
        raise ParameterInvalidError('tolerance', tolerance, 'Expected tolerance > 0.')

    rows = []
    for x in points:
        value = ratio(index, c, x, config)
        rows.append(LimitRow(x=x, ratio=value, gap=abs(value - target)))

    gaps = [row.gap for row in rows]
    floor = NOISE_FLOOR * target
    for before, after in zip(gaps, gaps[1:]):
        if after > max(before, floor):
            raise LimitDivergenceError(kind, gaps)

    table = LimitTable(
        index=index, c=c, kind=kind, target=target, rows=rows, tolerance=tolerance
    )
    if not table.within_tolerance:
        logger.warning(f'{kind} limit for {index} c={c} stalls at gap {table.final_gap:.3e}')
        raise LimitDivergenceError(kind, gaps, tolerance * target)
    return table
