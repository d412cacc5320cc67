import math

import numpy as np
from scipy.optimize import minimize_scalar

from cmkit.config import DEFAULT_SCAN_POINTS, DEFAULT_TOLERANCE, LARGE_X_SEARCH, SMALL_X_SEARCH
from cmkit.exceptions import CMKitError, NoWitnessError, ParameterInvalidError
from cmkit.family.evaluate import leibniz_terms
from cmkit.family.index import FamilyParams, alpha
from cmkit.polygamma.engine import DEFAULT_ENGINE, EngineConfig
from cmkit.utils.logger import get_logger

from .models import Direction, SharpnessResult

logger = get_logger('verifier')


def sharpness_threshold(params: FamilyParams, direction: Direction) -> tuple[float, bool]:
    """Level at which the clause for ``direction`` stops holding.

    Returns the level and whether its violation shows up as x -> 0+ (the
    alpha/c limit of q = 0 indices) rather than as x -> inf.
    """
    index, c = params.index, params.c
    level = float(alpha(index))
    if index.q >= 1:
        return level, False
    if c == 0.0:
        if direction == 'below':
            raise ParameterInvalidError(
                'direction', direction, 'At c = 0 a q = 0 index has no upper level.'
            )
        return level, False
    scaled = level / c
    if direction == 'above':
        return (level, False) if level <= scaled else (scaled, True)
    return (level, False) if level >= scaled else (scaled, True)


def sharpness_probe(
    params: FamilyParams,
    direction: Direction,
    epsilon: float,
    x_search: tuple[float, float] | None = None,
    tol: float = DEFAULT_TOLERANCE,
    scan_points: int = DEFAULT_SCAN_POINTS,
    config: EngineConfig = DEFAULT_ENGINE,
) -> SharpnessResult:
    """Find x where F just past its CM level has the wrong sign.

    ``params`` names the index and c; its s is replaced by the threshold times
    (1 + epsilon) for ``above``, where F should fail to stay non-negative, or
    times (1 - epsilon) for ``below``, where -F should. The x-range is
    scanned on a log grid and the most negative point is refined by bounded
    minimisation in log x.

    Raises:
        ParameterInvalidError: If epsilon is outside [0, 0.5) or the range is invalid.
        NoWitnessError: If no x in the range violates the sign by more than tol.
    """
    if not (math.isfinite(epsilon) and 0.0 <= epsilon < 0.5):
        raise ParameterInvalidError('epsilon', epsilon, 'Expected 0 <= epsilon < 0.5.')
    level, near_zero = sharpness_threshold(params, direction)
    lo, hi = x_search or (SMALL_X_SEARCH if near_zero else LARGE_X_SEARCH)
    if not (0.0 < lo < hi and math.isfinite(hi)):
        raise ParameterInvalidError('x_search', (lo, hi), 'Expected 0 < x_lo < x_hi.')

    if direction == 'above':
        perturbed = params.with_s(level * (1.0 + epsilon))
        orientation, sign = 1.0, 'plus'
    else:
        perturbed = params.with_s(level * (1.0 - epsilon))
        orientation, sign = -1.0, 'minus'

    def relative(log_x: float) -> float:
        terms = leibniz_terms(perturbed, 0, math.exp(log_x), config)
        scale = terms.scale(perturbed.s)
        return orientation * terms.value(perturbed.s) / scale if scale > 0.0 else 0.0

    log_grid = np.linspace(math.log(lo), math.log(hi), scan_points)
    scores = np.full(scan_points, np.inf)
    for i, log_x in enumerate(log_grid):
        try:
            scores[i] = relative(float(log_x))
        except CMKitError as e:
            logger.debug(f'Sharpness scan skipped x={math.exp(log_x):g}: {e}')

    best = int(np.argmin(scores))
    best_log_x, best_score = float(log_grid[best]), float(scores[best])
    if best_score < np.inf:
        left = float(log_grid[max(best - 1, 0)])
        right = float(log_grid[min(best + 1, scan_points - 1)])
        if right > left:
            try:
                refined = minimize_scalar(relative, bounds=(left, right), method='bounded')
                if refined.success and refined.fun < best_score:
                    best_log_x, best_score = float(refined.x), float(refined.fun)
            except CMKitError as e:
                logger.debug(f'Sharpness refinement kept the scan point: {e}')

    if not best_score < -tol:
        raise NoWitnessError((lo, hi))

    witness_x = math.exp(best_log_x)
    terms = leibniz_terms(perturbed, 0, witness_x, config)
    result = SharpnessResult(
        params=perturbed,
        direction=direction,
        epsilon=epsilon,
        threshold=level,
        sign=sign,
        witness_x=witness_x,
        witness_value=orientation * terms.value(perturbed.s),
        witness_scale=terms.scale(perturbed.s),
        searched_range=(lo, hi),
    )
    logger.debug(
        f'Sharpness witness for {params.index} c={params.c} {direction}: '
        f'x={witness_x:.6g}, value={result.witness_value:.3e}'
    )
    return result
