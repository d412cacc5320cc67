import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Sequence

from cmkit.config import DEFAULT_MAX_ORDER, DEFAULT_TOLERANCE, suite_workers
from cmkit.exceptions import CMKitError, DomainError, ParameterInvalidError
from cmkit.family.evaluate import leibniz_terms
from cmkit.family.index import FamilyParams, alpha, beta, enumerate_indices
from cmkit.kernels.laplace import laplace_oracle_F
from cmkit.polygamma.engine import DEFAULT_ENGINE, EngineConfig
from cmkit.quadrature import DEFAULT_QUADRATURE, QuadratureSpec
from cmkit.utils.logger import get_logger

from .check import check_cm
from .models import DEFAULT_GRID, CMReport, Clause, GridSpec, Sign

logger = get_logger('verifier')

MAX_SUITE_INDEX = 8
SPOT_POINTS: tuple[float, float, float] = (1.0, 2.0, 5.0)
ORACLE_AGREEMENT_TOLERANCE = 1e-6


@dataclass(frozen=True)
class SuiteCase:
    clause: Clause
    params: FamilyParams
    sign: Sign


def suite_cases(max_index: int, c_list: Sequence[float], s_scale: float = 1.0) -> list[SuiteCase]:
    """Every clause that applies to each index with p <= max_index and each c.

    The CM clauses are F at alpha for c <= 1, -F at alpha for c >= 1, and for
    q = 0 the scaled level alpha/c with the opposite orientations; for q >= 1,
    -F at beta holds for every c. At c = 0 only the alpha and beta clauses
    are meaningful. ``s_scale`` multiplies every level.
    """
    if not 2 <= max_index <= MAX_SUITE_INDEX:
        raise ParameterInvalidError(
            'max_index', max_index, f'Expected 2 <= max_index <= {MAX_SUITE_INDEX}.'
        )
    for c in c_list:
        if not (math.isfinite(c) and c >= 0.0):
            raise DomainError('c', c, 'Expected finite values c >= 0.')

    cases = []
    for index in enumerate_indices(max_index):
        level = float(alpha(index))
        for c in c_list:

            def case(clause: Clause, s: float, sign: Sign) -> SuiteCase:
                return SuiteCase(
                    clause=clause,
                    params=FamilyParams(index=index, s=s * s_scale, c=c),
                    sign=sign,
                )

            if c <= 1.0:
                cases.append(case('alpha_plus', level, 'plus'))
            if c >= 1.0:
                cases.append(case('alpha_minus', level, 'minus'))
            if index.q == 0 and 0.0 < c <= 1.0:
                cases.append(case('scaled_alpha_minus', level / c, 'minus'))
            if index.q == 0 and c >= 1.0:
                cases.append(case('scaled_alpha_plus', level / c, 'plus'))
            if index.q >= 1:
                cases.append(case('beta_minus', float(beta(index)), 'minus'))
    return cases


def oracle_agreement(
    params: FamilyParams,
    spot_points: Sequence[float] = SPOT_POINTS,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    config: EngineConfig = DEFAULT_ENGINE,
) -> float:
    """Largest |laplace_oracle_F - f_eval| over the spot points, relative to the Leibniz scale."""
    disagreement = 0.0
    for x in spot_points:
        terms = leibniz_terms(params, 0, x, config)
        oracle = laplace_oracle_F(params, x, spec)
        scale = terms.scale(params.s)
        if scale > 0.0:
            disagreement = max(disagreement, abs(oracle - terms.value(params.s)) / scale)
    return disagreement


def theorem_suite(
    max_index: int,
    c_list: Sequence[float],
    grid: GridSpec = DEFAULT_GRID,
    max_order: int = DEFAULT_MAX_ORDER,
    tol: float = DEFAULT_TOLERANCE,
    config: EngineConfig = DEFAULT_ENGINE,
    s_scale: float = 1.0,
    cross_check: bool = False,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    workers: int | None = None,
    keep_cells: bool = False,
) -> list[CMReport]:
    """Run ``check_cm`` for every case of ``suite_cases``.

    Reports come back in case order whatever the number of workers, which
    defaults to ``CMKIT_THREADS``. With ``cross_check`` every passing case with
    c > 0 also records its agreement with the Laplace reconstruction of F, and
    turns inconclusive when the two disagree beyond ``ORACLE_AGREEMENT_TOLERANCE``.
    """
    cases = suite_cases(max_index, c_list, s_scale)
    workers = workers or suite_workers()
    logger.info(
        f'Running {len(cases)} suite cases for p <= {max_index}, c in {list(c_list)} '
        f'with {workers} worker(s)'
    )

    def run(case: SuiteCase) -> CMReport:
        report = check_cm(
            case.params,
            case.sign,
            grid=grid,
            max_order=max_order,
            tol=tol,
            config=config,
            keep_cells=keep_cells,
            clause=case.clause,
        )
        if cross_check and report.passed and case.params.c > 0.0:
            try:
                agreement = oracle_agreement(case.params, spec=spec, config=config)
            except CMKitError as e:
                logger.warning(f'Oracle cross-check failed for {case.params.index}: {e}')
                return report.model_copy(update={'verdict': 'inconclusive', 'error': e.message})
            update: dict[str, Any] = {'oracle_agreement': agreement}
            if not agreement <= ORACLE_AGREEMENT_TOLERANCE:
                message = (
                    f'Laplace reconstruction disagrees with F by {agreement:.3e} '
                    f'(tolerance {ORACLE_AGREEMENT_TOLERANCE:g})'
                )
                update.update(verdict='inconclusive', error=message)
            report = report.model_copy(update=update)
        return report

    if workers == 1:
        reports = [run(case) for case in cases]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            reports = list(executor.map(run, cases))

    for report in reports:
        if report.verdict == 'inconclusive':
            logger.warning(
                f'Suite case {report.clause} {report.params.index} c={report.params.c} '
                f'was inconclusive: {report.error}'
            )
    return reports
