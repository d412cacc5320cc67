from .check import check_cm
from .limits import limit_check
from .models import (
    DEFAULT_GRID,
    CMCell,
    CMReport,
    GridSpec,
    LimitRow,
    LimitTable,
    SharpnessResult,
)
from .sharpness import sharpness_probe, sharpness_threshold
from .suite import SuiteCase, oracle_agreement, suite_cases, theorem_suite

__all__ = [
    'DEFAULT_GRID',
    'CMCell',
    'CMReport',
    'GridSpec',
    'LimitRow',
    'LimitTable',
    'SharpnessResult',
    'SuiteCase',
    'check_cm',
    'limit_check',
    'oracle_agreement',
    'sharpness_probe',
    'sharpness_threshold',
    'suite_cases',
    'theorem_suite',
]
