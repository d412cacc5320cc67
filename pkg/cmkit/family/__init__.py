from .delta import DeltaTable, delta_psi, delta_table
from .evaluate import (
    LeibnizTerms,
    derivative_profile,
    f_derivative,
    f_eval,
    leibniz_terms,
    ratio_infinity,
    ratio_zero,
)
from .index import (
    FamilyIndex,
    FamilyParams,
    ThresholdKind,
    alpha,
    beta,
    enumerate_indices,
    threshold,
)

__all__ = [
    'DeltaTable',
    'FamilyIndex',
    'FamilyParams',
    'LeibnizTerms',
    'ThresholdKind',
    'alpha',
    'beta',
    'delta_psi',
    'delta_table',
    'derivative_profile',
    'enumerate_indices',
    'f_derivative',
    'f_eval',
    'leibniz_terms',
    'ratio_infinity',
    'ratio_zero',
    'threshold',
]
