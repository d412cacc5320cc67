from .functions import (
    a_poly,
    beta_clause_kernel,
    f_aux,
    h,
    h_ratio_gap,
    log_superadditivity_gap,
    r,
    r_log_derivative,
    u,
    v,
    x_over_expm1,
    z,
)
from .laplace import (
    IdentityResidual,
    KernelSample,
    beta_identity_residuals,
    beta_integral,
    g_kernel,
    g_kernel_recast,
    g_kernel_zero,
    g_sign_table,
    kernel_sample,
    laplace_oracle_F,
    zero_integral_residuals,
)
from .roots import KernelRootResult, KernelSignSplit, find_root, kernel_sign_split

__all__ = [
    'IdentityResidual',
    'KernelRootResult',
    'KernelSample',
    'KernelSignSplit',
    'a_poly',
    'beta_clause_kernel',
    'beta_identity_residuals',
    'beta_integral',
    'f_aux',
    'find_root',
    'g_kernel',
    'g_kernel_recast',
    'g_kernel_zero',
    'g_sign_table',
    'h',
    'h_ratio_gap',
    'kernel_sample',
    'kernel_sign_split',
    'laplace_oracle_F',
    'log_superadditivity_gap',
    'r',
    'r_log_derivative',
    'u',
    'v',
    'x_over_expm1',
    'z',
]
