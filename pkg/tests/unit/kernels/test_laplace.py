import numpy as np
import pytest

from cmkit.exceptions import DomainError, InvalidIndexError
from cmkit.family import FamilyIndex, FamilyParams, alpha, beta, enumerate_indices, f_eval
from cmkit.kernels import (
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

T_GRID = np.geomspace(0.01, 50.0, 40)


def signs(params):
    return [(sample.value, sample.scale) for sample in g_sign_table(params, T_GRID)]


def test_kernel_nonnegative_at_alpha_below_unit_step(index_3221):
    params = FamilyParams(index=index_3221, s=0.5, c=0.5)
    assert all(value >= -1e-10 * scale for value, scale in signs(params))


def test_kernel_nonpositive_at_alpha_above_unit_step(index_3221):
    params = FamilyParams(index=index_3221, s=0.5, c=2.0)
    assert all(value <= 1e-10 * scale for value, scale in signs(params))


@pytest.mark.parametrize('c', [0.25, 1.0, 3.0])
def test_kernel_nonpositive_at_beta(index_3221, c):
    params = FamilyParams(index=index_3221, s=float(beta(index_3221)), c=c)
    assert all(value <= 1e-10 * scale for value, scale in signs(params))


@pytest.mark.parametrize('quad', [(3, 2, 2, 1), (4, 3, 2, 1), (5, 3, 3, 1), (6, 4, 4, 2)])
@pytest.mark.parametrize('c', [0.5, 2.0])
def test_recast_kernel_equals_convolution(quad, c):
    index = FamilyIndex.of(*quad)
    for s in (float(alpha(index)), float(beta(index))):
        params = FamilyParams(index=index, s=s, c=c)
        for t in (0.1, 1.0, 7.0):
            sample = kernel_sample(params, t)
            assert g_kernel(index, s, c, t) == sample.value
            recast = g_kernel_recast(index, s, c, t)
            assert recast == pytest.approx(sample.value, abs=1e-8 * sample.scale)


@pytest.mark.parametrize('x', [1.0, 5.0])
def test_oracle_matches_closed_form(params_at_alpha, x):
    expected = f_eval(params_at_alpha, x)
    oracle = laplace_oracle_F(params_at_alpha, x)
    assert abs(oracle - expected) <= 1e-6 * abs(expected) + 1e-12


def test_oracle_matches_closed_form_for_q_zero(index_2110):
    params = FamilyParams(index=index_2110, s=1.0, c=0.5)
    expected = f_eval(params, 2.0)
    assert abs(laplace_oracle_F(params, 2.0) - expected) <= 1e-6 * abs(expected) + 1e-12


def test_oracle_without_second_product(index_3221):
    params = FamilyParams(index=index_3221, s=0.0, c=0.5)
    expected = f_eval(params, 1.0)
    assert abs(laplace_oracle_F(params, 1.0) - expected) <= 1e-6 * abs(expected) + 1e-12


def test_kernel_variants_check_q(index_3221, index_2110):
    with pytest.raises(InvalidIndexError):
        g_kernel(index_2110, 1.0, 0.5, 1.0)
    with pytest.raises(InvalidIndexError):
        g_kernel_recast(index_2110, 1.0, 0.5, 1.0)
    with pytest.raises(InvalidIndexError):
        g_kernel_zero(index_3221, 0.5, 0.5, 1.0)
    sample = kernel_sample(FamilyParams(index=index_2110, s=1.0, c=0.5), 2.0)
    assert g_kernel_zero(index_2110, 1.0, 0.5, 2.0) == sample.value


def test_kernel_domain_checks(index_3221):
    with pytest.raises(DomainError):
        g_kernel(index_3221, 0.5, 0.0, 1.0)
    with pytest.raises(DomainError):
        g_kernel(index_3221, 0.5, 0.5, -1.0)
    with pytest.raises(DomainError):
        laplace_oracle_F(FamilyParams(index=index_3221, s=0.5, c=0.0), 1.0)


def test_beta_identity():
    residuals = beta_identity_residuals(6)
    assert len(residuals) == 36
    assert max(row.residual for row in residuals) <= 1e-10
    assert beta_integral(2.0, 3.0) == pytest.approx(1.0 / 12.0, rel=1e-12)
    with pytest.raises(DomainError):
        beta_integral(0.5, 1.0)


def test_zero_integral_identity():
    residuals = zero_integral_residuals(6)
    assert [row.label for row in residuals] == [str(index) for index in enumerate_indices(6)]
    assert max(row.residual for row in residuals) <= 1e-10
