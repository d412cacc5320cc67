import pytest

from cmkit.exceptions import DomainError, ParameterInvalidError
from cmkit.family import FamilyIndex, FamilyParams
import cmkit.verifier.suite as suite_module
from cmkit.verifier import GridSpec, oracle_agreement, suite_cases, theorem_suite


def test_cases_for_the_simplest_index():
    """Test the clauses enumerated for (2,1,1,0)."""
    cases = suite_cases(2, [0.5, 1.0, 2.0])
    by_c = {}
    for case in cases:
        by_c.setdefault(case.params.c, []).append(case.clause)
    assert by_c[0.5] == ['alpha_plus', 'scaled_alpha_minus']
    assert by_c[1.0] == ['alpha_plus', 'alpha_minus', 'scaled_alpha_minus', 'scaled_alpha_plus']
    assert by_c[2.0] == ['alpha_minus', 'scaled_alpha_plus']


def test_case_levels_and_orientation():
    base = FamilyIndex.of(3, 2, 2, 1)
    cases = {
        (case.clause, case.params.c): case
        for case in suite_cases(3, [0.5, 2.0])
        if case.params.index == base
    }
    assert set(cases) == {
        ('alpha_plus', 0.5),
        ('beta_minus', 0.5),
        ('alpha_minus', 2.0),
        ('beta_minus', 2.0),
    }
    assert cases[('beta_minus', 2.0)].params.s == pytest.approx(2.0 / 3.0)
    assert cases[('alpha_minus', 2.0)].sign == 'minus'


def test_zero_step_keeps_only_unscaled_clauses():
    """Test c = 0 keeps only the alpha and beta clauses."""
    clauses = {case.clause for case in suite_cases(4, [0.0])}
    assert clauses == {'alpha_plus', 'beta_minus'}


def test_s_scale_multiplies_every_level():
    plain = suite_cases(3, [0.5])
    scaled = suite_cases(3, [0.5], s_scale=1.05)
    for a, b in zip(plain, scaled):
        assert b.params.s == pytest.approx(1.05 * a.params.s)


def test_case_arguments_are_checked():
    """Test suite_cases rejects invalid sizes and steps."""
    with pytest.raises(ParameterInvalidError):
        suite_cases(9, [0.5])
    with pytest.raises(ParameterInvalidError):
        suite_cases(1, [0.5])
    with pytest.raises(DomainError):
        suite_cases(3, [-0.5])


def test_reports_keep_case_order_across_workers():
    """Test threaded suites return reports in case order."""
    grid = GridSpec(x_min=0.1, x_max=10.0, points=5)
    serial = theorem_suite(3, [0.5, 2.0], grid=grid, max_order=4, workers=1)
    threaded = theorem_suite(3, [0.5, 2.0], grid=grid, max_order=4, workers=3)
    assert [r.model_dump() for r in serial] == [r.model_dump() for r in threaded]
    assert [r.clause for r in serial] == [c.clause for c in suite_cases(3, [0.5, 2.0])]
    assert all(report.passed for report in serial)


def test_oracle_agreement_is_small(params_at_alpha):
    assert oracle_agreement(params_at_alpha, spot_points=(2.0,)) <= 1e-6


def test_cross_check_records_agreement():
    """Test cross-checked reports record a small oracle agreement."""
    grid = GridSpec(x_min=0.5, x_max=5.0, points=3)
    reports = theorem_suite(2, [0.5], grid=grid, max_order=2, cross_check=True)
    assert all(report.oracle_agreement is not None for report in reports)
    assert all(report.oracle_agreement <= 1e-6 for report in reports)


def test_zero_step_skips_cross_check():
    """Test c = 0 cases are not cross-checked."""
    grid = GridSpec(x_min=0.5, x_max=5.0, points=3)
    reports = theorem_suite(2, [0.0], grid=grid, max_order=2, cross_check=True)
    assert [report.oracle_agreement for report in reports] == [None]
    assert reports[0].params == FamilyParams(index=FamilyIndex.of(2, 1, 1, 0), s=1.0, c=0.0)


def test_oracle_disagreement_makes_a_passing_case_inconclusive(monkeypatch):
    """Test that a case whose Laplace reconstruction disagrees with F does not pass."""
    monkeypatch.setattr(suite_module, 'laplace_oracle_F', lambda params, x, spec: 1e6)
    grid = GridSpec(x_min=0.5, x_max=5.0, points=3)
    reports = theorem_suite(2, [0.5], grid=grid, max_order=2, cross_check=True)
    assert [report.verdict for report in reports] == ['inconclusive', 'inconclusive']
    for report in reports:
        assert report.oracle_agreement > suite_module.ORACLE_AGREEMENT_TOLERANCE
        assert 'Laplace reconstruction disagrees' in report.error
        assert report.witness is None


def test_disagreement_is_ignored_without_cross_check(monkeypatch):
    monkeypatch.setattr(suite_module, 'laplace_oracle_F', lambda params, x, spec: 1e6)
    grid = GridSpec(x_min=0.5, x_max=5.0, points=3)
    reports = theorem_suite(2, [0.5], grid=grid, max_order=2)
    assert all(report.passed for report in reports)
