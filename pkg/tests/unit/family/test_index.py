from fractions import Fraction

import pytest
from pydantic import ValidationError

from cmkit.exceptions import DomainError, InvalidIndexError
from cmkit.family import (
    FamilyIndex,
    FamilyParams,
    alpha,
    beta,
    enumerate_indices,
    threshold,
)


def test_alpha_and_beta_of_the_base_index():
    """Test alpha and beta of (3,2,2,1)."""
    index = FamilyIndex.of(3, 2, 2, 1)
    assert alpha(index) == Fraction(1, 2)
    assert beta(index) == Fraction(2, 3)


def test_known_constants():
    assert alpha(FamilyIndex.of(2, 1, 1, 0)) == 1
    assert beta(FamilyIndex.of(4, 3, 2, 1)) == Fraction(1, 2)
    assert alpha(FamilyIndex.of(3, 2, 1, 0)) == Fraction(1, 2)


@pytest.mark.parametrize('n', range(2, 7))
def test_alpha_of_diagonal_indices(n):
    assert alpha(FamilyIndex.of(n + 1, n, n, n - 1)) == Fraction(n - 1, n)


def test_enumeration_is_lexicographic():
    """Test enumerate_indices order for p <= 4."""
    indices = [index.as_tuple() for index in enumerate_indices(4)]
    assert indices == [
        (2, 1, 1, 0),
        (3, 2, 1, 0),
        (3, 2, 2, 1),
        (4, 2, 2, 0),
        (4, 3, 1, 0),
        (4, 3, 2, 1),
        (4, 3, 3, 2),
    ]


def test_constant_ranges_up_to_eight():
    """Test the ranges of alpha and beta for every index with p <= 8."""
    for index in enumerate_indices(8):
        a = alpha(index)
        # (2,1,1,0) is the one index whose alpha reaches 1
        if index.as_tuple() == (2, 1, 1, 0):
            assert a == 1
        else:
            assert 0 < a < 1
        if index.q >= 1:
            assert a < beta(index) < 1


@pytest.mark.parametrize(
    'quad, violated',
    [
        ((3, 3, 2, 2), 'p>m≥n>q≥0'),
        ((3, 1, 2, 0), 'p>m≥n>q≥0'),
        ((3, 2, 2, 2), 'p>m≥n>q≥0'),
        ((4, 3, 2, 0), 'm+n=p+q'),
    ],
)
def test_invalid_indices(quad, violated):
    """Test FamilyIndex rejects every violated relation."""
    with pytest.raises(InvalidIndexError) as exc_info:
        FamilyIndex.of(*quad)
    assert exc_info.value.violated == violated
    assert exc_info.value.index == quad


def test_index_is_frozen_and_printable():
    index = FamilyIndex.of(4, 3, 2, 1)
    assert str(index) == '(4,3,2,1)'
    with pytest.raises(ValidationError):
        index.p = 5


def test_beta_needs_q_at_least_one():
    with pytest.raises(InvalidIndexError):
        beta(FamilyIndex.of(2, 1, 1, 0))


def test_threshold_kinds():
    base = FamilyIndex.of(3, 2, 2, 1)
    zero = FamilyIndex.of(2, 1, 1, 0)
    assert threshold(base, 'alpha') == 0.5
    assert threshold(base, 'beta') == pytest.approx(2.0 / 3.0)
    assert threshold(zero, 'alpha_over_c', 0.5) == 2.0
    with pytest.raises(InvalidIndexError):
        threshold(base, 'alpha_over_c', 0.5)
    with pytest.raises(DomainError):
        threshold(zero, 'alpha_over_c', 0.0)


def test_params_validation():
    """Test FamilyParams rejects non-finite levels and negative steps."""
    index = FamilyIndex.of(3, 2, 2, 1)
    params = FamilyParams(index=index, s=0.5, c=0.0)
    assert params.with_s(0.25).s == 0.25
    assert params.with_s(0.25).c == 0.0
    with pytest.raises(DomainError):
        FamilyParams(index=index, s=0.5, c=-1.0)
    with pytest.raises(DomainError):
        FamilyParams(index=index, s=float('inf'), c=1.0)
