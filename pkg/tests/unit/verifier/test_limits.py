import pytest

from cmkit.exceptions import InvalidIndexError, LimitDivergenceError, ParameterInvalidError
from cmkit.family import FamilyIndex
from cmkit.verifier import limit_check


def test_infinity_limit_of_the_base_index(index_3221):
    """Test the x -> inf table of (3,2,2,1) at c = 0.5."""
    table = limit_check(index_3221, 0.5, 'infinity')
    assert table.target == 0.5
    assert [row.x for row in table.rows] == [1e1, 1e2, 1e3, 1e4]
    assert table.within_tolerance
    assert table.final_gap <= 5e-4 * 0.5


def test_infinity_limit_of_the_simplest_index(index_2110):
    assert limit_check(index_2110, 0.5, 'infinity').within_tolerance


@pytest.mark.parametrize(
    'quad, c, target',
    [((2, 1, 1, 0), 2.0, 0.5), ((2, 1, 1, 0), 0.5, 2.0), ((3, 2, 1, 0), 2.0, 0.25)],
)
def test_zero_limit(quad, c, target):
    """Test the x -> 0+ tables approach alpha/c."""
    table = limit_check(FamilyIndex.of(*quad), c, 'zero')
    assert table.target == pytest.approx(target)
    assert len(table.rows) == 5
    assert table.final_gap <= 1e-3 * target


def test_unit_step_sits_on_its_limit(index_2110):
    """At c = 1 both products are pure powers and the ratio is alpha at every x."""
    table = limit_check(index_2110, 1.0, 'zero')
    assert all(row.gap <= 1e-12 for row in table.rows)


def test_zero_limit_needs_q_zero_and_positive_step(index_3221, index_2110):
    """Test the x -> 0+ table needs q = 0 and c > 0."""
    with pytest.raises(InvalidIndexError):
        limit_check(index_3221, 0.5, 'zero')
    with pytest.raises(ParameterInvalidError):
        limit_check(index_2110, 0.0, 'zero')
    with pytest.raises(ParameterInvalidError):
        limit_check(index_2110, 0.5, 'sideways')


def test_final_gap_above_tolerance_raises(index_3221):
    """Test that a table converging too slowly for its tolerance is rejected."""
    with pytest.raises(LimitDivergenceError) as exc_info:
        limit_check(index_3221, 0.5, 'infinity', tolerance=1e-12)
    assert exc_info.value.tolerance == pytest.approx(0.5e-12)
    assert exc_info.value.gaps[-1] > 0.5e-12
    assert 'stalls short of its infinity limit' in exc_info.value.message
    with pytest.raises(ParameterInvalidError):
        limit_check(index_3221, 0.5, 'infinity', tolerance=0.0)


@pytest.mark.parametrize('quad', [(3, 2, 1, 0), (4, 3, 2, 1), (5, 3, 3, 1), (6, 4, 3, 1)])
def test_default_tolerance_holds_for_larger_indices(quad):
    table = limit_check(FamilyIndex.of(*quad), 0.5, 'infinity')
    assert table.final_gap <= table.tolerance * table.target
