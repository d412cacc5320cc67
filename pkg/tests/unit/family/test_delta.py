import numpy as np
import pytest

from cmkit.exceptions import DomainError, ParameterInvalidError, UnsupportedOrderError
from cmkit.family import delta_psi, delta_table
from cmkit.polygamma import EngineConfig, digamma, polygamma


@pytest.mark.parametrize('x, c', [(0.1, 0.5), (1.0, 1.0), (7.0, 0.01), (3.0, 0.0)])
def test_minus_one_entry_is_constant(x, c):
    """Test the j = -1 entry is -1 for every x and c."""
    assert delta_psi(-1, x, c) == -1.0


def test_unit_step_of_digamma():
    assert delta_psi(0, 1.0, 1.0) == pytest.approx(1.0, rel=1e-14)


def test_zero_step_is_the_next_polygamma():
    """Test c = 0 gives psi^(j+1)(x)."""
    assert delta_psi(0, 2.0, 0.0) == polygamma(1, 2.0)
    assert delta_psi(3, 2.0, 0.0) == polygamma(4, 2.0)


@pytest.mark.parametrize('x, c', [(0.2, 0.3), (1.0, 2.0), (5.0, 0.5), (40.0, 0.2)])
def test_mean_value_bracket(x, c):
    """Delta psi'(x; c) equals psi''(xi) for some xi in (x, x+c), and psi'' is increasing."""
    value = delta_psi(1, x, c)
    lower, upper = polygamma(2, x), polygamma(2, x + c)
    slack = 1e-12 * abs(lower)
    assert lower - slack <= value <= upper + slack


def test_direct_difference():
    x, c = 0.7, 1.3
    assert delta_psi(0, x, c) == pytest.approx((digamma(x + c) - digamma(x)) / c, rel=1e-14)


@pytest.mark.parametrize('j', [0, 1, 4])
def test_series_branch_matches_direct_quotient(j):
    """Test the series branch against the direct difference quotient."""
    x, c = 50.0, 0.4
    if j == 0:
        direct = (digamma(x + c) - digamma(x)) / c
    else:
        direct = (polygamma(j, x + c) - polygamma(j, x)) / c
    assert delta_psi(j, x, c) == pytest.approx(direct, rel=1e-10)


@pytest.mark.parametrize('j', [0, 2, 5])
def test_continuity_at_zero_step(j):
    """Test Delta psi is continuous as c -> 0+."""
    x = 1.5
    limit = delta_psi(j, x, 0.0)
    gaps = [abs(delta_psi(j, x, c) - limit) for c in (1e-3, 1e-6, 1e-8)]
    assert gaps[2] <= 1e-6 * abs(limit)
    assert gaps[0] > gaps[1] > gaps[2]


def test_table_derivatives_shift_the_order():
    table = delta_table(6, 2.0, 0.5)
    assert table.j_max == 6
    assert table.derivative(-1, 0) == -1.0
    assert table.derivative(-1, 3) == 0.0
    assert table.derivative(2, 3) == table.value(5)
    np.testing.assert_allclose(
        [table.value(j) for j in range(4)], [delta_psi(j, 2.0, 0.5) for j in range(4)]
    )


def test_errors():
    with pytest.raises(DomainError):
        delta_psi(0, 0.0, 1.0)
    with pytest.raises(DomainError):
        delta_psi(0, 1.0, -0.5)
    with pytest.raises(ParameterInvalidError):
        delta_psi(-2, 1.0, 1.0)
    with pytest.raises(UnsupportedOrderError):
        delta_table(4, 1.0, 0.0, EngineConfig(max_order=4))
