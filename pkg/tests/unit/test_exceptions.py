import pytest

from cmkit.exceptions import (
    CMKitError,
    DomainError,
    InvalidIndexError,
    LimitDivergenceError,
    NoWitnessError,
    ParameterInvalidError,
    UnsupportedOrderError,
)


def test_cmkit_error():
    """Test CMKitError raises with correct message."""
    with pytest.raises(CMKitError) as exc_info:
        raise CMKitError('An engine error occurred')
    assert str(exc_info.value) == 'An engine error occurred'


def test_parameter_invalid_error_with_hint():
    """Test ParameterInvalidError with hint."""
    parameter = 'tol'
    value = -1.0
    hint = 'Expected a tolerance >= 0.'
    with pytest.raises(ParameterInvalidError) as exc_info:
        raise ParameterInvalidError(parameter, value, hint)
    assert exc_info.value.parameter == parameter
    assert exc_info.value.value == value
    assert exc_info.value.message == f'Invalid `{parameter}` parameter: {value}. {hint}'


def test_parameter_invalid_error_without_hint():
    """Test ParameterInvalidError without hint."""
    with pytest.raises(ParameterInvalidError) as exc_info:
        raise ParameterInvalidError('tol', -1.0)
    assert exc_info.value.message == 'Invalid `tol` parameter: -1.0.'


def test_domain_error_is_a_parameter_error():
    """Test DomainError keeps the parameter message format."""
    with pytest.raises(ParameterInvalidError) as exc_info:
        raise DomainError('x', 0.0, 'Expected a finite positive real number.')
    assert isinstance(exc_info.value, CMKitError)
    assert exc_info.value.parameter == 'x'


def test_invalid_index_error_names_the_relation():
    """Test InvalidIndexError names the violated relation."""
    with pytest.raises(InvalidIndexError) as exc_info:
        raise InvalidIndexError((4, 3, 2, 0), 'm+n=p+q')
    assert exc_info.value.index == (4, 3, 2, 0)
    assert exc_info.value.message == 'Invalid family index (4, 3, 2, 0): violates m+n=p+q.'


def test_unsupported_order_error():
    """Test UnsupportedOrderError for an order above the engine maximum."""
    error = UnsupportedOrderError(70, 64)
    assert error.order == 70
    assert error.maximum == 64
    assert '70' in str(error) and '64' in str(error)


def test_no_witness_error_reports_range():
    """Test NoWitnessError reports the searched range."""
    error = NoWitnessError((1.0, 1e6))
    assert error.searched_range == (1.0, 1e6)
    assert '[1, 1e+06]' in error.message


def test_limit_divergence_error_lists_gaps():
    """Test LimitDivergenceError lists every gap."""
    error = LimitDivergenceError('infinity', [1e-2, 2e-2])
    assert error.gaps == [1e-2, 2e-2]
    assert '1.000e-02, 2.000e-02' in error.message


def test_limit_divergence_error_with_tolerance():
    """Test LimitDivergenceError names the tolerance a stalled table missed."""
    error = LimitDivergenceError('zero', [3e-2, 2e-2], tolerance=1e-3)
    assert error.tolerance == 1e-3
    assert error.message.startswith('Ratio stalls short of its zero limit: final gap 2.000e-02')
    assert 'exceeds 1.000e-03' in error.message
