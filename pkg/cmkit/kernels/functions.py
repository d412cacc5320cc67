"""Elementary kernels behind the Laplace representation of F.

Every function accepts a float or a numpy array for its continuous arguments
and returns the same shape. Removable singularities at zero are handled by
short Taylor expansions; elsewhere the formulas are written with ``expm1`` so
that no cancellation occurs for small arguments.
"""

import math
import operator

import numpy as np

from cmkit.exceptions import DomainError, EvaluationOverflowError, ParameterInvalidError

ArrayLike = float | np.ndarray

_SMALL_ARGUMENT = 1e-6
_V_SERIES_LIMIT = 1e-3
_F_AUX_SERIES_LIMIT = 1.0
_F_AUX_SERIES_TERMS = 30


def _checked(
    name: str, value: ArrayLike, *, lower: float = 0.0, inclusive: bool = False
) -> np.ndarray:
    array = np.asarray(value, dtype=float)
    above = array >= lower if inclusive else array > lower
    if not np.all(np.isfinite(array) & above):
        bound = f'>= {lower:g}' if inclusive else f'> {lower:g}'
        raise DomainError(name, value, f'Expected finite values {bound}.')
    return array


def _unwrap(values: np.ndarray) -> ArrayLike:
    return values.item() if np.ndim(values) == 0 else values


# unchecked array forms, shared with the quadrature kernels


def h_values(c: float, s: np.ndarray) -> np.ndarray:
    """h_c(s) for s >= 0 with h_c(0) = c."""
    s = np.asarray(s, dtype=float)
    with np.errstate(divide='ignore', invalid='ignore'):
        direct = np.expm1(-c * s) / np.expm1(-s)
    series = c * (1.0 + 0.5 * (1.0 - c) * s + (1.0 - c) * (1.0 - 2.0 * c) * s * s / 12.0)
    return np.where(s < _SMALL_ARGUMENT, series, direct)


def u_values(s: np.ndarray, a: float, c: float) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    return h_values(c, a * (1.0 - s)) * h_values(c, a * (1.0 + s))


def x_over_expm1_values(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        direct = x / np.expm1(x)
    series = 1.0 - 0.5 * x + x * x / 12.0
    return np.where(x < _SMALL_ARGUMENT, series, direct)


def a_values(t: np.ndarray, mm: int, nn: int, cc: float) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    with np.errstate(over='ignore', invalid='ignore'):
        values = t ** (mm - nn) + t**nn - cc * (1.0 + t**mm)
    return values


# public operations


def h(c: ArrayLike, s: ArrayLike) -> ArrayLike:
    """(1 - e^{-cs}) / (1 - e^{-s}), extended by h_c(0+) = c."""
    return _unwrap(h_values(_checked('c', c), _checked('s', s)))


def v(c: ArrayLike, x: ArrayLike) -> ArrayLike:
    """1/(e^x - 1) - c/(e^{cx} - 1), extended by v_c(0+) = (c - 1)/2."""
    c_arr = _checked('c', c)
    x_arr = _checked('x', x)
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        direct = 1.0 / np.expm1(x_arr) - c_arr / np.expm1(c_arr * x_arr)
    # the 1/x poles cancel; keep the series until both arguments are sizeable
    series = (
        0.5 * (c_arr - 1.0)
        + (1.0 - c_arr**2) * x_arr / 12.0
        - (1.0 - c_arr**4) * x_arr**3 / 720.0
    )
    small = x_arr * np.maximum(1.0, c_arr) < _V_SERIES_LIMIT
    return _unwrap(np.where(small, series, direct))


def z(x: ArrayLike, c: ArrayLike) -> ArrayLike:
    """c^2 e^{cx} / (e^{cx} - 1)^2, written in decaying exponentials."""
    x_arr = _checked('x', x)
    c_arr = _checked('c', c)
    y = c_arr * x_arr
    with np.errstate(over='ignore', under='ignore'):
        values = c_arr**2 * np.exp(-y) / np.expm1(-y) ** 2
    return _unwrap(values)


def f_aux(t: ArrayLike) -> ArrayLike:
    """(2 - t)e^t - (2 + t); saturates at -inf once e^t overflows."""
    t_arr = _checked('t', t, inclusive=True)
    # (2 - t)e^t - (2 + t) = -sum_{k>=3} (k - 2) t^k / k!
    series = np.zeros_like(t_arr)
    power = np.ones_like(t_arr)
    with np.errstate(over='ignore', invalid='ignore'):
        for k in range(1, _F_AUX_SERIES_TERMS + 1):
            power = power * t_arr / k
            if k >= 3:
                series -= (k - 2) * power
        direct = (2.0 - t_arr) * np.exp(t_arr) - (2.0 + t_arr)
    direct = np.where(np.isnan(direct), -np.inf, direct)
    return _unwrap(np.where(t_arr < _F_AUX_SERIES_LIMIT, series, direct))


def u(s: ArrayLike, a: ArrayLike, c: ArrayLike) -> ArrayLike:
    """h_c(a(1 - s)) * h_c(a(1 + s)) for 0 < s < 1."""
    s_arr = _checked('s', s)
    if np.any(s_arr >= 1.0):
        raise DomainError('s', s, 'Expected 0 < s < 1.')
    a_val = _checked('a', a)
    c_val = _checked('c', c)
    return _unwrap(h_values(c_val, a_val * (1.0 - s_arr)) * h_values(c_val, a_val * (1.0 + s_arr)))


def check_exponents(mm: int, nn: int) -> tuple[int, int]:
    try:
        mm, nn = operator.index(mm), operator.index(nn)
    except TypeError:
        raise ParameterInvalidError('mm, nn', (mm, nn), 'Expected integers.')
    if not mm > nn >= 1:
        raise ParameterInvalidError('mm, nn', (mm, nn), 'Expected mm > nn >= 1.')
    return mm, nn


def check_level(cc: float) -> float:
    if not (math.isfinite(cc) and 0.0 < cc < 1.0):
        raise DomainError('cc', cc, 'Expected 0 < cc < 1.')
    return float(cc)


def a_poly(t: ArrayLike, mm: int, nn: int, cc: float) -> ArrayLike:
    """t^{mm-nn} + t^{nn} - cc(1 + t^{mm}) for t >= 1."""
    mm, nn = check_exponents(mm, nn)
    cc = check_level(cc)
    t_arr = _checked('t', t, lower=1.0, inclusive=True)
    values = a_values(t_arr, mm, nn, cc)
    if not np.all(np.isfinite(values)):
        raise EvaluationOverflowError(f'a(t; {mm}, {nn}, {cc})', 't^mm exceeds binary64 range')
    return _unwrap(values)


def x_over_expm1(x: ArrayLike) -> ArrayLike:
    """x / (e^x - 1), equal to 1 at x = 0 and decreasing."""
    return _unwrap(x_over_expm1_values(_checked('x', x, inclusive=True)))


def r(s: ArrayLike, t: ArrayLike, c: ArrayLike) -> ArrayLike:
    """(1 - e^{-cs})(1 - e^{-c(t-s)}) / (1 - e^{-ct}) for t > s > 0."""
    s_arr = _checked('s', s)
    t_arr = _checked('t', t)
    c_arr = _checked('c', c)
    if np.any(t_arr <= s_arr):
        raise DomainError('t', t, 'Expected t > s.')
    values = -np.expm1(-c_arr * s_arr) * np.expm1(-c_arr * (t_arr - s_arr)) / np.expm1(
        -c_arr * t_arr
    )
    return _unwrap(values)


def r_log_derivative(s: ArrayLike, t: ArrayLike, c: ArrayLike) -> ArrayLike:
    """c * (d/dc) ln r_{s,t}(c); positive because x/(e^x - 1) decreases."""
    s_arr = _checked('s', s)
    t_arr = _checked('t', t)
    c_arr = _checked('c', c)
    if np.any(t_arr <= s_arr):
        raise DomainError('t', t, 'Expected t > s.')
    values = (
        x_over_expm1_values(c_arr * s_arr)
        + x_over_expm1_values(c_arr * (t_arr - s_arr))
        - x_over_expm1_values(c_arr * t_arr)
    )
    return _unwrap(values)


def beta_clause_kernel(s: ArrayLike, a: ArrayLike, c: ArrayLike) -> ArrayLike:
    """a^-2 (1 - s^2)^-1 u(s; a, c), increasing in s for every c > 0."""
    s_arr = _checked('s', s)
    if np.any(s_arr >= 1.0):
        raise DomainError('s', s, 'Expected 0 < s < 1.')
    a_arr = _checked('a', a)
    c_arr = _checked('c', c)
    values = u_values(s_arr, a_arr, c_arr) / (a_arr**2 * (1.0 - s_arr * s_arr))
    return _unwrap(values)


def log_superadditivity_gap(c: ArrayLike, s: ArrayLike, t: ArrayLike) -> ArrayLike:
    """ln h_c(s) + ln h_c(t - s) - ln h_c(t) - ln c.

    Non-negative for 0 < c <= 1 and non-positive for c >= 1.
    """
    c_arr = _checked('c', c)
    s_arr = _checked('s', s)
    t_arr = _checked('t', t)
    if np.any(t_arr <= s_arr):
        raise DomainError('t', t, 'Expected t > s.')
    values = (
        np.log(h_values(c_arr, s_arr))
        + np.log(h_values(c_arr, t_arr - s_arr))
        - np.log(h_values(c_arr, t_arr))
        - np.log(c_arr)
    )
    return _unwrap(values)


def h_ratio_gap(c: ArrayLike, s: ArrayLike, t: ArrayLike) -> ArrayLike:
    """h_c(t - s) - c h_c(t); non-negative for c <= 1 and non-positive for c >= 1."""
    c_arr = _checked('c', c)
    s_arr = _checked('s', s)
    t_arr = _checked('t', t)
    if np.any(t_arr <= s_arr):
        raise DomainError('t', t, 'Expected t > s.')
    return _unwrap(h_values(c_arr, t_arr - s_arr) - c_arr * h_values(c_arr, t_arr))
