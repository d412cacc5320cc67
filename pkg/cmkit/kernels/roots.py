import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from cmkit.exceptions import BracketError, InvalidIndexError
from cmkit.family.index import FamilyIndex, alpha
from cmkit.utils.logger import get_logger

from .functions import a_values, check_exponents, check_level

logger = get_logger('kernels')

ROOT_XTOL = 1e-12
CERTIFICATE_FACTOR = 1e-10
MAX_DOUBLINGS = 1000
MAX_BISECTIONS = 200


class KernelRootResult(BaseModel):
    """The unique root t0 >= 1 of a(t; mm, nn, cc) with its certificate."""

    model_config = ConfigDict(frozen=True)

    mm: int
    nn: int
    cc: float
    t0: float = Field(ge=1.0)
    bracket: tuple[float, float]
    residual: float
    s0: float
    iterations: int

    @model_validator(mode='after')
    def _t0_in_bracket(self) -> 'KernelRootResult':
        lo, hi = self.bracket
        if not lo <= self.t0 <= hi:
            raise ValueError(f't0={self.t0} lies outside its bracket {self.bracket}')
        return self

    @property
    def certified(self) -> bool:
        return abs(self.residual) <= CERTIFICATE_FACTOR * (1.0 + abs(2.0 - 2.0 * self.cc))


def _a(t: float, mm: int, nn: int, cc: float) -> float:
    return float(a_values(t, mm, nn, cc))


def find_root(mm: int, nn: int, cc: float) -> KernelRootResult:
    """Locate the single sign change of a(t) = t^{mm-nn} + t^nn - cc(1 + t^mm) on [1, inf).

    a(1) = 2 - 2cc > 0 and a(t) -> -inf, so doubling T from 2 brackets the root,
    and bisection then shrinks the bracket to ``ROOT_XTOL`` or to adjacent floats.

    Raises:
        ParameterInvalidError: If mm > nn >= 1 does not hold.
        DomainError: If cc is not in (0, 1).
        BracketError: If no sign change is found before T overflows.
    """
    mm, nn = check_exponents(mm, nn)
    cc = check_level(cc)
    a_one = _a(1.0, mm, nn, cc)

    lo, hi = 1.0, 2.0
    for _ in range(MAX_DOUBLINGS):
        value = _a(hi, mm, nn, cc)
        if not math.isfinite(value):
            raise BracketError(1.0, hi)
        if value <= 0.0:
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise BracketError(1.0, hi)
    logger.debug(f'a(t; {mm}, {nn}, {cc}) bracketed in [{lo}, {hi}]')

    iterations = 0
    while hi - lo > ROOT_XTOL and iterations < MAX_BISECTIONS:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _a(mid, mm, nn, cc) > 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1

    a_lo, a_hi = _a(lo, mm, nn, cc), _a(hi, mm, nn, cc)
    t0, residual = (lo, a_lo) if abs(a_lo) <= abs(a_hi) else (hi, a_hi)
    result = KernelRootResult(
        mm=mm,
        nn=nn,
        cc=cc,
        t0=t0,
        bracket=(lo, hi),
        residual=residual,
        s0=(t0 - 1.0) / (t0 + 1.0),
        iterations=iterations,
    )
    if abs(residual) > CERTIFICATE_FACTOR * (1.0 + abs(a_one)):
        logger.warning(
            f'Root of a(t; {mm}, {nn}, {cc}) at t0={t0} has residual {residual:.3e} '
            'above the certificate bound'
        )
    return result


class KernelSignSplit(BaseModel):
    """Sign pattern of a((1+s)/(1-s); p-q, n-q, alpha) around its root s0."""

    model_config = ConfigDict(frozen=True)

    index: FamilyIndex
    root: KernelRootResult
    points: int
    nonnegative_below: bool
    nonpositive_above: bool

    @property
    def s0(self) -> float:
        return self.root.s0

    @property
    def holds(self) -> bool:
        return self.nonnegative_below and self.nonpositive_above


def kernel_sign_split(index: FamilyIndex, points: int = 2000) -> KernelSignSplit:
    """Check that the polynomial part of the recast kernel changes sign once, at s0.

    Only indices with q >= 1 carry this polynomial part.
    """
    if index.q < 1:
        raise InvalidIndexError(index.as_tuple(), 'q≥1 (the recast kernel needs q≥1)')
    mm, nn = index.p - index.q, index.n - index.q
    cc = float(alpha(index))
    root = find_root(mm, nn, cc)

    s_grid = np.linspace(0.0, 1.0, points + 2)[1:-1]
    t_grid = (1.0 + s_grid) / (1.0 - s_grid)
    values = a_values(t_grid, mm, nn, cc)
    with np.errstate(over='ignore'):
        magnitude = t_grid ** (mm - nn) + t_grid**nn + cc * (1.0 + t_grid**mm)
    slack = 1e-12 * magnitude
    below = s_grid <= root.s0
    split = KernelSignSplit(
        index=index,
        root=root,
        points=points,
        nonnegative_below=bool(np.all(values[below] >= -slack[below])),
        nonpositive_above=bool(np.all(values[~below] <= slack[~below])),
    )
    logger.debug(f'Kernel sign split for {index}: s0={root.s0:.12g}, holds={split.holds}')
    return split
