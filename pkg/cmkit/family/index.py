import math
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from cmkit.exceptions import DomainError, InvalidIndexError

ThresholdKind = Literal['alpha', 'beta', 'alpha_over_c']


class FamilyIndex(BaseModel):
    """Integer quadruple (p, m, n, q) with p > m >= n > q >= 0 and m + n = p + q."""

    model_config = ConfigDict(frozen=True)

    p: int
    m: int
    n: int
    q: int

    @model_validator(mode='after')
    def _check_relations(self) -> 'FamilyIndex':
        if not (self.p > self.m >= self.n > self.q >= 0):
            raise InvalidIndexError(self.as_tuple(), 'p>m≥n>q≥0')
        if self.m + self.n != self.p + self.q:
            raise InvalidIndexError(self.as_tuple(), 'm+n=p+q')
        return self

    @classmethod
    def of(cls, p: int, m: int, n: int, q: int) -> 'FamilyIndex':
        return cls(p=p, m=m, n=n, q=q)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.m, self.n, self.q)

    def __str__(self) -> str:
        return '({},{},{},{})'.format(*self.as_tuple())


class FamilyParams(BaseModel):
    """One member F(x; s; c) of the family; c = 0 selects the derivative family."""

    model_config = ConfigDict(frozen=True)

    index: FamilyIndex
    s: float
    c: float

    @field_validator('s')
    @classmethod
    def _finite_s(cls, value: float) -> float:
        if not math.isfinite(value):
            raise DomainError('s', value, 'Expected a finite real number.')
        return value

    @field_validator('c')
    @classmethod
    def _non_negative_c(cls, value: float) -> float:
        if not math.isfinite(value) or value < 0.0:
            raise DomainError('c', value, 'Expected a finite real number c >= 0.')
        return value

    def with_s(self, s: float) -> 'FamilyParams':
        return FamilyParams(index=self.index, s=s, c=self.c)


def alpha(index: FamilyIndex) -> Fraction:
    """(m-1)!(n-1)!/((p-1)!(q-1)!), with (q-1)! dropped when q = 0."""
    numerator = math.factorial(index.m - 1) * math.factorial(index.n - 1)
    denominator = math.factorial(index.p - 1)
    if index.q >= 1:
        denominator *= math.factorial(index.q - 1)
    return Fraction(numerator, denominator)


def beta(index: FamilyIndex) -> Fraction:
    """m!n!/(p!q!), defined for q >= 1."""
    if index.q < 1:
        raise InvalidIndexError(index.as_tuple(), 'q≥1 (beta needs q≥1)')
    return Fraction(
        math.factorial(index.m) * math.factorial(index.n),
        math.factorial(index.p) * math.factorial(index.q),
    )


def threshold(index: FamilyIndex, kind: ThresholdKind, c: float | None = None) -> float:
    """Floating value of alpha, beta or alpha/c at a use site."""
    if kind == 'alpha':
        return float(alpha(index))
    if kind == 'beta':
        return float(beta(index))
    if index.q != 0:
        raise InvalidIndexError(index.as_tuple(), 'q=0 (alpha/c needs q=0)')
    if c is None or not math.isfinite(c) or c <= 0.0:
        raise DomainError('c', c, 'alpha/c needs a finite step c > 0.')
    return float(alpha(index)) / c


def enumerate_indices(max_p: int) -> list[FamilyIndex]:
    """All valid indices with p <= max_p in lexicographic (p, m, n, q) order."""
    indices = []
    for p in range(2, max_p + 1):
        for m in range(1, p):
            for n in range(1, m + 1):
                q = m + n - p
                if 0 <= q < n:
                    indices.append(FamilyIndex.of(p, m, n, q))
    return indices
