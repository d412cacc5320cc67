from fractions import Fraction
from functools import cache
from math import comb

from cmkit.config import MAX_ASYMPTOTIC_TERMS


@cache
def bernoulli_numbers(count: int) -> tuple[Fraction, ...]:
    """Exact B_0 .. B_{count-1} from the recurrence sum_k C(m+1, k) B_k = 0."""
    numbers: list[Fraction] = [Fraction(1)]
    for m in range(1, count):
        total = sum(
            (comb(m + 1, k) * numbers[k] for k in range(m)), start=Fraction(0)
        )
        numbers.append(-total / (m + 1))
    return tuple(numbers)


@cache
def even_bernoulli_table(terms: int = MAX_ASYMPTOTIC_TERMS) -> tuple[float, ...]:
    """B_2, B_4, ..., B_{2*terms} rounded once to binary64."""
    numbers = bernoulli_numbers(2 * terms + 1)
    return tuple(float(numbers[2 * k]) for k in range(1, terms + 1))
