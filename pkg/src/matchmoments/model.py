"""Exact distribution of the number of same-sex marriages.

Population: 2n men and 2n women, married off by a uniformly random perfect
matching of all 4n people.  ``X`` is the number of same-sex couples.  With
``k`` man-man couples there are also ``k`` woman-woman couples, so ``X = 2k``
and

    Pr[X = 2k] = C(2n,2k)^2 * (2n-2k)! * ((2k-1)!!)^2 / (4n-1)!!

(choose the 2k men and 2k women in same-sex couples, marry the remaining
2n-2k men to the remaining women, pair up each same-sex group).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .exact import Polynomial


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"population parameter n must be a positive integer, got {n!r}")
    return int(n)


def double_factorial(m: int) -> int:
    """``m!!`` for ``m >= -1`` (with ``(-1)!! = 0!! = 1``)."""
    if m < -1:
        raise ValueError("double factorial undefined below -1")
    out = 1
    for k in range(m, 1, -2):
        out *= k
    return out


def matching_count(m: int) -> int:
    """Number of perfect matchings of ``m`` labelled people, ``m!/((m/2)! 2^(m/2))``."""
    if isinstance(m, bool) or int(m) != m or m < 2 or m % 2:
        raise ValueError(f"matching_count needs a positive even size, got {m!r}")
    m = int(m)
    half = m // 2
    fact = [1] * (m + 1)
    for i in range(1, m + 1):
        fact[i] = fact[i - 1] * i
    return fact[m] // (fact[half] << half)


@dataclass(frozen=True)
class PGFDistribution:
    """Exact law of ``X`` for a given ``n``.

    ``weights[j]`` is the number of perfect matchings with ``X = j``, for
    ``j = 0 .. 2n`` (odd ``j`` always 0); ``total_matchings`` is their sum.
    Probabilities are the weights divided by the total.
    """

    n: int
    weights: tuple[int, ...]
    total_matchings: int

    @cached_property
    def coefficients(self) -> tuple[Fraction, ...]:
        t = self.total_matchings
        return tuple(Fraction(w, t) for w in self.weights)

    def probability(self, j: int) -> Fraction:
        if 0 <= j < len(self.weights):
            return Fraction(self.weights[j], self.total_matchings)
        return Fraction(0)

    def as_polynomial(self) -> Polynomial:
        """``P_n(x) = sum_j Pr[X = j] x^j``."""
        return Polynomial(self.coefficients)

    def support(self) -> dict[int, Fraction]:
        return {j: c for j, c in enumerate(self.coefficients) if c}


def build_pgf(n: int) -> PGFDistribution:
    n = _check_n(n)
    two_n = 2 * n
    fact = [1] * (4 * n + 1)
    for i in range(1, 4 * n + 1):
        fact[i] = fact[i - 1] * i
    # (2k-1)!! = (2k)!/(k! 2^k)
    odd_df = [fact[2 * k] // (fact[k] << k) for k in range(n + 1)]
    weights = [0] * (two_n + 1)
    for k in range(n + 1):
        binom = fact[two_n] // (fact[2 * k] * fact[two_n - 2 * k])
        weights[2 * k] = binom * binom * fact[two_n - 2 * k] * odd_df[k] * odd_df[k]
    total = fact[4 * n] // (fact[two_n] << two_n)
    if sum(weights) != total:  # pragma: no cover - would be a bug in the formula
        raise ArithmeticError(f"weights for n={n} do not sum to the matching count")
    return PGFDistribution(n=n, weights=tuple(weights), total_matchings=total)


def mean_formula(n: int) -> Fraction:
    """Closed-form ``E[X] = 2n(2n-1)/(4n-1)``."""
    n = _check_n(n)
    return Fraction(2 * n * (2 * n - 1), 4 * n - 1)


def variance_formula(n: int) -> Fraction:
    """Closed-form ``Var[X] = 8n^2(4n^2-4n+1)/(64n^3-80n^2+28n-3)``."""
    n = _check_n(n)
    return Fraction(8 * n * n * (4 * n * n - 4 * n + 1), 64 * n ** 3 - 80 * n * n + 28 * n - 3)
