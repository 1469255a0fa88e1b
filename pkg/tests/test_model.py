from fractions import Fraction as F
from math import factorial

import pytest

from matchmoments.model import build_pgf, double_factorial, matching_count, mean_formula, variance_formula
from matchmoments.moments import central_moments, raw_moments
from matchmoments.oracle import enumerate_matchings


def test_pgf_small_n():
    assert build_pgf(1).support() == {0: F(2, 3), 2: F(1, 3)}
    p2 = build_pgf(2)
    assert p2.support() == {0: F(8, 35), 2: F(24, 35), 4: F(3, 35)}
    assert p2.total_matchings == 105


@pytest.mark.parametrize("n", [1, 2, 3, 7, 30, 200])
def test_pgf_invariants(n):
    d = build_pgf(n)
    assert sum(d.coefficients) == 1
    assert len(d.coefficients) == 2 * n + 1
    assert all(c == 0 for c in d.coefficients[1::2])
    assert all(c >= 0 for c in d.coefficients)
    assert all((c * d.total_matchings).denominator == 1 for c in d.coefficients)
    assert d.total_matchings == double_factorial(4 * n - 1)
    all_same = (factorial(2 * n) // (factorial(n) * 2 ** n)) ** 2
    assert d.coefficients[2 * n] == F(all_same, d.total_matchings)
    assert d.as_polynomial()(1) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pgf_equals_enumeration(n):
    e = enumerate_matchings(n)
    assert build_pgf(n).coefficients == tuple(F(e.counts[j], e.total) for j in range(2 * n + 1))


def test_mean_formula():
    assert mean_formula(1) == F(2, 3)
    assert mean_formula(2) == F(12, 7) == F(180, 105)
    assert abs(mean_formula(1000) - (1000 - F(1, 4))) < F(1, 1000)


def test_variance_formula():
    assert variance_formula(1) == F(8, 9)
    assert variance_formula(2) == central_moments(raw_moments(build_pgf(2), 2))[2]
    assert abs(variance_formula(1000) - (500 + F(1, 8))) < F(1, 1000)


def test_matching_count():
    assert matching_count(2) == 1
    assert matching_count(4) == 3
    assert matching_count(8) == 105
    for bad in (0, 3, -2, 7):
        with pytest.raises(ValueError):
            matching_count(bad)


@pytest.mark.parametrize("fn", [build_pgf, mean_formula, variance_formula])
def test_domain_errors(fn):
    with pytest.raises(ValueError):
        fn(0)
