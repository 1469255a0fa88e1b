from fractions import Fraction as F

import pytest

from matchmoments.model import build_pgf, mean_formula, variance_formula
from matchmoments.moments import (DegenerateDistributionError, central_moments, moment_table_range,
                                  normalized_moments, raw_moment)
from matchmoments.oracle import enumerate_matchings


def test_raw_moment_examples():
    p = build_pgf(1)
    assert raw_moment(p, 0) == 1
    assert raw_moment(p, 1) == F(2, 3)
    assert raw_moment(p, 2) == F(4, 3)


def test_raw_moments_from_enumeration():
    """Moments straight from the brute-force histogram, no generating function involved."""
    for n in (1, 2, 3):
        e = enumerate_matchings(n)
        for r in range(0, 9):
            direct = F(sum(j ** r * c for j, c in e.counts.items()), e.total)
            assert raw_moment(build_pgf(n), r) == direct


def test_central_moments_examples():
    raw = [raw_moment(build_pgf(1), r) for r in range(4)]
    mu = central_moments(raw)
    assert mu[0] == 1 and mu[1] == 0
    assert mu[2] == F(8, 9)
    assert mu[3] == F(16, 27)
    with pytest.raises(ValueError):
        central_moments([F(2), F(1)])


def test_normalized_moments_n1():
    raw = [raw_moment(build_pgf(1), r) for r in range(5)]
    even, odd_sq, sign = normalized_moments(central_moments(raw))
    assert even[2] == 1
    assert odd_sq[3] == F(1, 2) and sign[3] == 1
    assert even[4] == F(3, 2)
    with pytest.raises(DegenerateDistributionError):
        normalized_moments([F(1), F(0), F(0)])


def test_table_range_examples():
    (t,) = moment_table_range(1, 1, 4)
    assert t.raw[1] == F(2, 3) and t.central[2] == F(8, 9) and t.alpha(4) == F(3, 2)
    with pytest.raises(ValueError):
        moment_table_range(5, 3, 2)
    with pytest.raises(ValueError):
        moment_table_range(1, 3, 1)


def test_table_invariants(tables_60):
    prev = F(0)
    for t in tables_60:
        assert t.raw[0] == 1 and t.central[0] == 1 and t.central[1] == 0
        assert t.normalized_even[2] == 1
        assert t.central[2] > prev
        prev = t.central[2]
        for r in range(3, 15, 2):
            assert t.normalized_odd_squared[r] == t.central[r] ** 2 / t.central[2] ** r
        assert all(v > 0 for v in t.normalized_even.values())


def test_closed_forms_small_range(tables_60):
    for t in tables_60:
        assert t.raw[1] == mean_formula(t.n)
        assert t.central[2] == variance_formula(t.n)


def _kurtosis_paper(n):
    num = 3 - 100 * n + 650 * n**2 - 1896 * n**3 + 2632 * n**4 - 1664 * n**5 + 384 * n**6
    den = n**2 * (35 - 188 * n + 348 * n**2 - 256 * n**3 + 64 * n**4)
    return F(num, 2 * den)


def _alpha3_sq_paper(n):
    # square of (1/2) sqrt(2) sqrt((4n-3) / (n^2 (25 - 140n + 276n^2 - 224n^3 + 64n^4)))
    return F(1, 2) * F(4 * n - 3, n**2 * (25 - 140 * n + 276 * n**2 - 224 * n**3 + 64 * n**4))


def test_alpha_values_match_printed_closed_forms(tables_60):
    for t in tables_60:
        assert t.alpha(4) == _kurtosis_paper(t.n)
        assert t.alpha(3) == _alpha3_sq_paper(t.n)


def test_parallel_range_matches_serial():
    assert moment_table_range(1, 6, 6, workers=2) == moment_table_range(1, 6, 6)
