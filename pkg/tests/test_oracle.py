from fractions import Fraction as F
from math import sqrt

import numpy as np
import pytest

from matchmoments import _kernels
from matchmoments.model import double_factorial, mean_formula, variance_formula
from matchmoments.oracle import (EnumerationTooLarge, draw_steps, enumerate_matchings, sample_matchings,
                                 worker_rng)


def test_enumeration_examples():
    e1 = enumerate_matchings(1)
    assert {j: c for j, c in e1.counts.items() if c} == {0: 2, 2: 1} and e1.total == 3
    e2 = enumerate_matchings(2)
    assert {j: c for j, c in e2.counts.items() if c} == {0: 24, 2: 72, 4: 9} and e2.total == 105


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_totals(n):
    e = enumerate_matchings(n)
    assert e.total == double_factorial(4 * n - 1)
    assert all(e.counts[j] == 0 for j in range(1, 2 * n + 1, 2))


def test_enumeration_guard():
    with pytest.raises(EnumerationTooLarge):
        enumerate_matchings(5)
    with pytest.raises(ValueError):
        enumerate_matchings(0)


def test_sampler_deterministic():
    a = sample_matchings(5, 2000, seed=42)
    b = sample_matchings(5, 2000, seed=42)
    assert a == b and a.to_dict() == b.to_dict()
    assert sum(a.empirical_counts.values()) == 2000
    assert sample_matchings(5, 2000, seed=43) != a


def test_sampler_workers_reproducible():
    a = sample_matchings(5, 3001, seed=1, workers=3)
    assert a == sample_matchings(5, 3001, seed=1, workers=3)
    assert sum(a.empirical_counts.values()) == 3001 and a.workers == 3


def test_sampler_n1_frequency():
    s = sample_matchings(1, 300_000, seed=2024)
    assert abs(F(s.empirical_counts.get(2, 0), s.trials) - F(1, 3)) < F(1, 100)


def test_sampler_each_n1_matching_uniform():
    """All three matchings of {M0, M1, W2, W3} show up a third of the time each."""
    trials = 120_000
    draws = draw_steps(worker_rng(9, 0), 1, trials)
    partner_of_0 = np.where(_kernels.pairings_from_draws(draws, 4)[:, :, 0] == 0,
                            _kernels.pairings_from_draws(draws, 4)[:, :, 1], -1).max(axis=1)
    se = sqrt((1 / 3) * (2 / 3) / trials)
    for p in (1, 2, 3):
        assert abs(np.mean(partner_of_0 == p) - 1 / 3) < 5 * se


def test_sampler_mean_n50():
    s = sample_matchings(50, 100_000, seed=12345)
    sigma = sqrt(float(variance_formula(50)))
    assert abs(s.empirical_moments[0] - float(mean_formula(50))) < 5 * sigma / sqrt(100_000)
