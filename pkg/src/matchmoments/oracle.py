"""Ground truth independent of the generating function.

* :func:`enumerate_matchings` walks every perfect matching of 4n people.
* :func:`sample_matchings` draws uniform random perfect matchings.

People are labelled 0..4n-1, with 0..2n-1 the men.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from ._numba_utils import backend_name
from .model import double_factorial

ENUMERATION_LIMIT = 4
GENERATOR = "PCG64"
_CHUNK = 8192


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class MatchingDistribution:
    n: int
    counts: dict
    total: int

    def probabilities(self) -> dict[int, Fraction]:
        return {j: Fraction(c, self.total) for j, c in self.counts.items()}


def enumerate_matchings(n: int, allow_large: bool = False) -> MatchingDistribution:
    """Exhaustive same-sex count histogram over all (4n-1)!! matchings.

    n above 4 means at least 6.5e8 matchings and is refused unless
    ``allow_large`` is set.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > ENUMERATION_LIMIT and not allow_large:
        raise EnumerationTooLarge(
            f"n={n} means {double_factorial(4 * n - 1):,} matchings; pass allow_large=True to enumerate anyway")
    hist = _kernels.enumerate_counts(4 * int(n))
    counts = {j: int(c) for j, c in enumerate(hist)}
    total = sum(counts.values())
    return MatchingDistribution(int(n), counts, total)


@dataclass(frozen=True)
class SampleSummary:
    n: int
    trials: int
    seed: int
    empirical_counts: dict
    empirical_moments: list
    workers: int = 1
    generator: str = GENERATOR
    backend: str = field(default_factory=backend_name)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "workers": self.workers,
            "generator": self.generator,
            "empirical_counts": {str(j): c for j, c in sorted(self.empirical_counts.items())},
            "empirical_moments": list(self.empirical_moments),
        }


def worker_rng(seed: int, worker: int) -> np.random.Generator:
    """Generator for one worker, derived from ``(seed, worker)`` only."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(worker,))))


def _split(trials: int, workers: int) -> list[int]:
    base, extra = divmod(trials, workers)
    return [base + (w < extra) for w in range(workers)]


def draw_steps(rng: np.random.Generator, n: int, trials: int) -> np.ndarray:
    """Random choices for ``trials`` sequential matchings (see :mod:`._kernels`)."""
    return rng.integers(0, _kernels.draw_bounds(4 * n), size=(trials, 2 * n), dtype=np.int64)


def _worker_counts(seed: int, worker: int, n: int, trials: int) -> np.ndarray:
    rng = worker_rng(seed, worker)
    hist = np.zeros(2 * n + 1, dtype=np.int64)
    done = 0
    while done < trials:
        m = min(_CHUNK, trials - done)
        xs = _kernels.sample_counts(draw_steps(rng, n, m), 4 * n)
        hist += np.bincount(xs, minlength=2 * n + 1)
        done += m
    return hist


def sample_matchings(n: int, trials: int, seed: int, workers: int = 1) -> SampleSummary:
    """Monte Carlo histogram of the same-sex count over uniform random matchings.

    Each matching is built by repeatedly pairing the front unmatched person
    with a uniformly chosen other unmatched person.  Results depend only on
    ``(n, trials, seed, workers)``.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    n, trials = int(n), int(trials)
    shares = _split(trials, workers)
    if workers == 1:
        parts = [_worker_counts(seed, 0, n, trials)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda w: _worker_counts(seed, w, n, shares[w]), range(workers)))
    hist = np.sum(parts, axis=0)
    counts = {j: int(c) for j, c in enumerate(hist) if c}
    moments = []
    for r in range(1, 5):
        exact = Fraction(sum(j ** r * c for j, c in counts.items()), trials)
        moments.append(float(exact))
    return SampleSummary(n, trials, int(seed), counts, moments, workers)
