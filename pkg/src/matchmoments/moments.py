"""Raw, central and normalized moments of the same-sex marriage count."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .model import PGFDistribution, build_pgf

DEFAULT_R_MAX = 14


class DegenerateDistributionError(ArithmeticError):
    pass


def _theta_sums(weights: Sequence[int], r_max: int) -> list[int]:
    """``theta^r W (1)`` for r = 0..r_max, where theta = x d/dx acts on W(x) = sum w_j x^j."""
    cur = list(weights)
    out = []
    for _ in range(r_max + 1):
        out.append(sum(cur))
        cur = [j * w for j, w in enumerate(cur)]
    return out


def _power_sum(weights: Sequence[int], r: int) -> int:
    return sum(j ** r * w for j, w in enumerate(weights) if w)


def raw_moment(pgf: PGFDistribution, r: int, check: bool = __debug__) -> Fraction:
    """``E[X^r]``, computed as ``theta^r P_n`` evaluated at ``x = 1``.

    With ``check`` the direct power sum is computed as well and must agree.
    """
    if r < 0:
        raise ValueError("moment order must be >= 0")
    via_theta = _theta_sums(pgf.weights, r)[r]
    if check and via_theta != _power_sum(pgf.weights, r):
        raise AssertionError(f"theta route and power sum disagree at n={pgf.n}, r={r}")
    return Fraction(via_theta, pgf.total_matchings)


def raw_moments(pgf: PGFDistribution, r_max: int, check: bool = __debug__) -> list[Fraction]:
    sums = _theta_sums(pgf.weights, r_max)
    if check:
        for r, s in enumerate(sums):
            if s != _power_sum(pgf.weights, r):
                raise AssertionError(f"theta route and power sum disagree at n={pgf.n}, r={r}")
    t = pgf.total_matchings
    return [Fraction(s, t) for s in sums]


def central_moments(raw: Sequence[Fraction]) -> list[Fraction]:
    """Binomial transform of raw moments about the mean ``raw[1]``."""
    if not raw or raw[0] != 1:
        raise ValueError("raw moments must start with m_0 = 1")
    if len(raw) == 1:
        return [Fraction(1)]
    shift = -Fraction(raw[1])
    out = []
    for r in range(len(raw)):
        out.append(sum((comb(r, i) * shift ** (r - i) * raw[i] for i in range(r + 1)), Fraction(0)))
    return out


def normalized_moments(central: Sequence[Fraction]):
    """Split normalized moments into even values and odd (square, sign) pairs.

    Returns ``(even, odd_squared, odd_sign)``: ``even[r] = mu_r / mu_2^(r/2)``,
    ``odd_squared[r] = mu_r^2 / mu_2^r`` and ``odd_sign[r]`` in {-1, 0, 1}.
    """
    if len(central) < 3:
        raise ValueError("need central moments through order 2")
    mu2 = Fraction(central[2])
    if mu2 == 0:
        raise DegenerateDistributionError("variance is zero")
    if mu2 < 0:
        raise ValueError("negative variance")
    even, odd_sq, odd_sign = {}, {}, {}
    for r in range(2, len(central)):
        mu = Fraction(central[r])
        if r % 2 == 0:
            even[r] = mu / mu2 ** (r // 2)
        else:
            odd_sq[r] = mu * mu / mu2 ** r
            odd_sign[r] = (mu > 0) - (mu < 0)
    return even, odd_sq, odd_sign


@dataclass(frozen=True)
class MomentTable:
    n: int
    r_max: int
    raw: tuple[Fraction, ...]
    central: tuple[Fraction, ...]
    normalized_even: dict
    normalized_odd_squared: dict
    odd_sign: dict

    def alpha(self, r: int) -> Fraction:
        """``alpha_r`` for even r, ``alpha_r^2`` for odd r."""
        return self.normalized_even[r] if r % 2 == 0 else self.normalized_odd_squared[r]

    @classmethod
    def from_raw(cls, n: int, raw: Sequence[Fraction]) -> "MomentTable":
        raw = tuple(Fraction(x) for x in raw)
        central = tuple(central_moments(raw))
        even, odd_sq, sign = normalized_moments(central)
        return cls(n, len(raw) - 1, raw, central, even, odd_sq, sign)


def moment_table(n: int, r_max: int = DEFAULT_R_MAX) -> MomentTable:
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    return MomentTable.from_raw(n, raw_moments(build_pgf(n), r_max))


def _table_job(args):
    return moment_table(*args)


def moment_table_range(n_min: int, n_max: int, r_max: int = DEFAULT_R_MAX, workers: int = 1) -> list[MomentTable]:
    """One :class:`MomentTable` per n in ``n_min..n_max``, in n order.

    ``workers > 1`` spreads the per-n work over processes; the result does
    not depend on the schedule.
    """
    if not 1 <= n_min <= n_max:
        raise ValueError(f"invalid n range {n_min}..{n_max}")
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    jobs = [(n, r_max) for n in range(n_min, n_max + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_table_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [moment_table(n, r) for n, r in jobs]
