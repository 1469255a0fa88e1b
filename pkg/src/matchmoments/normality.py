"""Method-of-moments check that the same-sex marriage count is asymptotically normal.

Pipeline: exact raw moments for n = 1..n_max, a guessed rational function of
n for each raw moment, then central and normalized moments as exact rational
functions, expanded at n = oo and compared with the moments of N(0, 1).
Odd normalized moments are handled through their squares.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .asymptotics import AsymptoticSeries, Limit, expand_asymptotic, series_limit
from .exact import RationalFunction, rat_str
from .guess import FitError, FitRequest, fit_rational
from .model import build_pgf, mean_formula, variance_formula
from .moments import MomentTable, moment_table_range

DEFAULT_N_MAX = 60
DEFAULT_SERIES_ORDER = 9
VERIFICATION_POINTS = 10


def normal_moment(r: int) -> int:
    """``E[Z^r]`` for standard normal Z: 0 for odd r, ``r!/(2^(r/2) (r/2)!)`` for even r."""
    if r < 0:
        raise ValueError("moment order must be >= 0")
    if r % 2:
        return 0
    h = r // 2
    return math.factorial(r) // (2 ** h * math.factorial(h))


@dataclass
class MomentCheck:
    r: int
    fitted_function: RationalFunction | None
    series: AsymptoticSeries | None
    expected_limit: Fraction
    limit: Limit | None
    verdict: bool
    matches_data: bool = False
    observed_sign: int | None = None
    sign_stable_from: int | None = None
    diagnostics: str = ""

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "quantity": f"alpha{self.r}" if self.r % 2 == 0 else f"alpha{self.r}_sq",
            "fitted_function": self.fitted_function.to_dict() if self.fitted_function else None,
            "series": self.series.to_dict() if self.series else None,
            "expected_limit": rat_str(self.expected_limit),
            "limit": self.limit.to_dict() if self.limit else None,
            "matches_data": self.matches_data,
            "observed_sign": self.observed_sign,
            "sign_stable_from": self.sign_stable_from,
            "verdict": "pass" if self.verdict else "fail",
            "diagnostics": self.diagnostics,
        }


@dataclass
class NormalityReport:
    n_max: int
    r_max: int
    series_order: int
    raw_fits: dict = field(default_factory=dict)
    per_moment: list = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return bool(self.per_moment) and all(m.verdict for m in self.per_moment)

    def limits(self) -> dict:
        return {m.r: (m.limit.value if m.limit and m.limit.kind != "diverges" else None) for m in self.per_moment}

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "r_max": self.r_max,
            "series_order": self.series_order,
            "raw_moment_fits": {str(r): f.to_dict() for r, f in sorted(self.raw_fits.items())},
            "per_moment": [m.to_dict() for m in self.per_moment],
            "overall": "pass" if self.overall else "fail",
        }


def _fit_column(tables: list[MomentTable], values) -> RationalFunction:
    pts = tuple((t.n, v) for t, v in zip(tables, values))
    max_deg = len(pts) - 2 - VERIFICATION_POINTS
    return fit_rational(FitRequest(pts, max_total_degree=max_deg, verification_points=VERIFICATION_POINTS)).function


def fit_raw_moments(tables: list[MomentTable], r_max: int) -> dict[int, RationalFunction]:
    """Guess ``m_r(n)`` for r = 1..r_max; stops at the first order that cannot be fitted."""
    fits = {0: RationalFunction.constant(1)}
    for r in range(1, r_max + 1):
        try:
            fits[r] = _fit_column(tables, [t.raw[r] for t in tables])
        except FitError:
            break
    return fits


def central_from_raw(raw: dict[int, RationalFunction], r: int) -> RationalFunction:
    """``mu_r = sum_i C(r,i) (-m_1)^(r-i) m_i`` in exact rational-function arithmetic."""
    shift = -raw[1]
    acc = RationalFunction.constant(0)
    for i in range(r + 1):
        acc = acc + comb(r, i) * shift ** (r - i) * raw[i]
    return acc


def normalized_from_raw(raw: dict[int, RationalFunction], r: int) -> RationalFunction:
    """alpha_r for even r, alpha_r^2 for odd r, as a rational function of n."""
    mu2 = central_from_raw(raw, 2)
    mu = central_from_raw(raw, r)
    if r % 2 == 0:
        return mu / mu2 ** (r // 2)
    return mu * mu / mu2 ** r


def fit_normalized_direct(tables: list[MomentTable], r: int, **kwargs) -> RationalFunction:
    """Guess alpha_r (even r) or alpha_r^2 (odd r) straight from its per-n values."""
    pts = tuple((t.n, t.alpha(r)) for t in tables)
    return fit_rational(FitRequest(pts, **kwargs)).function


def _tail_sign(tables: list[MomentTable], r: int) -> tuple[int | None, int | None]:
    """Sign of mu_r at the largest n and the first n from which it no longer changes (odd r only)."""
    if r % 2 == 0:
        return None, None
    sign = tables[-1].odd_sign[r]
    start = tables[-1].n
    for t in reversed(tables):
        if t.odd_sign[r] != sign:
            break
        start = t.n
    return sign, start


def verify_normality(n_max: int = DEFAULT_N_MAX, r_max: int = 14, series_order: int = DEFAULT_SERIES_ORDER,
                     tables: list[MomentTable] | None = None) -> NormalityReport:
    if r_max < 3:
        raise ValueError("r_max must be at least 3")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if series_order < 0:
        raise ValueError("series order must be >= 0")
    if tables is None:
        tables = moment_table_range(1, n_max, r_max)
    else:
        tables = [t for t in tables if t.n <= n_max]
        if len(tables) != n_max or tables[0].r_max < r_max:
            raise ValueError("supplied moment tables do not cover n = 1..n_max up to r_max")
    report = NormalityReport(n_max=n_max, r_max=r_max, series_order=series_order)
    raw = fit_raw_moments(tables, r_max)
    report.raw_fits = {r: f for r, f in raw.items() if r > 0}
    for r in range(3, r_max + 1):
        expected = Fraction(normal_moment(r))
        sign, stable_from = _tail_sign(tables, r)
        if r not in raw or 2 not in raw:
            missing = min(k for k in range(1, r + 1) if k not in raw)
            report.per_moment.append(MomentCheck(
                r, None, None, expected, None, False, observed_sign=sign, sign_stable_from=stable_from,
                diagnostics=f"raw moment m_{missing} admits no rational fit on n = 1..{n_max}"))
            continue
        f = normalized_from_raw(raw, r)
        matches = all(f(t.n) == t.alpha(r) for t in tables)
        series = expand_asymptotic(f, series_order)
        lim = series_limit(series)
        ok_limit = lim.kind != "diverges" and lim.value == expected
        notes = []
        if not matches:
            notes.append("derived function disagrees with per-n moment data")
        if not ok_limit:
            notes.append(f"limit {lim} differs from normal moment {expected}")
        report.per_moment.append(MomentCheck(
            r, f, series, expected, lim, matches and ok_limit,
            matches_data=matches, observed_sign=sign, sign_stable_from=stable_from,
            diagnostics="; ".join(notes)))
    return report


@dataclass(frozen=True)
class LatticeDiscrepancy:
    sup_discrepancy: float
    at_value: int


def distribution_vs_normal(n: int) -> LatticeDiscrepancy:
    """Largest gap between Pr[X = j] and the matching normal density times the lattice spacing.

    X lives on even integers, so each atom is compared with ``2 * phi(j)``
    where phi is the normal density with the exact mean and variance.
    Floating point diagnostic only.
    """
    pgf = build_pgf(n)
    mu = float(mean_formula(n))
    sigma = math.sqrt(float(variance_formula(n)))
    best, where = -1.0, 0
    for j in range(0, 2 * n + 1, 2):
        p = float(pgf.probability(j))
        z = (j - mu) / sigma
        dens = 2.0 * math.exp(-0.5 * z * z) / (sigma * math.sqrt(2.0 * math.pi))
        gap = abs(p - dens)
        if gap > best:
            best, where = gap, j
    return LatticeDiscrepancy(best, where)
