"""Guessing a rational function of ``n`` from exact data.

For a degree pair ``(a, b)`` the unknown coefficients of ``p`` (degree a)
and ``q`` (degree b) satisfy ``v_i * q(n_i) - p(n_i) = 0`` at every data
point.  Degree pairs are tried by ascending total degree, ties broken by
ascending denominator degree.  Each pair is first screened modulo a prime
(full rank mod p over *all* points proves no exact solution exists), then
solved exactly by fraction-free elimination on the leading points and
verified against every remaining point.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .exact import RationalFunction, _int_horner
from .linalg import integer_nullspace

log = logging.getLogger(__name__)

DEFAULT_MAX_TOTAL_DEGREE = 16
DEFAULT_VERIFICATION_POINTS = 10
MIN_VERIFICATION_POINTS = 4


class FitError(ValueError):
    pass


class DegenerateDataError(FitError):
    """Not enough (or malformed) data points for the requested search."""


class NoFitError(FitError):
    """No degree pair within the bound explains every point."""


@dataclass(frozen=True)
class FitRequest:
    """Data and search bounds for :func:`fit_rational`.

    ``max_total_degree`` and ``verification_points`` may be left as ``None``:
    the verification count then defaults to 10 (dropping towards 4 for short
    data) and the degree bound to the largest the data supports, capped at 16.
    """

    points: tuple[tuple[int, Fraction], ...]
    max_total_degree: int | None = None
    verification_points: int | None = None

    def __post_init__(self):
        pts = tuple((int(n), Fraction(v)) for n, v in self.points)
        object.__setattr__(self, "points", pts)

    def resolved(self) -> tuple[int, int]:
        npts = len(self.points)
        v = self.verification_points
        if v is None:
            v = max(MIN_VERIFICATION_POINTS, min(DEFAULT_VERIFICATION_POINTS, npts // 3))
        d = self.max_total_degree
        if d is None:
            d = min(DEFAULT_MAX_TOTAL_DEGREE, npts - 2 - v)
        return d, v


@dataclass(frozen=True)
class FitResult:
    function: RationalFunction
    degrees: tuple[int, int]
    points_used: int
    verified_on: int


def _validate(req: FitRequest) -> tuple[int, int]:
    d, v = req.resolved()
    ns = [n for n, _ in req.points]
    if v < MIN_VERIFICATION_POINTS:
        raise DegenerateDataError(f"need at least {MIN_VERIFICATION_POINTS} verification points, got {v}")
    if d < 0:
        raise DegenerateDataError(f"{len(ns)} points are too few to fit anything with {v} held back")
    if len(ns) < d + 2 + v:
        raise DegenerateDataError(
            f"{len(ns)} points given; total degree {d} with {v} verification points needs {d + 2 + v}")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise DegenerateDataError("abscissae must be strictly increasing")
    if ns and ns[0] < 1:
        raise DegenerateDataError("abscissae must be positive integers")
    return d, v


class _System:
    """Per-point data reused across every degree pair."""

    def __init__(self, points, max_deg: int):
        self.ns = [n for n, _ in points]
        self.nums = [v.numerator for _, v in points]
        self.dens = [v.denominator for _, v in points]
        p = _kernels.MODULUS
        self.p = p
        ns = np.array([n % p for n in self.ns], dtype=np.int64)
        pw = np.ones((len(ns), max_deg + 1), dtype=np.int64)
        for k in range(1, max_deg + 1):
            pw[:, k] = (pw[:, k - 1] * ns) % p
        self.pw = pw
        self.num_mod = np.array([a % p for a in self.nums], dtype=np.int64)
        self.den_mod = np.array([b % p for b in self.dens], dtype=np.int64)

    def screen(self, a: int, b: int) -> bool:
        """False when the system has only the trivial solution modulo p."""
        p = self.p
        left = (-self.den_mod[:, None] * self.pw[:, : a + 1]) % p
        right = (self.num_mod[:, None] * self.pw[:, : b + 1]) % p
        mat = np.ascontiguousarray(np.hstack([left, right]))
        return _kernels.rank_mod_p(mat, p) < a + b + 2

    def exact_rows(self, a: int, b: int, count: int) -> list[list[int]]:
        rows = []
        for n, num, den in zip(self.ns[:count], self.nums, self.dens):
            powers = [n ** k for k in range(max(a, b) + 1)]
            rows.append([-den * powers[k] for k in range(a + 1)] + [num * powers[k] for k in range(b + 1)])
        return rows

    def explains_all(self, pc: list[int], qc: list[int]) -> bool:
        for n, num, den in zip(self.ns, self.nums, self.dens):
            qv = _int_horner(qc, n)
            if qv == 0 or _int_horner(pc, n) * den != num * qv:
                return False
        return True


def fit_rational(req: FitRequest) -> FitResult:
    """Minimal-degree rational function through every point of ``req``."""
    max_deg, _ = _validate(req)
    system = _System(req.points, max_deg)
    npts = len(req.points)
    for total in range(max_deg + 1):
        for b in range(total + 1):
            a = total - b
            if not system.screen(a, b):
                continue
            used = total + 2
            basis = integer_nullspace(system.exact_rows(a, b, used), a + b + 2)
            if len(basis) != 1:
                log.debug("degrees (%d, %d): nullspace dimension %d, skipped", a, b, len(basis))
                continue
            vec = basis[0]
            pc, qc = vec[: a + 1], vec[a + 1:]
            if not any(qc) or not system.explains_all(pc, qc):
                continue
            f = RationalFunction(pc, qc)
            return FitResult(function=f, degrees=f.degrees, points_used=used, verified_on=npts - used)
    raise NoFitError(f"no rational function of total degree <= {max_deg} fits the {npts} points")


def fit_sequence(values: Sequence, start: int = 1, **kwargs) -> FitResult:
    """Convenience wrapper: ``values[i]`` is the value at ``n = start + i``."""
    pts = tuple((start + i, Fraction(v)) for i, v in enumerate(values))
    return fit_rational(FitRequest(pts, **kwargs))
