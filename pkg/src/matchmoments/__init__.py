"""Exact moment analysis of same-sex marriages in a uniformly random perfect matching
of 2n men and 2n women."""

__version__ = "0.1.0"

from .asymptotics import AsymptoticSeries, expand_asymptotic, series_limit
from .exact import PowerSeries, Polynomial, RationalFunction, series_div
from .guess import FitRequest, FitResult, fit_rational
from .model import PGFDistribution, build_pgf, matching_count, mean_formula, variance_formula
from .moments import MomentTable, central_moments, moment_table_range, normalized_moments, raw_moment
from .normality import distribution_vs_normal, normal_moment, verify_normality
from .oracle import enumerate_matchings, sample_matchings

__all__ = [
    "AsymptoticSeries",
    "FitRequest",
    "FitResult",
    "MomentTable",
    "PGFDistribution",
    "Polynomial",
    "PowerSeries",
    "RationalFunction",
    "build_pgf",
    "central_moments",
    "distribution_vs_normal",
    "enumerate_matchings",
    "expand_asymptotic",
    "fit_rational",
    "matching_count",
    "mean_formula",
    "moment_table_range",
    "normal_moment",
    "normalized_moments",
    "raw_moment",
    "sample_matchings",
    "series_div",
    "series_limit",
    "variance_formula",
    "verify_normality",
]
