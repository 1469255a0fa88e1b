"""Large-n expansions of rational functions of n."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .exact import PowerSeries, RationalFunction, rat_str, series_div


@dataclass(frozen=True)
class AsymptoticSeries:
    """``sum_j coefficients[j] * n**(leading_exponent - j)`` plus an error of
    order ``n**(leading_exponent - order - 1)``.

    The identically-zero function is represented with ``is_zero=True`` and an
    empty coefficient list, so a nonzero series always has ``coefficients[0] != 0``.
    """

    leading_exponent: int
    coefficients: tuple[Fraction, ...]
    order: int
    is_zero: bool = False

    @classmethod
    def zero(cls, order: int) -> "AsymptoticSeries":
        return cls(0, (), order, is_zero=True)

    def exponents(self) -> list[int]:
        return [self.leading_exponent - j for j in range(len(self.coefficients))]

    def terms(self) -> list[tuple[Fraction, int]]:
        return list(zip(self.coefficients, self.exponents()))

    def coefficient_at(self, exponent: int) -> Fraction:
        j = self.leading_exponent - exponent
        if self.is_zero or j < 0:
            return Fraction(0)
        if j > self.order:
            raise IndexError(f"n^{exponent} lies beyond the truncation order")
        return self.coefficients[j]

    def __call__(self, n) -> Fraction:
        n = Fraction(n)
        return sum((c * n ** e for c, e in self.terms()), Fraction(0))

    def render(self, var: str = "n") -> str:
        """Human form in the style ``n - 1/4 - 1/16*n^-1 - ...``."""
        if self.is_zero:
            return "0"
        out = ""
        for c, e in self.terms():
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = rat_str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{rat_str(mag)}*{mono}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        err = self.leading_exponent - self.order - 1
        return f"{out} + O({var}^{err})"

    def to_dict(self) -> dict:
        return {
            "leading_exponent": self.leading_exponent,
            "coefficients": [rat_str(c) for c in self.coefficients],
            "order": self.order,
            "is_zero": self.is_zero,
            "text": self.render(),
        }


def expand_asymptotic(f: RationalFunction, order: int) -> AsymptoticSeries:
    """Expand ``f(n)`` in descending powers of n, keeping ``order + 1`` terms.

    Substituting ``n = 1/t`` turns ``num/den`` into ``t^(b-a) * rev(num)(t) / rev(den)(t)``;
    the reversed denominator has the nonzero leading coefficient as its
    constant term, so ordinary power-series division applies.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if f.is_zero():
        return AsymptoticSeries.zero(order)
    a, b = f.degrees
    guard = order + 1
    num = PowerSeries(reversed(f.num), guard)
    den = PowerSeries(reversed(f.den), guard)
    q = series_div(num, den, guard)
    # the guard term must be consistent with multiplying back
    if (q * den).coeffs != num.coeffs:  # pragma: no cover - arithmetic sanity
        raise ArithmeticError("series division failed its round trip")
    return AsymptoticSeries(a - b, q.coeffs[: order + 1], order)


@dataclass(frozen=True)
class Limit:
    kind: Literal["diverges", "finite", "zero"]
    value: Fraction | None = None
    sign: int = 0

    def __str__(self):
        if self.kind == "diverges":
            return "+oo" if self.sign > 0 else "-oo"
        return rat_str(self.value)

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.kind == "diverges":
            d["sign"] = self.sign
        else:
            d["value"] = rat_str(self.value)
        return d


def series_limit(s: AsymptoticSeries) -> Limit:
    if s.is_zero or s.leading_exponent < 0:
        return Limit("zero", Fraction(0))
    c0 = s.coefficients[0]
    if s.leading_exponent == 0:
        return Limit("finite", c0)
    return Limit("diverges", None, 1 if c0 > 0 else -1)
