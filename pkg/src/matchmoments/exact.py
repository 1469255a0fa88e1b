"""Exact arithmetic substrate.

Scalars are :class:`fractions.Fraction` (arbitrary precision, always kept in
lowest terms with a positive denominator).  On top of that this module
provides dense univariate polynomials, truncated power series, and rational
functions of the population parameter ``n`` with integer coefficients.

Nothing in here touches floating point.
"""
from __future__ import annotations

import operator
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat(value, den=None) -> Fraction:
    """Build a canonical rational from an int, a Fraction, or a ``"p/q"`` string."""
    if den is not None:
        return Fraction(value, den)
    return Fraction(value)


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Apply ``op`` in {"add", "sub", "mul", "div"}; division by zero raises ZeroDivisionError."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "div" and b == 0:
        raise ZeroDivisionError(f"division of {a} by zero")
    return fn(Fraction(a), Fraction(b))


def rat_str(x: Fraction) -> str:
    """Exact ``"p/q"`` rendering (``"p"`` when the denominator is 1)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class Polynomial:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``.  The zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(_trim([Fraction(c) for c in coeffs]))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[rat_str(c) for c in self.coeffs]})"

    def __call__(self, x0) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Polynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        lead = other.coeffs[-1]
        if len(rem) < dlen:
            return Polynomial(), Polynomial(rem)
        quot = [Fraction(0)] * (len(rem) - dlen + 1)
        for k in range(len(quot) - 1, -1, -1):
            q = rem[k + dlen - 1] / lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return Polynomial(quot), Polynomial(rem[: dlen - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def theta(self) -> "Polynomial":
        """``x * p'(x)``: the coefficient of ``x**k`` gets multiplied by ``k``."""
        return Polynomial(k * c for k, c in enumerate(self.coeffs))

    def reversed(self, length: int | None = None) -> "Polynomial":
        """Coefficients reversed in a window of ``length`` (default degree + 1)."""
        length = len(self.coeffs) if length is None else length
        padded = list(self.coeffs) + [Fraction(0)] * (length - len(self.coeffs))
        return Polynomial(reversed(padded))

    def to_str(self, var: str = "x") -> str:
        return _poly_str([c for c in self.coeffs], var)


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


def poly_eval(p: Polynomial, x0) -> Fraction:
    return p(Fraction(x0))


def theta_operator(p: Polynomial) -> Polynomial:
    return p.theta()


def _poly_str(coeffs: Sequence, var: str) -> str:
    """Descending-power rendering such as ``4*n^2-2*n``."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = rat_str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{rat_str(mag)}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


class PowerSeries:
    """Power series in ``t`` truncated after ``t**order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        return f"PowerSeries({[rat_str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.coeffs[: order + 1], order)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        k = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [sum((a[i] * b[j - i] for i in range(j + 1)), Fraction(0)) for j in range(k + 1)]
        return PowerSeries(out, k)


def series_div(num: PowerSeries, den: PowerSeries, order: int) -> PowerSeries:
    """Formal quotient ``num / den`` through ``t**order``.

    The divisor needs a nonzero constant term; factor out powers of ``t``
    before calling.
    """
    if order > num.order or order > den.order:
        raise ValueError(f"inputs are truncated below the requested order {order}")
    d0 = den.coeffs[0]
    if d0 == 0:
        raise ZeroDivisionError("series divisor has zero constant term")
    a, d = num.coeffs, den.coeffs
    q: list[Fraction] = []
    for j in range(order + 1):
        acc = a[j]
        for i in range(1, j + 1):
            acc -= d[i] * q[j - i]
        q.append(acc / d0)
    return PowerSeries(q, order)


# -- integer polynomial helpers (ascending int lists) -------------------------

def _content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _primitive(p: list[int]) -> list[int]:
    g = _content(p)
    if g > 1:
        p = [c // g for c in p]
    if p and p[-1] < 0:
        p = [-c for c in p]
    return p


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b`` (both nonzero, deg a >= deg b)."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(rem) - 1 >= db and rem:
        lr = rem[-1]
        shift = len(rem) - 1 - db
        rem = [c * lb for c in rem]
        for j, c in enumerate(b):
            rem[shift + j] -= lr * c
        _trim(rem)
    return rem


def int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[x] (up to content), by primitive pseudo-remainder sequences."""
    a, b = _trim(list(a)), _trim(list(b))
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [1]
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    return a


def _int_divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient ``a / b`` in Z[x]; raises if the division is not exact."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    quot = [0] * (len(a) - db) if len(a) > db else []
    for k in range(len(quot) - 1, -1, -1):
        q, r = divmod(rem[k + db], lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[k] = q
        if q:
            for j, c in enumerate(b):
                rem[k + j] -= q * c
    if any(rem[:db]):
        raise ArithmeticError("inexact polynomial division")
    return quot


def _clear_denominators(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    m = 1
    for c in coeffs:
        m = lcm(m, c.denominator)
    return [int(c * m) for c in coeffs], m


def _int_horner(p: Sequence[int], n: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * n + c
    return acc


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


class RationalFunction:
    """Ratio of integer-coefficient polynomials in ``n``, in canonical form.

    Canonical form: numerator and denominator are coprime, all coefficients
    are integers with joint content 1, and the denominator's leading
    coefficient is positive.  The zero function is ``0/1``.  Because the form
    is canonical, equality is coefficient equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,), *, reduce: bool = True):
        ncs = num.coeffs if isinstance(num, Polynomial) else tuple(Fraction(c) for c in num)
        dcs = den.coeffs if isinstance(den, Polynomial) else tuple(Fraction(c) for c in den)
        ncs, dcs = list(_trim(list(ncs))), list(_trim(list(dcs)))
        if not dcs:
            raise ZeroDivisionError("rational function with zero denominator")
        ni, nm = _clear_denominators(ncs)
        di, dm = _clear_denominators(dcs)
        # n/d = (ni/nm) / (di/dm) = (ni*dm) / (di*nm)
        ni = [c * dm for c in ni]
        di = [c * nm for c in di]
        if not ni:
            self.num, self.den = (), (1,)
            return
        if reduce and len(di) > 1 and len(ni) > 1:
            g = int_poly_gcd(ni, di)
            if len(g) > 1:
                ni, di = _int_divexact(ni, g), _int_divexact(di, g)
        c = gcd(_content(ni), _content(di))
        if c > 1:
            ni = [x // c for x in ni]
            di = [x // c for x in di]
        if di[-1] < 0:
            ni = [-x for x in ni]
            di = [-x for x in di]
        self.num: tuple[int, ...] = tuple(ni)
        self.den: tuple[int, ...] = tuple(di)

    @classmethod
    def _raw(cls, num: tuple, den: tuple) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        c = Fraction(c)
        return cls([c.numerator], [c.denominator])

    @classmethod
    def n(cls) -> "RationalFunction":
        return cls._raw((0, 1), (1,))

    @property
    def degrees(self) -> tuple[int, int]:
        return (len(self.num) - 1, len(self.den) - 1)

    def is_zero(self) -> bool:
        return not self.num

    @property
    def numerator(self) -> Polynomial:
        return Polynomial(self.num)

    @property
    def denominator(self) -> Polynomial:
        return Polynomial(self.den)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, n) -> Fraction:
        n = Fraction(n)
        if n.denominator == 1:
            q = _int_horner(self.den, n.numerator)
            if q == 0:
                raise PoleError(f"denominator vanishes at n={n}")
            return Fraction(_int_horner(self.num, n.numerator), q)
        q = Polynomial(self.den)(n)
        if q == 0:
            raise PoleError(f"denominator vanishes at n={n}")
        return Polynomial(self.num)(n) / q

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = Polynomial(self.num), Polynomial(self.den)
        c, d = Polynomial(other.num), Polynomial(other.den)
        if self.den == other.den:
            return RationalFunction(a + c, b)
        return RationalFunction(a * d + c * b, b * d)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(
            Polynomial(self.num) * Polynomial(other.num),
            Polynomial(self.den) * Polynomial(other.den),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(
            Polynomial(self.num) * Polynomial(other.den),
            Polynomial(self.den) * Polynomial(other.num),
        )

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction.constant(1) / (self ** (-k))
        # coprime inputs stay coprime under powers, so skip the gcd
        num = Polynomial(self.num) ** k
        den = Polynomial(self.den) ** k
        return RationalFunction(num, den, reduce=False)

    def to_str(self, var: str = "n") -> str:
        """``(4*n^2-2*n)/(4*n-1)`` style; a bare numerator when the denominator is 1."""
        num = _poly_str(self.num, var)
        if self.den == (1,):
            return num
        den = _poly_str(self.den, var)
        if sum(1 for c in self.num if c) > 1:
            num = f"({num})"
        if sum(1 for c in self.den if c) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RationalFunction({list(self.num)}, {list(self.den)})"

    def to_dict(self) -> dict:
        return {
            "numerator": [str(c) for c in self.num],
            "denominator": [str(c) for c in self.den],
            "text": self.to_str(),
        }


def evaluate_ratfunc(f: RationalFunction, n) -> Fraction:
    return f(n)
