from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matchmoments.exact import (PoleError, Polynomial, PowerSeries, RationalFunction, int_poly_gcd,
                                poly_eval, rat, rat_arith, rat_str, series_div, theta_operator)

fractions = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)
small_polys = st.lists(st.integers(-50, 50), min_size=0, max_size=6).map(Polynomial)


def test_rat_arith_examples():
    assert rat_arith(F(1, 2), F(1, 3), "add") == F(5, 6)
    assert rat(2, 4) == F(1, 2) and rat(2, 4).denominator == 2
    with pytest.raises(ZeroDivisionError):
        rat_arith(F(7, 3), F(0, 1), "div")
    with pytest.raises(ValueError):
        rat_arith(1, 2, "pow")


def test_rat_canonical_zero_and_sign():
    assert rat(0, 5) == F(0, 1) and rat(0, 5).denominator == 1
    assert rat(3, -6).denominator == 2 and rat(3, -6).numerator == -1
    assert rat_str(F(-3, 6)) == "-1/2" and rat_str(F(4)) == "4"


@given(fractions, fractions, fractions)
def test_field_axioms(a, b, c):
    assert rat_arith(rat_arith(a, b, "add"), c, "add") == rat_arith(a, rat_arith(b, c, "add"), "add")
    assert rat_arith(rat_arith(a, b, "mul"), c, "mul") == rat_arith(a, rat_arith(b, c, "mul"), "mul")
    assert a * (b + c) == a * b + a * c
    if b:
        assert rat_arith(rat_arith(a, b, "div"), b, "mul") == a


def test_poly_eval_examples():
    p = Polynomial([F(2, 3), 0, F(1, 3)])
    assert poly_eval(p, 1) == 1
    assert poly_eval(p, 2) == 2
    assert poly_eval(Polynomial(), F(7, 5)) == 0


def test_theta_examples():
    p = Polynomial([F(2, 3), 0, F(1, 3)])
    assert theta_operator(p) == Polynomial([0, 0, F(2, 3)])
    assert theta_operator(Polynomial([5])).is_zero()
    x2 = Polynomial.monomial(2)
    assert poly_eval(theta_operator(theta_operator(x2)), 1) == 4


@given(small_polys)
def test_theta_at_one_is_weighted_sum(p):
    assert poly_eval(theta_operator(p), 1) == sum(k * c for k, c in enumerate(p.coeffs))


def test_polynomial_trim_and_degree():
    assert Polynomial([1, 2, 0, 0]).degree == 1
    assert Polynomial([0, 0]).degree == -1 and Polynomial([0]).is_zero()


@given(small_polys, small_polys)
def test_polynomial_divmod(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_series_div_examples():
    one = PowerSeries([1], 3)
    assert series_div(one, PowerSeries([1, -1], 3), 3) == PowerSeries([1, 1, 1, 1], 3)
    s = PowerSeries([3, 1, 4], 2)
    assert series_div(s, s, 2) == PowerSeries([1, 0, 0], 2)
    assert series_div(PowerSeries([1], 2), PowerSeries([1, 1], 2), 2) == PowerSeries([1, -1, 1], 2)
    with pytest.raises(ZeroDivisionError):
        series_div(one, PowerSeries([0, 1], 3), 3)


@given(st.lists(fractions, min_size=6, max_size=6), st.lists(fractions, min_size=6, max_size=6))
def test_series_div_round_trip(a, b):
    if b[0] == 0:
        return
    num, den = PowerSeries(a, 5), PowerSeries(b, 5)
    q = series_div(num, den, 5)
    assert q * den == num


def test_factorial_magnitude():
    # the largest integer the moment computations touch: (4*200)!
    f = Polynomial([factorial(800)])
    assert len(str(f.coeffs[0].numerator)) == 1977
    assert F(factorial(800), factorial(799)) == 800


def test_int_poly_gcd():
    # (n-1)(n+2) and (n-1)(2n+3)
    a = [-2, 1, 1]
    b = [-3, 1, 2]
    assert int_poly_gcd(a, b) == [-1, 1]
    assert int_poly_gcd([1, 1], [2, 1]) == [1]


def test_ratfunc_canonical_form():
    f = RationalFunction([0, -4, 8], [-2, 8])          # (8n^2-4n)/(8n-2)
    assert f.num == (0, -2, 4) and f.den == (-1, 4)
    g = RationalFunction([1, 0, -1], [-1, 1])          # (1-n^2)/(n-1) = -(n+1)
    assert g.num == (-1, -1) and g.den == (1,)
    h = RationalFunction([0, 1], [0, 1])
    assert h == RationalFunction.constant(1)
    assert RationalFunction([F(1, 2)], [F(1, 3)]) == RationalFunction([3], [2])
    neg = RationalFunction([1], [0, -1])
    assert neg.den == (0, 1) and neg.num == (-1,)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=4),
       st.lists(st.integers(-20, 20), min_size=1, max_size=4).filter(any))
def test_ratfunc_canonical_fixpoint(num, den):
    f = RationalFunction(num, den)
    assert RationalFunction(f.num, f.den) == f


def test_ratfunc_arithmetic_and_eval():
    n = RationalFunction.n()
    mean = 2 * n * (2 * n - 1) / (4 * n - 1)
    assert mean.to_str() == "(4*n^2-2*n)/(4*n-1)"
    assert mean(1) == F(2, 3)
    assert (mean - mean).is_zero()
    assert (mean / mean) == RationalFunction.constant(1)
    assert (mean ** 2)(2) == F(12, 7) ** 2
    with pytest.raises(PoleError):
        (1 / (4 * n - 4))(1)
    assert (n + 1).to_str() == "n+1"
    assert RationalFunction.constant(F(-5, 7)).to_str() == "-5/7"
