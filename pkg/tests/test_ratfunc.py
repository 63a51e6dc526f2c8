"""Rational-function reduction, series expansion, reversal, continued
fractions."""

import random
from fractions import Fraction

import pytest

from negmom import poly as P
from negmom.poly import MultiPoly
from negmom.ratfunc import (
    RatFunc,
    ReversalError,
    cf_eval,
    double_reversal,
    reverse_gf,
    series_expand,
    series_expand_rat,
)

X = P.x()


def test_reduction_cancels_common_factor():
    f = RatFunc(1 - X * X, 1 - X)
    assert f.is_poly()
    assert f.as_poly() == 1 + X


def test_unit_denominator_absorbed():
    f = RatFunc(P.V(1), 2 * P.V(0))
    assert f.is_poly()
    assert f.as_poly() == Fraction(1, 2) * P.V(1) * MultiPoly.variable("V", 0, -1)


def test_den_normalized_primitive_positive():
    # 1/(2x - 2) = (1/2)/(x - 1): den integer-primitive, leading sign positive
    f = RatFunc(MultiPoly.const(1), -2 + 2 * X)
    assert f.den == X - 1
    assert f.num == MultiPoly.const(Fraction(1, 2))


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RatFunc(1, MultiPoly.zero())


def test_field_ops():
    a = RatFunc(1, 1 - X)
    b = RatFunc(X, 1 + X)
    assert a + b - b == a
    assert (a * b) / b == a
    assert a ** 2 == a * a
    assert (a - a).is_zero()


def test_series_geometric():
    assert series_expand(RatFunc(1, 1 - X), 4) == [MultiPoly.const(1)] * 4


def test_series_shifted():
    s = series_expand(RatFunc(X, 1 - P.b(0) * X), 3)
    assert s[0].is_zero() and s[1] == 1 and s[2] == P.b(0)


def test_series_v_weights():
    f = RatFunc(P.V(1) * X, 1 - P.V(1) * P.V(0) * X * X)
    s = series_expand(f, 4)
    assert s == [MultiPoly.zero(), P.V(1), MultiPoly.zero(), P.V(1) ** 2 * P.V(0)]


def test_series_rational_coefficients():
    # 1/(1 - b0 x) expanded over the fraction field still works
    f = RatFunc(1, P.b(0) - X)
    s = series_expand_rat(f, 3)
    assert s[0] == RatFunc(1, P.b(0))
    assert s[1] == RatFunc(1, P.b(0) ** 2)


def test_series_pole_rejected():
    with pytest.raises(ZeroDivisionError):
        series_expand(RatFunc(1, X), 3)


def test_reverse_self_dual():
    f = RatFunc(X, 1 - X * X)
    assert reverse_gf(f) == f


def test_reverse_geometric():
    # f_n = 1 for all n: the reversed series is x + x^2 + ...
    r = reverse_gf(RatFunc(1, 1 - X))
    assert series_expand(r, 4) == [MultiPoly.zero()] + [MultiPoly.const(1)] * 3


def test_reverse_degree_violation():
    with pytest.raises(ReversalError):
        reverse_gf(RatFunc(X * X, 1 + X))
    with pytest.raises(ReversalError):
        reverse_gf(RatFunc(1 + X, 1 - X))  # degree tie, nonzero constant


def test_reverse_involution_on_admissible_class():
    rng = random.Random(4242)
    for _ in range(40):
        dden = rng.randint(1, 4)
        den = MultiPoly.const(rng.randint(1, 3))
        for e in range(1, dden + 1):
            den = den + rng.randint(-3, 3) * X ** e
        if den.degree(P.X_VAR) < 1:
            continue
        dnum = rng.randint(1, den.degree(P.X_VAR))
        num = MultiPoly.zero()
        for e in range(1, dnum + 1):
            num = num + rng.randint(-3, 3) * X ** e
        if num.is_zero():
            continue
        f = RatFunc(num, den)
        if f.is_poly() or f.den.degree(P.X_VAR) <= f.num.degree(P.X_VAR):
            continue
        assert reverse_gf(reverse_gf(f)) == f


def test_double_reversal_identity():
    f = RatFunc(1 + X, 1 - X - X * X)
    assert double_reversal(double_reversal(f)) == f


def test_cf_depth_one():
    f = cf_eval([MultiPoly.const(1)], [1 - P.b(0) * X])
    assert f == RatFunc(1, 1 - P.b(0) * X)


def test_cf_two_levels():
    # 1/(1 - x^2/1) collapses to 1/(1 - x^2)
    f = cf_eval([MultiPoly.const(1), X * X], [MultiPoly.const(1), MultiPoly.const(1)])
    assert f == RatFunc(1, 1 - X * X)


def test_cf_negative_route():
    # -x/(x - 1/x) has series 0, 0, 1, 0, 1
    f = cf_eval([-X, MultiPoly.const(1)], [X, X])
    s = series_expand(f, 5)
    assert [c.as_fraction() for c in s] == [0, 0, 1, 0, 1]


def test_cf_zero_denominator_reported():
    with pytest.raises(ZeroDivisionError):
        cf_eval([MultiPoly.const(1)], [MultiPoly.zero()])


def test_cross_multiplied_equality():
    a = RatFunc(1 - X * X, (1 - X) * (1 + X + X * X), reduce=False)
    b = RatFunc(1 + X, 1 + X + X * X)
    assert a == b
