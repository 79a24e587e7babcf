import random
from fractions import Fraction

import pytest

from ubd.exactnum import NumberField, min_poly
from ubd.ellcurve import (
    CurveFunction,
    WeierstrassCurve,
    five_torsion_factors,
    function_with_divisor,
    point_op,
    point_order,
    torsion_x_locus,
    verify_divisor,
)


@pytest.fixture(scope="module")
def x11():
    return WeierstrassCurve(0, -1, 1, -10, -20)


def test_discriminant_nonzero_check():
    with pytest.raises(ValueError):
        WeierstrassCurve(0, 0, 0, 0, 0)
    c = WeierstrassCurve(0, -1, 1, -10, -20)
    assert c.discriminant == -161051  # -11^5


def test_point_validation(x11):
    p = x11.point(5, 5)
    assert not p.is_infinity()
    with pytest.raises(ValueError):
        x11.point(5, 6)


def test_point_op_examples(x11):
    p = x11.point(5, 5)
    o = x11.infinity()
    assert point_op(p, o, 'add') == p
    assert point_op(p, None, 'scalar_mul', 3) == x11.point(16, 60)
    assert point_op(p, None, 'scalar_mul', 5).is_infinity()
    assert point_op(p, None, 'negate') == x11.point(5, -6)
    assert point_op(p, p, 'add') == point_op(p, None, 'double')


def test_point_order_examples(x11):
    p = x11.point(5, 5)
    assert point_order(x11.infinity(), 10) == 1
    assert point_order(p, 10) == 5
    assert point_order(x11.point(16, 60), 10) == 5
    assert point_order(p, 3) is None  # exceeds bound


def test_group_law_random_associativity(x11):
    p = x11.point(5, 5)
    pts = [x11.infinity()] + [k * p for k in range(1, 5)]
    for a in pts:
        for b in pts:
            for c in pts:
                assert (a + b) + c == a + (b + c)
            assert a + (-a) == x11.infinity()
            assert a + x11.infinity() == a


def test_group_law_over_number_field(x11):
    k = NumberField([-158, -40, -2, 1])
    ck = x11.base_change(k)
    p2 = ck.point(k.gen() / 2, Fraction(-1, 2))
    assert (p2 + p2).is_infinity()
    assert point_order(p2, 5) == 2
    p5 = ck.point(5, 5)
    assert (p2 + p5) + p2 == p5


def test_torsion_x_locus_two(x11):
    assert torsion_x_locus(2, x11) == [Fraction(-79, 4), -10, -1, 1]


def test_torsion_x_locus_five(x11):
    assert torsion_x_locus(5, x11) == [101, 41, 11, 1, 1]
    rational_x, rest = five_torsion_factors(x11)
    assert rational_x == [5, 16]
    assert sorted(len(f) - 1 for f in rest) == [2, 4, 4]
    assert [-29, 5, 5] in rest
    assert [155, 200, 120, 15, 1] in rest


def test_function_with_divisor_n1(x11):
    f = function_with_divisor(1, x11.infinity())
    assert f.u == (1,) and f.v == () and f.den == (1,)


def test_function_with_divisor_two_torsion(x11):
    k = NumberField([-158, -40, -2, 1])
    ck = x11.base_change(k)
    xp = k.gen() / 2
    p2 = ck.point(xp, Fraction(-1, 2))
    f = function_with_divisor(2, p2)
    assert f.v == () and f.den == (k.one(),)
    assert list(f.u) == [-xp, k.one()]
    chk = verify_divisor(f, 2, p2)
    assert chk.ok, chk.detail


def test_function_with_divisor_fp(x11):
    p = x11.point(5, 5)
    f = function_with_divisor(5, p)
    # the known closed form, leading coefficient already 1
    assert list(f.u) == [-55, 30, -4]
    assert list(f.v) == [-4, 1]
    assert list(f.den) == [1]
    assert f.pole_order_at_O() == 5
    chk = verify_divisor(f, 5, p)
    assert chk.ok and chk.pole_order == 5 and chk.vanishing_order == 5


def test_function_with_divisor_rejects_nontorsion(x11):
    with pytest.raises(ValueError):
        function_with_divisor(3, x11.point(5, 5))  # order 5, not 3-torsion


def test_function_with_divisor_composite_multiple(x11):
    # n*P = O with ord(P) a proper divisor of n: the walker passes through O
    p = x11.point(5, 5)
    f10 = function_with_divisor(10, p)
    chk = verify_divisor(f10, 10, p, local_t=16)
    assert chk.ok, chk.detail

    k = NumberField([-158, -40, -2, 1])
    p2 = x11.base_change(k).point(k.gen() / 2, Fraction(-1, 2))
    f6 = function_with_divisor(6, p2)
    chk = verify_divisor(f6, 6, p2, local_t=12)
    assert chk.ok, chk.detail
    # the cube of x - x_P, normalized
    xp = k.gen() / 2
    assert list(f6.u) == [-xp ** 3, 3 * xp * xp, -3 * xp, k.one()]


def test_verify_divisor_failure_cases(x11):
    p = x11.point(5, 5)
    fx = CurveFunction(x11, [0, 1], [])  # the function x
    chk = verify_divisor(fx, 2, p)
    assert not chk.ok
    assert chk.value_at_p == 5  # fails at F(P) = 0

    f = function_with_divisor(5, p)
    assert not verify_divisor(f, 4, p).ok  # wrong multiplicity claimed


def test_verify_divisor_scaling_invariance(x11):
    p = x11.point(5, 5)
    f = function_with_divisor(5, p)
    g = f.scalar_mul(Fraction(-7, 3))
    chk = verify_divisor(g, 5, p)
    assert chk.ok


def test_same_subgroup_principal_span(x11):
    # <P> = <2P>: div(f_P^2 / f_{2P}) = 10(P) - 5(2P) - 5(O) must be principal:
    # degree 0 and summing to O under the group law
    p = x11.point(5, 5)
    q = 2 * p
    f1 = function_with_divisor(5, p)
    f2 = function_with_divisor(5, q)
    assert verify_divisor(f1, 5, p).ok and verify_divisor(f2, 5, q).ok
    divisor = [(p, 10), (q, -5)]  # plus (O, -5), which drops out of the sum
    assert sum((pt, k) == (pt, k) and k for pt, k in divisor) - 5 == 0
    acc = x11.infinity()
    for pt, k in divisor:
        acc = acc + k * pt
    assert acc.is_infinity()


def test_curve_function_arithmetic_reduction(x11):
    f = CurveFunction(x11, [1, 1], [2])  # (1 + x) + 2y
    g = f * f.inverse()
    assert g.u == (1,) and g.v == () and g.den == (1,)
    h = f * f
    val = h.evaluate(x11.point(5, 5))
    direct = f.evaluate(x11.point(5, 5))
    assert val == direct * direct


def test_pole_order_parity_rule(x11):
    assert CurveFunction(x11, [0, 1], []).pole_order_at_O() == 2   # x
    assert CurveFunction(x11, [], [1]).pole_order_at_O() == 3      # y
    assert CurveFunction(x11, [0, 0, 1], [1]).pole_order_at_O() == 4
    assert CurveFunction(x11, [0, 1], [], [0, 1]).pole_order_at_O() == 0
    f = CurveFunction(x11, [-55, 30, -4], [-4, 1])
    assert f.leading_coeff_at_O() == 1
