from fractions import Fraction

import pytest

from ubd.exactnum import min_poly, qp_trim
from ubd.ellcurve import CurveFunction, function_with_divisor, verify_divisor
from ubd.qseries import nth_root_normalized, series_pow
from ubd.x011 import (
    QPointData,
    build_catalog,
    catalog_export,
    expand_on_curve,
    expand_xy,
    expansion_report,
    g5_family,
    g5_series,
    weight2_eta_product,
    x11_curve,
)

X_HEAD = [1, 2, 4, 5, 8, 1, 7, -11, 10, -12, -18]   # w^-2 .. w^8
Y_HEAD = [1, 3, 7, 12, 17, 26, 19, 37, -15, -16, -67]  # w^-3 .. w^7


def test_expand_xy_golden_heads():
    x, y = expand_xy(40)
    assert x.lead == -2 and y.lead == -3
    assert x.coefficients(-2, 9) == X_HEAD
    assert y.coefficients(-3, 8) == Y_HEAD


def test_expand_xy_integrality():
    x, y = expand_xy(120)
    for c in x.coefficients(x.lead, x.prec):
        assert Fraction(c).denominator == 1
    for c in y.coefficients(y.lead, y.prec):
        assert Fraction(c).denominator == 1


def test_expansion_report_kappa():
    rep = expansion_report(30)
    assert rep["kappa"] == -1


def test_relations_hold_to_truncation():
    # expand_xy(verify=True) aborts unless both defining relations hold
    x, y = expand_xy(60, verify=True)
    lhs = y * y + y
    rhs = x * x * x - x * x - x.scalar_mul(10)
    diff = lhs - rhs
    assert all(diff.coefficient(k) == (-20 if k == 0 else 0)
               for k in range(diff.lead, diff.prec))


def test_weight2_eta_product_lead():
    s = weight2_eta_product(30)
    assert s.lead == 1 and s.coefficient(1) == 1
    assert s.coefficient(2) == -2


def test_expand_on_curve_reproduces_x():
    x, _ = expand_xy(30)
    fx = CurveFunction(x11_curve(), [0, 1], [])
    s = expand_on_curve(fx, 25)
    assert s.agrees_with(x, -2, 20)


def test_expand_on_curve_fp_golden():
    p = x11_curve().point(5, 5)
    f = function_with_divisor(5, p)
    s = expand_on_curve(f, 30)
    assert s.lead == -5
    assert s.coefficients(-5, 1) == [1, 1, -3, 13, 20, -23]
    # integer coefficients: integral polynomial in the integral x, y
    assert all(Fraction(c).denominator == 1 for c in s.coefficients(-5, 25))
    inv = s.invert()
    prod = s * inv
    assert prod.coefficient(0) == 1
    assert all(prod.coefficient(k) == 0 for k in range(1, prod.prec))


def test_q_point_coordinates_match_nested_radical_form():
    # Q = [-1/2 + (11/10)sqrt(5), -1/2 + (11/10)sqrt(-25-2*sqrt(5))]:
    # in the flattened field, S = (10x+5)/11 and TH = (10y+5)/11 satisfy
    # S^2 = 5 and TH^2 = -25 - 2S exactly.
    qd = QPointData(x11_curve())
    s = (10 * qd.x_q + 5) / 11
    th = (10 * qd.y_q + 5) / 11
    assert s * s == 5
    assert th * th == -25 - 2 * s
    assert qd.field.degree == 4


def test_build_catalog_index_two():
    cat = build_catalog(2)
    assert len(cat) == 3
    assert all(e.root_degree == 2 for e in cat)
    assert all(e.congruence_flag == 'expected-noncongruence' for e in cat)
    for e in cat:
        chk = verify_divisor(e.generator_function, 2, e.point)
        assert chk.ok, chk.detail
        s = e.expansion(10)
        assert s.lead == -2 and s.coefficient(-2) == 1


def test_build_catalog_index_five_shape():
    cat = build_catalog(5)
    assert len(cat) == 6
    assert [e.label for e in cat] == ["fP", "fQ", "fQ+1P", "fQ+2P", "fQ+3P", "fQ+4P"]
    flags = [e.congruence_flag for e in cat]
    assert flags.count('known-congruence') == 1
    assert cat[1].label == "fQ" and flags[1] == 'known-congruence'
    for e in cat:
        chk = verify_divisor(e.generator_function, 5, e.point)
        assert chk.ok, chk.detail


def test_catalog_five_x_coordinates():
    cat = build_catalog(5)
    quartics = set()
    for e in cat:
        if e.label.startswith("fQ+"):
            mp = qp_trim(min_poly(e.point.x))
            assert len(mp) == 5
            quartics.add(tuple(int(c) for c in mp))
    # generators split over the unit-reduction quartic and the Eisenstein one
    assert quartics == {(101, 41, 11, 1, 1), (155, 200, 120, 15, 1)}


def test_catalog_five_expansions_normalized():
    cat = build_catalog(5)
    for e in cat:
        if e.label.startswith("fQ"):
            s = e.expansion(6)
            assert s.lead == -5
            assert s.coefficient(-5) == 1


# Derived goldens: minimal polynomials of the w^-4 and w^-3 coefficients of
# the four translate entries; the multiset is invariant under the branch
# choice of Q (any branch is a Galois image of any other).
MP4 = {
    (1031, -317, 79, -13, 1),
    (2761, -1363, 289, -27, 1),
    (4961, -1716, 186, -11, 1),
    (5401, -2704, 456, -29, 1),
}
MP3 = {
    (1249331, -65156, -1304, 59, 1),
    (3035531, -306692, 8704, -13, 1),
    (44375, 3375, 225, -35, 1),
    (729431, -79481, 4121, -91, 1),
}


def test_catalog_five_coefficient_minpolys():
    cat = build_catalog(5)
    got4, got3 = set(), set()
    for e in cat:
        if e.label.startswith("fQ+"):
            s = e.expansion(5)
            got4.add(tuple(int(c) for c in qp_trim(min_poly(s.coefficient(-4)))))
            got3.add(tuple(int(c) for c in qp_trim(min_poly(s.coefficient(-3)))))
    assert got4 == MP4
    assert got3 == MP3


def test_g5_golden():
    g5 = g5_series(30)
    assert g5.lead == -5
    assert g5.coefficients(-5, 0) == [1, -12, 54, -88, -99]


def test_g5_family_roots():
    for n in (2, 3, 4, 6, 12):
        g5, closed = g5_family(n, 40)
        assert closed.lead == Fraction(-5, n)
        unit, _, _ = g5.unit_normalized()
        root = nth_root_normalized(unit, n)
        assert root.agrees_with(closed.unit, 0, 38)
        assert all(Fraction(c).denominator == 1
                   for c in root.coefficients(0, 38))
        assert series_pow(root, n).agrees_with(unit)


def test_g5_family_other_n():
    g5, closed = g5_family(7, 20)
    assert closed is None
    assert g5.lead == -5


def test_catalog_export_format():
    text = catalog_export(build_catalog(2), T=5)
    assert text.count("entry fP") == 3
    assert "field -158,-40,-2,1" in text
    assert "series 1" in text
