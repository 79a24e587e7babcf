"""The Gamma^0(11) dataset: w-expansions of the coordinate functions x and y,
expansions of curve functions, the index-2 and index-5 character-group
catalogs, and the G5 eta family.

x and y are pinned down by two relations solved jointly order by order:
the curve equation y^2 + y = x^3 - x^2 - 10x - 20 and the derivation
relation D(x) = kappa*(2y+1)*S(w), where D = w*d/dw, S is the weight-2
eta product eta(z)^2*eta(z/11)^2 expanded in w = e^(2*pi*i*z/11), and
kappa is the unique rational constant matching the forced leading behavior
x = w^-2 + ..., y = w^-3 + ... .
"""

from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import (
    NumberField,
    dp_gcd_monic,
    min_poly,
    poly_is_irreducible_q,
    qp_gcd,
    qp_integerize_monic,
    qp_monic,
    qp_resultant,
    qp_trim,
)
from .qseries import (EtaQuotient, LaurentSeries, eta_quotient_expand,
                      eta_unit_product)
from .ellcurve import (
    CurveFunction,
    WeierstrassCurve,
    five_torsion_factors,
    function_with_divisor,
    point_order,
    torsion_x_locus,
    verify_divisor,
)

WIDTH = 11
CURVE_COEFFS = (0, -1, 1, -10, -20)


def x11_curve(field=None):
    """The modular curve of Gamma^0(11): y^2 + y = x^3 - x^2 - 10x - 20."""
    return WeierstrassCurve(*CURVE_COEFFS, field=field)


# ----------------------------------------------------------------------
# x(w), y(w) by the coupled curve/derivation recursion.
# ----------------------------------------------------------------------

_XY_CACHE = {"T": -1, "xs": None, "ys": None, "kappa": None}


def weight2_eta_product(T):
    """S(w) = eta(z)^2 * eta(z/11)^2 at width 11; leading term w^1."""
    return eta_quotient_expand(EtaQuotient([(1, 2), (Fraction(1, 11), 2)]),
                               WIDTH, T)


def _compute_xy(T):
    """Coefficient arrays for x (exponents -2..T-2) and y (-3..T-3)."""
    s_series = weight2_eta_product(T + 8)
    smax = T + 7
    S = [Fraction(0)] * (smax + 1)
    for e in range(1, smax + 1):
        S[e] = Fraction(s_series.coefficient(e))
    if S[1] != 1:
        raise RuntimeError("eta product does not start with w^1")
    # kappa from matching the forced leads on D(x) = kappa*(2y+1)*S:
    # -2*x_{-2} = kappa * 2*y_{-3} * S_1
    kappa = Fraction(-1) / S[1]

    xs = {-2: Fraction(1)}
    ys = {-3: Fraction(1)}
    x2 = {-4: Fraction(1)}  # x^2, finalized as x becomes known

    def r1(m, x2prov):
        """[w^m] of (y^2 + y - x^3 + x^2 + 10x + 20), unknowns treated as 0."""
        acc = Fraction(0)
        for i in range(-3, m + 3):  # y_i * y_{m-i}, both known (<= m+2)
            j = m - i
            if j < i:
                break
            yi, yj = ys.get(i), ys.get(j)
            if yi is None or yj is None:
                continue
            acc += yi * yj if i == j else 2 * yi * yj
        acc += ys.get(m, 0)
        # x^3 = x2 * x, with the provisional top x2 entry passed in
        for i in range(-4, m + 3):
            x2i = x2prov if i == m + 2 else x2.get(i)
            xj = xs.get(m - i)
            if x2i is None or xj is None or not x2i or not xj:
                continue
            acc -= x2i * xj
        acc += x2.get(m, 0)
        acc += 10 * xs.get(m, 0)
        if m == 0:
            acc += 20
        return acc

    def r2(e):
        """[w^e] of (D(x) - kappa*(2y+1)*S), unknowns treated as 0."""
        acc = Fraction(0)
        xe = xs.get(e)
        if xe is not None:
            acc += e * xe
        conv = Fraction(0)
        for j in range(-3, e):  # y_j * S_{e-j}; S starts at exponent 1
            yj = ys.get(j)
            if yj is None or not yj:
                continue
            se = S[e - j] if e - j <= smax else None
            if se is None:
                raise RuntimeError("eta product truncation too short")
            conv += yj * se
        se = S[e] if 0 < e <= smax else Fraction(0)
        acc -= kappa * (2 * conv + se)
        return acc

    # seed consistency at m = -6: y_{-3}^2 = x_{-2}^3
    assert ys[-3] ** 2 == xs[-2] ** 3

    for m in range(-5, T - 5):
        # provisional (x^2)_{m+2} over the known window
        x2prov = Fraction(0)
        for a in range(-2, m + 4):
            b = m + 2 - a
            if b < a:
                break
            xa, xb = xs.get(a), xs.get(b)
            if xa is None or xb is None:
                continue
            x2prov += xa * xb if a == b else 2 * xa * xb
        v1 = r1(m, x2prov)
        v2 = r2(m + 4)
        if m == -4:
            # exponent 0 in the derivation relation: x_0 drops out
            y_new = v2 / (2 * kappa * S[1])
            x_new = (2 * y_new + v1) / 3
        else:
            denom = 2 - Fraction(6) * kappa * S[1] / (m + 4)
            y_new = -(v1 + Fraction(3) * v2 / (m + 4)) / denom
            x_new = (2 * kappa * S[1] * y_new - v2) / (m + 4)
        ys[m + 3] = y_new
        xs[m + 4] = x_new
        x2[m + 2] = x2prov + 2 * x_new

    x_coeffs = [xs[k] for k in range(-2, T - 1)]
    y_coeffs = [ys[k] for k in range(-3, T - 2)]
    return x_coeffs, y_coeffs, kappa


def _xy_arrays(T):
    if _XY_CACHE["T"] < T:
        xs, ys, kappa = _compute_xy(T)
        _XY_CACHE.update(T=T, xs=xs, ys=ys, kappa=kappa)
    return _XY_CACHE["xs"], _XY_CACHE["ys"], _XY_CACHE["kappa"]


def expand_xy(T, verify=True):
    """w-expansions of x and y at width 11, with T terms beyond the lead."""
    if T < 10:
        raise ValueError("T must be at least 10")
    xs, ys, kappa = _xy_arrays(T)
    x = LaurentSeries(WIDTH, -2, xs[:T + 1], None, T - 1)
    y = LaurentSeries(WIDTH, -3, ys[:T + 1], None, T - 2)
    if verify:
        _verify_relations(x, y, kappa, T)
    return x, y


def _verify_relations(x, y, kappa, T):
    """Abort if either defining relation fails at any computed order."""
    from .qseries import derivation_wdw
    lhs = y * y + y
    rhs = x * x * x - x * x - x.scalar_mul(10)
    diff = lhs - rhs
    for k in range(diff.lead, diff.prec):
        c = diff.coefficient(k)
        expected = Fraction(-20) if k == 0 else Fraction(0)
        if c != expected:
            raise RuntimeError(
                f"curve relation fails at order {k}: inconsistency between the "
                "two defining relations (implementation bug)")
    s = weight2_eta_product(T + 8)
    lhs2 = derivation_wdw(x)
    one = LaurentSeries(WIDTH, 0, [1], None, prec=y.prec + 3)
    rhs2 = ((y + y + one) * s).scalar_mul(kappa)
    d2 = lhs2 - rhs2
    for k in range(d2.lead, min(d2.prec, lhs2.prec)):
        if d2.coefficient(k) != 0:
            raise RuntimeError(
                f"derivation relation fails at order {k}: inconsistency between "
                "the two defining relations (implementation bug)")


def expansion_report(T=50):
    """Run parameters for the x/y expansion (kappa is derived, not assumed)."""
    x, y = expand_xy(T)
    _, _, kappa = _xy_arrays(T)
    return {
        "kappa": kappa,
        "x_head": x.coefficients(-2, 9),
        "y_head": y.coefficients(-3, 8),
        "integral_to": T,
    }


# ----------------------------------------------------------------------
# Expansion of curve functions.
# ----------------------------------------------------------------------

def expand_on_curve(F, T):
    """Substitute x(w), y(w) into a CurveFunction; exact coefficients with at
    least T terms beyond the leading exponent."""
    degs = max(len(F.u), len(F.v) + 1, len(F.den))
    margin = 2 * degs + F.pole_order_at_O() + 10
    x, y = expand_xy(T + margin, verify=False)
    field = F.curve.field
    if field is not None:
        x = x.scalar_mul(field.one())
        y = y.scalar_mul(field.one())

    def poly_at_x(coeffs):
        if not coeffs:
            return LaurentSeries(WIDTH, 0, [], field, prec=x.prec)
        acc = LaurentSeries(WIDTH, 0, [coeffs[-1]], field, prec=x.prec + 100)
        for c in reversed(coeffs[:-1]):
            acc = acc * x
            acc = acc + LaurentSeries(WIDTH, 0, [c], field, prec=acc.prec)
        return acc

    num = poly_at_x(list(F.u))
    if F.v:
        num = num + poly_at_x(list(F.v)) * y
    den = poly_at_x(list(F.den))
    result = num * den.invert()
    n = F.pole_order_at_O()
    want = -n + T + 1
    if result.prec < want:
        raise ValueError(f"truncation shortfall: have prec {result.prec}, "
                         f"need {want}; increase the expansion margin")
    return result.truncate(want)


# ----------------------------------------------------------------------
# Character-group catalogs.
# ----------------------------------------------------------------------

@dataclass
class GroupCatalogEntry:
    """One cyclic character group of Gamma^0(11): the field of modular
    functions is generated by the root_degree-th root of generator_function."""
    label: str
    index: int
    generator_function: CurveFunction
    root_degree: int
    coefficient_field: object  # NumberField or None for rational entries
    congruence_flag: str       # 'known-congruence' | 'expected-noncongruence'
    point: object              # the torsion point with div(f) = n(P) - n(O)

    def expansion(self, T):
        return expand_on_curve(self.generator_function, T)


def _interpolate(points):
    """Lagrange interpolation through exact (s, value) points."""
    n = len(points)
    out = [Fraction(0)] * n
    for i, (si, vi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (sj, _) in enumerate(points):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                new[k] += -sj * b
                new[k + 1] += b
            basis = new
            denom *= si - sj
        for k, b in enumerate(basis):
            out[k] += vi * b / denom
    return qp_trim(out)


class QPointData:
    """The 5-torsion point Q outside <P>, over the flattened field
    K = Q(x_Q + c*y_Q), constructed from the quadratic factor of psi_5."""

    def __init__(self, curve):
        _, irrational = five_torsion_factors(curve)
        quad = next(f for f in irrational if len(f) == 3)
        q2 = qp_monic([Fraction(c) for c in quad])
        g = [Fraction(-20), Fraction(-10), Fraction(-1), Fraction(1)]
        for c in range(1, 8):
            # resultant_x(q2(x), (s-x)^2 + c(s-x) - c^2 g(x)) by interpolation
            def a_poly(s0, c=c):
                return qp_trim([s0 * s0 + c * s0 + 20 * c * c,
                                -2 * s0 - c + 10 * c * c,
                                1 + c * c,
                                Fraction(-c * c)])
            pts = [(Fraction(s0), qp_resultant(q2, a_poly(Fraction(s0))))
                   for s0 in range(5)]
            m_c = _interpolate(pts)
            m_c = qp_monic(m_c)
            if len(m_c) != 5:
                continue
            if qp_gcd(m_c, [i * co for i, co in enumerate(m_c)][1:]) != [1]:
                continue  # not squarefree; collision of conjugates
            if not poly_is_irreducible_q(m_c):
                continue
            mint, d = qp_integerize_monic(m_c)
            K = NumberField(mint, name='s')
            eta = K.gen() / d  # x_Q + c*y_Q
            zero = K.zero()
            q2k = [K.from_rational(v) for v in q2]
            apk = [eta * eta + c * eta + 20 * c * c,
                   -2 * eta - c + 10 * c * c,
                   K.from_rational(1 + c * c),
                   K.from_rational(-c * c)]
            gtail = dp_gcd_monic(q2k, apk, zero)
            if len(gtail) != 2:
                continue
            x_q = -gtail[0]
            y_q = (eta - x_q) / c
            self.field = K
            self.curve = curve.base_change(K)
            self.quadratic = q2
            self.c = c
            self.x_q = x_q
            self.y_q = y_q
            self.q_point = self.curve.point(x_q, y_q)
            if point_order(self.q_point, 6) != 5:
                raise RuntimeError("constructed Q is not of order 5")
            return
        raise RuntimeError("no primitive element x + c*y found for small c")


_CATALOG_CACHE = {}


def build_catalog(index):
    """Catalog of the cyclic character groups of a given index.

    index 2: the three 2-torsion entries x - x_{P_i}, all presented over one
    abstract cubic field (the three labels are its three embeddings).
    index 5: f_P over Q, f_Q (the Gamma^1(11) entry, known congruence) and the
    four translates f_{Q+iP} over the flattened quartic field of Q.
    """
    if index in _CATALOG_CACHE:
        return _CATALOG_CACHE[index]
    curve = x11_curve()
    entries = []
    if index == 2:
        cubic = torsion_x_locus(2, curve)
        mint, d = qp_integerize_monic(cubic)
        K = NumberField(mint, name='u')
        ck = curve.base_change(K)
        xp = K.gen() / d
        p2 = ck.point(xp, Fraction(-1, 2))
        f = function_with_divisor(2, p2)
        chk = verify_divisor(f, 2, p2)
        if not chk.ok:
            raise RuntimeError(f"index-2 generator failed verification: {chk.detail}")
        for i in (1, 2, 3):
            entries.append(GroupCatalogEntry(
                label=f"fP{i}", index=2, generator_function=f, root_degree=2,
                coefficient_field=K, congruence_flag='expected-noncongruence',
                point=p2))
    elif index == 5:
        p = curve.point(5, 5)
        f_p = function_with_divisor(5, p)
        chk = verify_divisor(f_p, 5, p)
        if not chk.ok:
            raise RuntimeError(f"f_P failed verification: {chk.detail}")
        entries.append(GroupCatalogEntry(
            label="fP", index=5, generator_function=f_p, root_degree=5,
            coefficient_field=None, congruence_flag='expected-noncongruence',
            point=p))
        qd = QPointData(curve)
        pk = qd.curve.point(5, 5)
        f_q = function_with_divisor(5, qd.q_point)
        chk = verify_divisor(f_q, 5, qd.q_point)
        if not chk.ok:
            raise RuntimeError(f"f_Q failed verification: {chk.detail}")
        entries.append(GroupCatalogEntry(
            label="fQ", index=5, generator_function=f_q, root_degree=5,
            coefficient_field=qd.field, congruence_flag='known-congruence',
            point=qd.q_point))
        quartic = torsion_x_locus(5, curve)
        xsum = None
        for i in (1, 2, 3, 4):
            r = qd.q_point + i * pk
            f_r = function_with_divisor(5, r)
            chk = verify_divisor(f_r, 5, r)
            if not chk.ok:
                raise RuntimeError(f"f_Q+{i}P failed verification: {chk.detail}")
            mp = min_poly(r.x)
            if len(mp) != 5:
                raise RuntimeError("x(Q+iP) does not have degree 4")
            xsum = r.x if xsum is None else xsum + r.x
            entries.append(GroupCatalogEntry(
                label=f"fQ+{i}P", index=5, generator_function=f_r, root_degree=5,
                coefficient_field=qd.field,
                congruence_flag='expected-noncongruence', point=r))
        # trace check: the unit-reduction quartic has root sum -1
        assert quartic[3] == 1
    else:
        raise ValueError("catalogs are built for index 2 and 5 only")
    _CATALOG_CACHE[index] = entries
    return entries


def catalog_export(entries, T=20):
    """Text records: label, index, field, function coefficients, and the first
    T expansion coefficients in the series serialization format."""
    from .qseries import serialize_series
    blocks = []
    for e in entries:
        lines = [f"entry {e.label}",
                 f"index {e.index}",
                 f"root_degree {e.root_degree}",
                 f"congruence {e.congruence_flag}"]
        if e.coefficient_field is None:
            lines.append("field rational")
        else:
            lines.append("field " + ",".join(str(c) for c in e.coefficient_field.defining_poly))

        def poly_str(cs):
            return ";".join(
                (str(c) if not hasattr(c, 'coords') else
                 ",".join(f"{x.numerator}/{x.denominator}" for x in c.coords()))
                for c in cs)
        lines.append("u " + poly_str(e.generator_function.u))
        lines.append("v " + poly_str(e.generator_function.v))
        lines.append("den " + poly_str(e.generator_function.den))
        series = e.expansion(T)
        lines.append(serialize_series(series).rstrip("\n"))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


# ----------------------------------------------------------------------
# The G5 eta family and its roots.
# ----------------------------------------------------------------------

G5_QUOTIENT = EtaQuotient([(Fraction(1, 11), 12), (1, -12)])

EtaRoot = namedtuple('EtaRoot', ['lead', 'unit'])


def g5_series(T):
    """G5 = (eta(z/11)/eta(z))^12 = w^-5 (1 - 12w + 54w^2 - ...)."""
    s = eta_quotient_expand(G5_QUOTIENT, WIDTH, T)
    assert s.lead == -5
    return s


def g5_family(n, T):
    """G5 and, when n divides 12, the closed-form eta quotient for its n-th
    root, e.g. n = 12 gives eta(z/11)/eta(z).

    The root's leading exponent -5/n is fractional in w = q^(1/11), so the
    closed form is returned as (lead, unit product part at width 11); the
    formal root of G5's unit part must match the unit coefficients exactly.
    """
    g5 = g5_series(T)
    root = None
    if n in (1, 2, 3, 4, 6, 12):
        k = 12 // n
        lead, unit = eta_unit_product(
            EtaQuotient([(Fraction(1, 11), k), (1, -k)]), WIDTH, T)
        root = EtaRoot(lead, unit)
    return g5, root
